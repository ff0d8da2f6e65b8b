"""Labelled graphs and a deterministic, decoder-faithful traversal.

A Graph is immutable once built: vertices are dense ids 0..n-1 with labels,
edges carry labels, and per-vertex adjacency lists preserve the order in
which edges were supplied.  `traverse` walks one connected component
depth-first and emits a stream of vertex and edge events; callbacks are
invoked *before* the state change their event causes, so a callback sees
exactly what a decoder replaying the stream would know at that point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Invalid graph construction or use."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same vertex pair appears twice in the edge list."""


class VertexRangeError(GraphError):
    """A vertex id is outside 0..n-1."""


class Edge(NamedTuple):
    u: int
    v: int
    label: Any


class OrientedEdge(NamedTuple):
    """One edge as seen from one endpoint (tail -> head)."""

    edge: int
    tail: int
    head: int
    label: Any


@dataclass(frozen=True)
class Graph:
    """Immutable labelled graph.  Build with `build_graph`, not directly."""

    directed: bool
    labels: tuple
    edges: tuple[Edge, ...]
    # adjacency[v]: OrientedEdge slots with tail == v, in input edge order.
    # Undirected edges appear in both endpoints' lists; directed edges only
    # in the source's list (so len(adjacency[v]) is the out-degree).
    adjacency: tuple[tuple[OrientedEdge, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, |V|={self.vertex_count}, |E|={self.edge_count})"


def build_graph(directed: bool, labels: Sequence, edges: Iterable[tuple]) -> Graph:
    """Validate and construct a Graph.

    `labels[i]` is the label of vertex i; `edges` yields (u, v, label)
    triples.  Self-loops, duplicate edges (either orientation counts as a
    duplicate in the undirected case) and out-of-range vertex ids each
    raise their own error type.
    """
    labels = tuple(labels)
    n = len(labels)
    edge_list: list[Edge] = []
    adjacency: list[list[OrientedEdge]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v, label in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge between {u} and {v}")
        seen.add(key)
        eid = len(edge_list)
        edge_list.append(Edge(u, v, label))
        adjacency[u].append(OrientedEdge(eid, u, v, label))
        if not directed:
            adjacency[v].append(OrientedEdge(eid, v, u, label))
    return Graph(
        directed=directed,
        labels=labels,
        edges=tuple(edge_list),
        adjacency=tuple(tuple(slots) for slots in adjacency),
    )


def max_edges(n: int, directed: bool, self_loops: bool) -> int:
    """Number of distinct edges an n-vertex graph of this kind can hold."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if directed:
        return n * n if self_loops else n * (n - 1)
    return n * (n + 1) // 2 if self_loops else n * (n - 1) // 2


# -- connected components ----------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One connected component, re-densified to ids 0..k-1.

    `original_ids[new_id]` maps back to the vertex id in the parent graph.
    """

    graph: Graph
    original_ids: tuple[int, ...]


def connected_components(g: Graph) -> list[Component]:
    """Partition into connected components (weak connectivity if directed)."""
    n = g.vertex_count
    assigned = [False] * n
    # Undirected view for reachability even when g is directed.
    neigh: list[list[int]] = [[] for _ in range(n)]
    for u, v, _ in g.edges:
        neigh[u].append(v)
        neigh[v].append(u)
    components: list[Component] = []
    for start in range(n):
        if assigned[start]:
            continue
        members = [start]
        assigned[start] = True
        queue = [start]
        while queue:
            x = queue.pop()
            for y in neigh[x]:
                if not assigned[y]:
                    assigned[y] = True
                    members.append(y)
                    queue.append(y)
        members.sort()
        remap = {old: new for new, old in enumerate(members)}
        sub_edges = [
            (remap[u], remap[v], label)
            for u, v, label in g.edges
            if u in remap
        ]
        sub = build_graph(g.directed, [g.labels[m] for m in members], sub_edges)
        components.append(Component(graph=sub, original_ids=tuple(members)))
    return components


# -- traversal ---------------------------------------------------------------


class VertexStatus(enum.Enum):
    UNVISITED = "unvisited"
    VISITING = "visiting"
    VISITED = "visited"


@dataclass(frozen=True)
class FreshVertex:
    """The edge led to a vertex not seen before.

    The arriving vertex id is carried for bookkeeping only; predictive
    models must not condition on it (a decoder would simply assign the
    next id itself).
    """

    vertex: int


@dataclass(frozen=True)
class LoopClosure:
    """The edge returned to a vertex already on the visiting stack."""

    target: int
    candidates: tuple[int, ...]


@dataclass(frozen=True)
class VertexEvent:
    vertex: int
    label: Any
    degree: int
    # Reversed incoming edge (this vertex -> the vertex we came from);
    # None for the traversal root.
    incoming: OrientedEdge | None


@dataclass(frozen=True)
class EdgeEvent:
    edge: int
    source: int
    label: Any
    resolution: FreshVertex | LoopClosure


TraversalStep = VertexEvent | EdgeEvent


class TraversalState:
    """Live, read-only view of a traversal in progress.

    Exposes only decoder-visible information: the visiting stack, the
    visited list, and which edges have been traversed (closed) so far.
    Callbacks must not mutate it.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.visiting: list[int] = []
        self.visited: list[int] = []
        self._status = [VertexStatus.UNVISITED] * g.vertex_count
        self._closed = [False] * g.edge_count
        self._closed_count = [0] * g.vertex_count

    def status_of(self, v: int) -> VertexStatus:
        return self._status[v]

    def is_closed(self, edge: int) -> bool:
        return self._closed[edge]

    def closed_count(self, v: int) -> int:
        return self._closed_count[v]

    def closed_edges(self, v: int) -> tuple[OrientedEdge, ...]:
        """Traversed edges at v, in adjacency-list order."""
        return tuple(s for s in self.graph.adjacency[v] if self._closed[s.edge])

    # internal transitions -----------------------------------------------

    def _push(self, v: int) -> None:
        self._status[v] = VertexStatus.VISITING
        self.visiting.append(v)

    def _pop(self) -> None:
        v = self.visiting.pop()
        self._status[v] = VertexStatus.VISITED
        self.visited.append(v)

    def _close(self, slot: OrientedEdge) -> None:
        self._closed[slot.edge] = True
        self._closed_count[slot.tail] += 1
        if not self.graph.directed:
            self._closed_count[slot.head] += 1

    def _first_open(self, v: int) -> OrientedEdge | None:
        for slot in self.graph.adjacency[v]:
            if not self._closed[slot.edge]:
                return slot
        return None


def loop_candidates(state: TraversalState, source: int) -> tuple[int, ...]:
    """Vertices a new edge out of `source` could legally close a loop to.

    Decoder-computable: visiting vertices other than the source whose
    announced degree is not yet filled and which share no traversed edge
    with the source (parallel edges are impossible).  Listed in stack
    order, bottom first.
    """
    g = state.graph
    adjacent = {s.head for s in g.adjacency[source] if state.is_closed(s.edge)}
    return tuple(
        w
        for w in state.visiting
        if w != source
        and state.closed_count(w) < g.degree(w)
        and w not in adjacent
    )


def traverse(
    g: Graph,
    root: int,
    on_vertex: Callable[[TraversalState, VertexEvent], Any] | None = None,
    on_edge: Callable[[TraversalState, EdgeEvent], Any] | None = None,
) -> list:
    """Depth-first traversal of root's component, one event per element.

    Every vertex of the component yields one VertexEvent and every edge
    one EdgeEvent.  The visiting list behaves as a stack: the top vertex's
    first untraversed edge (in adjacency order) is taken next; a vertex is
    popped, becoming VISITED, when none remain.  Edges already traversed
    from the other side are skipped, so no edge fires twice.

    Returns the list of callback results in event order (the events
    themselves when a callback is omitted).
    """
    if g.directed:
        raise GraphError("traversal is defined for undirected graphs")
    if not (0 <= root < g.vertex_count):
        raise VertexRangeError(f"root {root} outside 0..{g.vertex_count - 1}")
    state = TraversalState(g)
    results: list = []

    def emit_vertex(v: int, incoming: OrientedEdge | None) -> None:
        event = VertexEvent(v, g.labels[v], g.degree(v), incoming)
        results.append(on_vertex(state, event) if on_vertex else event)
        state._push(v)

    emit_vertex(root, None)
    while state.visiting:
        u = state.visiting[-1]
        slot = state._first_open(u)
        if slot is None:
            state._pop()
            continue
        w = slot.head
        if state.status_of(w) is VertexStatus.UNVISITED:
            resolution: FreshVertex | LoopClosure = FreshVertex(w)
        else:
            resolution = LoopClosure(w, loop_candidates(state, u))
        event = EdgeEvent(slot.edge, u, slot.label, resolution)
        results.append(on_edge(state, event) if on_edge else event)
        state._close(slot)
        if isinstance(resolution, FreshVertex):
            emit_vertex(w, OrientedEdge(slot.edge, w, u, slot.label))
    return results
