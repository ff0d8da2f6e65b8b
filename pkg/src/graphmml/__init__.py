"""Minimum-message-length pricing of labelled graphs.

The package measures the information content of an undirected labelled
graph in bits, both on its own and relative to background graphs a
receiver is assumed to know already.  Supporting pieces: combinatorial
baseline codes, succinct tree codecs, automorphism counting, a SMILES
reader for molecular graphs, and a command-line front end.
"""

from .codes import (
    CodeReport,
    Fork,
    GeneralTree,
    Leaf,
    SizeLimitError,
    StrictBinaryTree,
    TreeCodeError,
    adaptive_binomial_bits,
    automorphism_count,
    directed_row_binomial_bits,
    general_tree_decode,
    general_tree_encode,
    naive_bits,
    ordering_surplus_bits,
    strict_binary_tree_decode,
    strict_binary_tree_encode,
    undirected_matrix_bits,
)
from .context import (
    ChainResult,
    ContextError,
    EdgeOutcome,
    InfoResult,
    PredictiveModel,
    ScoredMatch,
    StepRecord,
    TableResult,
    VertexOutcome,
    chain_information,
    conditional_table,
    edge_matches,
    edge_outcome_space,
    information_content,
    label_text,
    match_edge,
    match_vertex,
    outcome_text,
    scored_matches_to_model,
    vertex_matches,
    vertex_outcome_space,
)
from .graph import (
    Component,
    DuplicateEdgeError,
    Edge,
    EdgeEvent,
    FreshVertex,
    Graph,
    GraphError,
    LoopClosure,
    OrientedEdge,
    SelfLoopError,
    TraversalState,
    VertexEvent,
    VertexRangeError,
    VertexStatus,
    build_graph,
    connected_components,
    loop_candidates,
    max_edges,
    traverse,
)
from .smiles import (
    DEFAULT_VALENCES,
    Bond,
    Element,
    SmilesError,
    ValenceError,
    infer_implicit_bonds,
    parse_smiles,
    read_molecule,
    smiles_to_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Bond",
    "ChainResult",
    "CodeReport",
    "Component",
    "ContextError",
    "DEFAULT_VALENCES",
    "DuplicateEdgeError",
    "Edge",
    "EdgeEvent",
    "EdgeOutcome",
    "Element",
    "Fork",
    "FreshVertex",
    "GeneralTree",
    "Graph",
    "GraphError",
    "InfoResult",
    "Leaf",
    "LoopClosure",
    "OrientedEdge",
    "PredictiveModel",
    "ScoredMatch",
    "SelfLoopError",
    "SizeLimitError",
    "SmilesError",
    "StepRecord",
    "StrictBinaryTree",
    "TableResult",
    "TraversalState",
    "TreeCodeError",
    "ValenceError",
    "VertexEvent",
    "VertexOutcome",
    "VertexRangeError",
    "VertexStatus",
    "adaptive_binomial_bits",
    "automorphism_count",
    "build_graph",
    "chain_information",
    "conditional_table",
    "connected_components",
    "directed_row_binomial_bits",
    "edge_matches",
    "edge_outcome_space",
    "general_tree_decode",
    "general_tree_encode",
    "infer_implicit_bonds",
    "information_content",
    "label_text",
    "loop_candidates",
    "match_edge",
    "match_vertex",
    "max_edges",
    "naive_bits",
    "ordering_surplus_bits",
    "outcome_text",
    "parse_smiles",
    "read_molecule",
    "scored_matches_to_model",
    "smiles_to_graph",
    "strict_binary_tree_decode",
    "strict_binary_tree_encode",
    "traverse",
    "undirected_matrix_bits",
    "vertex_matches",
    "vertex_outcome_space",
]
