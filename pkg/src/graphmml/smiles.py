"""A small SMILES reader producing labelled graphs of heavy atoms.

Accepted subset: the organic-subset atoms C N O P S Br Cl I (plus any of
the nine supported elements in brackets), aromatic lowercase c n o s,
bonds - = # :, branches, ring closures 1-9 and %nn, and bracket
annotations for charge, chirality and explicit hydrogen counts.  The
annotations are kept in the parse tree but play no part in the graph.
Everything else (isotopes, wildcards, multi-component dots, stereo
slashes, other elements) is rejected with a position-stamped error.

Aromaticity here is purely syntactic: a bond with no written symbol is
aromatic when both of its atoms were written lowercase, single otherwise.
No chemical perception is attempted.
"""

from __future__ import annotations

import copy
import enum
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .graph import Graph, build_graph


class SmilesError(ValueError):
    """The string is outside the accepted SMILES subset or malformed."""


class ValenceError(SmilesError):
    """An atom's degree exceeds its configured valence limit."""


class Element(str, enum.Enum):
    HYDROGEN = "H"
    CARBON = "C"
    NITROGEN = "N"
    OXYGEN = "O"
    PHOSPHOROUS = "P"
    SULPHUR = "S"
    BROMINE = "Br"
    CHLORINE = "Cl"
    IODINE = "I"

    @property
    def symbol(self) -> str:
        return self.value


class Bond(str, enum.Enum):
    NONE = "none"
    SINGLE = "single"
    DOUBLE = "double"
    TRIPLE = "triple"
    AROMATIC = "aromatic"


# Valence limits used when the caller supplies none.
DEFAULT_VALENCES: dict[Element, int] = {
    Element.HYDROGEN: 1,
    Element.CARBON: 4,
    Element.NITROGEN: 4,
    Element.OXYGEN: 2,
    Element.PHOSPHOROUS: 5,
    Element.SULPHUR: 6,
    Element.BROMINE: 1,
    Element.CHLORINE: 1,
    Element.IODINE: 1,
}

ValenceConfig = Mapping[Element, int]

_BOND_SYMBOLS = {"-": Bond.SINGLE, "=": Bond.DOUBLE, "#": Bond.TRIPLE, ":": Bond.AROMATIC}
_ORGANIC = {
    "Cl": (Element.CHLORINE, False),
    "Br": (Element.BROMINE, False),
    "C": (Element.CARBON, False),
    "N": (Element.NITROGEN, False),
    "O": (Element.OXYGEN, False),
    "P": (Element.PHOSPHOROUS, False),
    "S": (Element.SULPHUR, False),
    "I": (Element.IODINE, False),
    "c": (Element.CARBON, True),
    "n": (Element.NITROGEN, True),
    "o": (Element.OXYGEN, True),
    "s": (Element.SULPHUR, True),
}

_BRACKET = re.compile(
    r"""\[
        (?P<symbol>Br|Cl|[HCNOPSI]|[cnos])
        (?P<chiral>@@|@)?
        (?P<hcount>H\d*)?
        (?P<charge>\+\d+|-\d+|\++|-+)?
        \]""",
    re.VERBOSE,
)


# -- parse tree ----------------------------------------------------------------


@dataclass
class SmilesAtom:
    """One atom occurrence; `index` is its document-order position."""

    index: int
    element: Element
    aromatic: bool
    charge: int = 0
    chirality: str | None = None
    h_count: int | None = None
    bracket: bool = False


@dataclass
class RingRef:
    """One ring-closure digit on an atom; bond is None until inferred."""

    digit: int
    bond: Bond | None = None


@dataclass
class AtomNode:
    atom: SmilesAtom
    ring_refs: list[RingRef] = field(default_factory=list)
    # Branches and the chain continuation, in written order; each child
    # is (bond-to-child, subtree), bond None until inferred.
    children: list[tuple[Bond | None, "AtomNode"]] = field(default_factory=list)


@dataclass
class SmilesAst:
    root: AtomNode
    atoms: list[SmilesAtom]


# -- tokenizer -----------------------------------------------------------------

_T_ATOM, _T_BOND, _T_RING, _T_OPEN, _T_CLOSE = "atom", "bond", "ring", "open", "close"


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "[":
            end = text.find("]", i)
            if end < 0:
                raise SmilesError(f"unterminated bracket atom at position {i}")
            m = _BRACKET.fullmatch(text[i : end + 1])
            if not m:
                raise SmilesError(f"malformed bracket atom {text[i:end + 1]!r} at position {i}")
            tokens.append((_T_ATOM, _bracket_atom(m), i))
            i = end + 1
        elif text[i : i + 2] in _ORGANIC:
            tokens.append((_T_ATOM, _ORGANIC[text[i : i + 2]] + (False,), i))
            i += 2
        elif ch in _ORGANIC:
            tokens.append((_T_ATOM, _ORGANIC[ch] + (False,), i))
            i += 1
        elif ch in _BOND_SYMBOLS:
            tokens.append((_T_BOND, _BOND_SYMBOLS[ch], i))
            i += 1
        elif ch.isdigit():
            if ch == "0":
                raise SmilesError(f"ring closure digit 0 at position {i} (use %nn)")
            tokens.append((_T_RING, int(ch), i))
            i += 1
        elif ch == "%":
            if not text[i + 1 : i + 3].isdigit():
                raise SmilesError(f"'%' must be followed by two digits at position {i}")
            tokens.append((_T_RING, int(text[i + 1 : i + 3]), i))
            i += 3
        elif ch == "(":
            tokens.append((_T_OPEN, None, i))
            i += 1
        elif ch == ")":
            tokens.append((_T_CLOSE, None, i))
            i += 1
        elif ch == ".":
            raise SmilesError(f"multi-component '.' at position {i} is not supported")
        elif ch in "/\\":
            raise SmilesError(f"stereo bond {ch!r} at position {i} is not supported")
        else:
            raise SmilesError(f"unexpected character {ch!r} at position {i}")
    return tokens


def _bracket_atom(m: re.Match) -> tuple[Element, bool, bool, int, str | None, int | None]:
    element, aromatic = _ORGANIC.get(m["symbol"]) or (Element.HYDROGEN, False)
    charge_text = m["charge"]
    if charge_text is None:
        charge = 0
    elif charge_text in ("+", "-") or charge_text.strip("+-") == "":
        charge = len(charge_text) * (1 if charge_text[0] == "+" else -1)
    else:
        charge = int(charge_text)
    hcount_text = m["hcount"]
    if hcount_text is None:
        h_count = None
    else:
        h_count = int(hcount_text[1:]) if len(hcount_text) > 1 else 1
    return (element, aromatic, True, charge, m["chiral"], h_count)


# -- parser --------------------------------------------------------------------


class _Stream:
    def __init__(self, tokens: list, text: str):
        self.tokens = tokens
        self.text = text
        self.pos = 0

    def peek(self, ahead: int = 0):
        j = self.pos + ahead
        return self.tokens[j] if j < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok


def parse_smiles(text: str) -> SmilesAst:
    """Parse a SMILES string into its tree of atoms, branches and ring refs."""
    text = text.strip()
    if not text:
        raise SmilesError("empty SMILES string")
    stream = _Stream(_tokenize(text), text)
    atoms: list[SmilesAtom] = []
    root = _parse_chain(stream, atoms)
    kind, _, at = stream.peek()
    if kind is not None:
        raise SmilesError(f"unexpected {kind} token at position {at}")
    _check_ring_digits(root)
    return SmilesAst(root=root, atoms=atoms)


def _parse_atom_unit(stream: _Stream, atoms: list[SmilesAtom]) -> AtomNode:
    kind, value, at = stream.take()
    if kind is not _T_ATOM:
        raise SmilesError(f"expected an atom at position {at}")
    element, aromatic, bracket, charge, chirality, h_count = (
        value if len(value) == 6 else (*value, 0, None, None)
    )
    atom = SmilesAtom(
        index=len(atoms),
        element=element,
        aromatic=aromatic,
        charge=charge,
        chirality=chirality,
        h_count=h_count,
        bracket=bracket,
    )
    atoms.append(atom)
    node = AtomNode(atom=atom)
    while True:
        kind, value, at = stream.peek()
        if kind is _T_RING:
            stream.take()
            node.ring_refs.append(RingRef(digit=value))
        elif kind is _T_BOND and stream.peek(1)[0] is _T_RING:
            stream.take()
            _, digit, _ = stream.take()
            node.ring_refs.append(RingRef(digit=digit, bond=value))
        else:
            return node


def _parse_chain(stream: _Stream, atoms: list[SmilesAtom]) -> AtomNode:
    head = _parse_atom_unit(stream, atoms)
    current = head
    while True:
        kind, value, at = stream.peek()
        if kind is _T_OPEN:
            stream.take()
            bond = None
            if stream.peek()[0] is _T_BOND:
                bond = stream.take()[1]
            child = _parse_chain(stream, atoms)
            kind, _, at = stream.take()
            if kind is not _T_CLOSE:
                raise SmilesError(f"unbalanced parenthesis at position {at}")
            current.children.append((bond, child))
        elif kind is _T_BOND:
            stream.take()
            nxt = stream.peek()[0]
            if nxt is not _T_ATOM:
                raise SmilesError(f"bond symbol at position {at} is not followed by an atom")
            unit = _parse_atom_unit(stream, atoms)
            current.children.append((value, unit))
            current = unit
        elif kind is _T_ATOM:
            unit = _parse_atom_unit(stream, atoms)
            current.children.append((None, unit))
            current = unit
        else:
            return head


def _walk(node: AtomNode) -> Iterator[AtomNode]:
    """Nodes in document order (an atom precedes its branches)."""
    yield node
    for _, child in node.children:
        yield from _walk(child)


def _check_ring_digits(root: AtomNode) -> None:
    open_digits: dict[int, int] = {}
    for node in _walk(root):
        for ref in node.ring_refs:
            if ref.digit in open_digits:
                del open_digits[ref.digit]
            else:
                open_digits[ref.digit] = node.atom.index
    if open_digits:
        digit = min(open_digits)
        raise SmilesError(f"unmatched ring closure digit {digit}")


def _ring_pairs(root: AtomNode) -> list[tuple[AtomNode, RingRef, AtomNode, RingRef]]:
    """Pair each ring digit's opening occurrence with its closing one.

    A digit is reusable once closed.  Pairs come out in closing order,
    which is the order the ring bonds occur in the written string.
    """
    open_refs: dict[int, tuple[AtomNode, RingRef]] = {}
    pairs = []
    for node in _walk(root):
        for ref in node.ring_refs:
            if ref.digit in open_refs:
                a_node, a_ref = open_refs.pop(ref.digit)
                pairs.append((a_node, a_ref, node, ref))
            else:
                open_refs[ref.digit] = (node, ref)
    return pairs


# -- bond inference and graph construction --------------------------------------


def infer_implicit_bonds(ast: SmilesAst) -> SmilesAst:
    """Return a copy of the tree with every bond slot filled in.

    Junctions and ring closures with no written symbol become aromatic
    when both atoms are aromatic, single otherwise.  Written symbols are
    preserved; a ring closure written with conflicting symbols at its two
    ends is an error.
    """
    ast = copy.deepcopy(ast)
    for node in _walk(ast.root):
        node.children = [
            (bond if bond is not None else _implied(node.atom, child.atom), child)
            for bond, child in node.children
        ]
    for a_node, a_ref, b_node, b_ref in _ring_pairs(ast.root):
        if a_ref.bond is not None and b_ref.bond is not None and a_ref.bond != b_ref.bond:
            raise SmilesError(
                f"ring closure {a_ref.digit} has conflicting bond symbols "
                f"({a_ref.bond.value} vs {b_ref.bond.value})"
            )
        bond = a_ref.bond or b_ref.bond or _implied(a_node.atom, b_node.atom)
        a_ref.bond = bond
        b_ref.bond = bond
    return ast


def _implied(a: SmilesAtom, b: SmilesAtom) -> Bond:
    return Bond.AROMATIC if a.aromatic and b.aromatic else Bond.SINGLE


def smiles_to_graph(ast: SmilesAst) -> Graph:
    """Graph of the heavy atoms: bonds must already be inferred.

    Vertex ids follow the atoms' order in the string, hydrogens skipped;
    explicit hydrogens and every bond touching one are dropped.  Edges
    appear in written order: each atom's closing ring bonds, then its
    junctions, document order throughout.
    """
    heavy: dict[int, int] = {}
    labels: list[Element] = []
    for atom in ast.atoms:
        if atom.element is not Element.HYDROGEN:
            heavy[atom.index] = len(labels)
            labels.append(atom.element)

    closing: dict[int, list[tuple[AtomNode, RingRef]]] = {}
    for a_node, a_ref, b_node, b_ref in _ring_pairs(ast.root):
        if b_ref.bond is None:
            raise SmilesError("bonds not inferred; run infer_implicit_bonds first")
        if a_node.atom.index == b_node.atom.index:
            raise SmilesError(f"ring closure {a_ref.digit} forms a self-loop")
        closing.setdefault(b_node.atom.index, []).append((a_node, b_ref))

    edges: list[tuple[int, int, Bond]] = []
    seen: set[tuple[int, int]] = set()

    def add_edge(a: SmilesAtom, b: SmilesAtom, bond: Bond, what: str) -> None:
        if a.element is Element.HYDROGEN or b.element is Element.HYDROGEN:
            return
        u, v = heavy[a.index], heavy[b.index]
        key = (min(u, v), max(u, v))
        if key in seen:
            raise SmilesError(f"{what} duplicates the bond between atoms {u} and {v}")
        seen.add(key)
        edges.append((u, v, bond))

    for node in _walk(ast.root):
        for opener, ref in closing.get(node.atom.index, ()):
            add_edge(opener.atom, node.atom, ref.bond, f"ring closure {ref.digit}")
        for bond, child in node.children:
            if bond is None:
                raise SmilesError("bonds not inferred; run infer_implicit_bonds first")
            add_edge(node.atom, child.atom, bond, "the chain")
    return build_graph(False, labels, edges)


def read_molecule(
    text: str, valences: ValenceConfig | None = None
) -> tuple[Graph, dict[Element, int]]:
    """Parse a SMILES string and check valences.

    Returns the heavy-atom graph together with the valence map restricted
    to the elements actually present.  An atom whose degree exceeds its
    limit, or an element with no configured limit, raises ValenceError.
    """
    if valences is None:
        valences = DEFAULT_VALENCES
    graph = smiles_to_graph(infer_implicit_bonds(parse_smiles(text)))
    degrees: dict[Element, int] = {}
    for element in sorted(set(graph.labels)):
        if element not in valences:
            raise ValenceError(f"no valence limit configured for element {element.value}")
        degrees[element] = valences[element]
    for v in range(graph.vertex_count):
        limit = degrees[graph.labels[v]]
        if graph.degree(v) > limit:
            raise ValenceError(
                f"atom {v} ({graph.labels[v].value}) has degree {graph.degree(v)}, "
                f"exceeding its valence limit {limit}"
            )
    return graph, degrees
