"""Signed graphs, switching, and switching classes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GuardExceeded
from .gf2 import BitVector, cut_space_basis, min_weight_coset_member
from .graphs import Graph, connected_components, vertex_cut_edges

# 2^(m-n+c) must fit comfortably in an int people can reason about.
COUNT_EXPONENT_GUARD = 62

# A switching function is represented by the set of vertices it negates;
# a set and its complement act identically on the signs.
SwitchingFunction = frozenset[int]


@dataclass(frozen=True)
class SignedGraph:
    """A graph plus one sign per edge; bit i set means edge i is negative."""

    graph: Graph
    signs: BitVector

    def __post_init__(self) -> None:
        if self.signs.length != self.graph.m:
            raise ValueError(
                f"sign vector length {self.signs.length} != edge count {self.graph.m}"
            )

    @classmethod
    def all_positive(cls, graph: Graph) -> "SignedGraph":
        return cls(graph, BitVector.zeros(graph.m))

    @classmethod
    def from_negative_edges(
        cls, graph: Graph, edges: Iterable[tuple[int, int]]
    ) -> "SignedGraph":
        return cls(
            graph,
            BitVector.from_indices(graph.m, (graph.edge_index(u, v) for u, v in edges)),
        )

    def negative_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.graph.edges[i] for i in self.signs.support())


@dataclass(frozen=True)
class SwitchingClass:
    """A switching-equivalence class, keyed by its canonical sign vector:
    the unique class member that is zero at every cut-space pivot."""

    graph: Graph
    canonical: BitVector

    def __post_init__(self) -> None:
        if self.canonical.length != self.graph.m:
            raise ValueError("canonical vector length does not match the graph")
        if self.canonical.bits & cut_space_basis(self.graph).pivot_mask:
            raise ValueError("canonical vector has nonzero pivot coordinates")


def switch(s: SignedGraph, flipped: Iterable[int]) -> SignedGraph:
    """Negate every edge with exactly one endpoint in ``flipped``."""
    return SignedGraph(s.graph, s.signs ^ vertex_cut_edges(s.graph, flipped))


def _check_same_graph(a: SignedGraph, b: SignedGraph) -> None:
    if a.graph != b.graph:
        raise ValueError("signed graphs have different underlying graphs")


def switching_equivalent(a: SignedGraph, b: SignedGraph) -> bool:
    """True when some switching carries a to b, i.e. when the two negative
    edge sets differ by an edge cut."""
    _check_same_graph(a, b)
    return cut_space_basis(a.graph).in_span(a.signs ^ b.signs)


def switching_witness(a: SignedGraph, b: SignedGraph) -> frozenset[int] | None:
    """A vertex set whose switching carries a to b, or None.

    Of the two complementary choices per component, picks the side not
    containing the component's smallest vertex, so vertex 0 is never in
    the witness.
    """
    _check_same_graph(a, b)
    if not switching_equivalent(a, b):
        return None
    g = a.graph
    diff = (a.signs ^ b.signs).bits
    side = [-1] * g.n
    flipped = []
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if side[w] == -1:
                    crossing = (diff >> g.edge_index(v, w)) & 1
                    side[w] = side[v] ^ crossing
                    if side[w]:
                        flipped.append(w)
                    stack.append(w)
    return frozenset(flipped)


def class_of(s: SignedGraph) -> SwitchingClass:
    """The switching class of a signing; equal classes mean equivalent signings."""
    basis = cut_space_basis(s.graph)
    return SwitchingClass(s.graph, basis.reduce(s.signs))


def class_count_exponent(g: Graph) -> int:
    """m - n + c, the GF(2) dimension of the space of switching classes."""
    c, _ = connected_components(g)
    return g.m - g.n + c


def count_classes(g: Graph) -> int:
    """Number of switching classes: 2^(m-n+c)."""
    e = class_count_exponent(g)
    if e > COUNT_EXPONENT_GUARD:
        raise GuardExceeded(
            f"class-count exponent m-n+c = {e} exceeds the guard {COUNT_EXPONENT_GUARD}"
        )
    return 1 << e


def enumerate_classes(g: Graph) -> Iterator[SwitchingClass]:
    """Yield every switching class once, in lexicographic order of the
    canonical vectors (equivalently, of their free-coordinate patterns)."""
    count_classes(g)  # apply the exponent guard before sweeping
    basis = cut_space_basis(g)
    for bits in basis.coset_representative_bits():
        yield SwitchingClass(g, BitVector(g.m, bits))


def mu(c: SwitchingClass) -> int:
    """Minimum number of negative edges over all signings in the class."""
    weight, _ = min_weight_coset_member(cut_space_basis(c.graph), c.canonical)
    return weight


def minimum_signing(c: SwitchingClass) -> SignedGraph:
    """A signing of the class attaining mu; ties resolved lexicographically."""
    _, witness = min_weight_coset_member(cut_space_basis(c.graph), c.canonical)
    return SignedGraph(c.graph, witness)


def negative_subgraph(s: SignedGraph) -> Graph:
    """The unsigned graph carrying exactly the negative edges."""
    return Graph(s.graph.n, s.negative_edges())


def signed_degrees(s: SignedGraph, v: int) -> tuple[int, int]:
    """(positive degree, negative degree) of vertex v."""
    if not 0 <= v < s.graph.n:
        raise ValueError(f"vertex {v} out of range for n={s.graph.n}")
    d_minus = (s.graph.star_mask(v) & s.signs.bits).bit_count()
    return s.graph.degree(v) - d_minus, d_minus
