"""The automorphism action on switching classes and what it buys:

orbit enumeration (one orbit per switching-isomorphism type), a Burnside
fixed-point cross-check, signed automorphism groups, and exhaustive
small-graph verifiers for the structural results the package is built on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardExceeded
from .gf2 import BitVector, Gf2Basis, cut_space_basis, min_weight_coset_member
from .graphs import Graph, complete_graph, generalized_petersen
from .signing import (
    SignedGraph,
    SwitchingClass,
    class_count_exponent,
    class_of,
    negative_subgraph,
)
from .symmetry import (
    PermutationGroup,
    VertexPermutation,
    closure,
    complete_graph_generators,
    induced_edge_perm,
    iter_isomorphisms,
)

# Orbit enumeration touches every class; refuse beyond 2^20 of them.
ORBIT_CLASS_EXPONENT_GUARD = 20
ISOMORPHISM_MAX_VERTICES = 8


@dataclass(frozen=True)
class OrbitReport:
    """One switching-isomorphism type.

    ``representative`` is the lexicographically smallest canonical vector
    in the orbit; ``witness`` is the mu-minimal signing of that class, and
    ``signed_aut_order`` counts the automorphisms preserving exactly that
    signing (the order is a property of the signing, not of the class).
    """

    representative: SwitchingClass
    size: int
    mu: int
    signed_aut_order: int
    witness: SignedGraph


@dataclass(frozen=True)
class GpEdgeLayers:
    """Edge indices of a generalized Petersen graph, split into the outer
    cycle, the inner k-step edges, and the spokes."""

    outer: frozenset[int]
    inner: frozenset[int]
    spokes: frozenset[int]


def act_on_class(c: SwitchingClass, p: VertexPermutation) -> SwitchingClass:
    """Image of a switching class under an automorphism.

    The sign an image edge receives is the sign its preimage had, so the
    canonical vector is pushed forward along the induced edge permutation
    and then re-reduced.  The result does not depend on which class member
    is pushed, which is what makes this a well-defined action.
    """
    ep = induced_edge_perm(c.graph, p)  # rejects non-automorphisms
    basis = cut_space_basis(c.graph)
    return SwitchingClass(c.graph, basis.reduce(ep.push(c.canonical)))


def _guarded_exponent(g: Graph) -> int:
    e = class_count_exponent(g)
    if e > ORBIT_CLASS_EXPONENT_GUARD:
        raise GuardExceeded(
            f"2^{e} switching classes exceed the orbit-enumeration guard "
            f"2^{ORBIT_CLASS_EXPONENT_GUARD}"
        )
    return e


def _check_group_degree(g: Graph, grp: PermutationGroup) -> None:
    if grp.degree != g.n:
        raise ValueError(f"group degree {grp.degree} != vertex count {g.n}")


def _push_tables(g: Graph, grp: PermutationGroup) -> list[tuple[int, ...]]:
    """Per-element tables mapping edge index e to the int mask 1 << image(e)."""
    return [
        tuple(1 << i for i in induced_edge_perm(g, p).images) for p in grp
    ]


def _push_bits(bits: int, table: tuple[int, ...]) -> int:
    out = 0
    while bits:
        lsb = bits & -bits
        out |= table[lsb.bit_length() - 1]
        bits ^= lsb
    return out


def orbits(g: Graph, grp: PermutationGroup) -> list[OrbitReport]:
    """Partition all switching classes into orbits under the group.

    Canonical vectors are swept in lexicographic order; the orbit of an
    unseen class is its full image set under the (materialized) group, so
    the first member encountered is the orbit's representative.  Reports
    come back sorted by (mu, size, representative).
    """
    _guarded_exponent(g)
    _check_group_degree(g, grp)
    basis = cut_space_basis(g)
    tables = _push_tables(g, grp)
    reduce_bits = basis.reduce_bits
    seen: set[int] = set()
    found: list[tuple[int, int]] = []  # (representative bits, orbit size)
    for canon in basis.coset_representative_bits():
        if canon in seen:
            continue
        image = {reduce_bits(_push_bits(canon, t)) for t in tables}
        seen |= image
        found.append((canon, len(image)))
    reports = []
    for canon, size in found:
        rep = SwitchingClass(g, BitVector(g.m, canon))
        weight, witness_signs = min_weight_coset_member(basis, rep.canonical)
        fixing = sum(
            1 for t in tables if _push_bits(witness_signs.bits, t) == witness_signs.bits
        )
        reports.append(
            OrbitReport(rep, size, weight, fixing, SignedGraph(g, witness_signs))
        )
    reports.sort(key=lambda r: (r.mu, r.size, r.representative.canonical.lex_key()))
    return reports


def burnside_count(g: Graph, grp: PermutationGroup) -> int:
    """Number of orbits as the average number of fixed classes per element.

    Pushing along an edge permutation is linear over GF(2) and so is the
    canonical reduction, so each group element acts linearly on the
    free-coordinate space of dimension m - rank.  Its fixed classes are
    the kernel of (action + identity), counted as 2^nullity; this stays
    exact where per-class enumeration would be slow.
    """
    e = _guarded_exponent(g)
    _check_group_degree(g, grp)
    basis = cut_space_basis(g)
    free = basis.free_indices
    reduce_bits = basis.reduce_bits
    total = 0
    for table in _push_tables(g, grp):
        columns = []
        for j, col in enumerate(free):
            image = reduce_bits(table[col])  # image of the j-th unit vector
            vec = 0
            for jj, cc in enumerate(free):
                if (image >> cc) & 1:
                    vec |= 1 << jj
            columns.append(vec ^ (1 << j))  # action + identity
        defect = Gf2Basis.from_vectors(e, columns).rank
        total += 1 << (e - defect)
    if total % grp.order:
        raise RuntimeError(
            f"Burnside sum {total} is not divisible by the group order "
            f"{grp.order}; the action is inconsistent"
        )
    return total // grp.order


def switching_isomorphic(
    a: SignedGraph, b: SignedGraph, grp: PermutationGroup
) -> bool:
    """True when some group element maps the class of a onto the class of b.

    ``grp`` must be (a subgroup of) the automorphism group of the shared
    underlying graph.
    """
    if a.graph != b.graph:
        raise ValueError("signed graphs have different underlying graphs")
    g = a.graph
    _check_group_degree(g, grp)
    basis = cut_space_basis(g)
    target = basis.reduce_bits(b.signs.bits)
    negatives = a.negative_edges()
    edge_index = g.edge_index
    for p in grp:
        images = p.images
        bits = 0
        for u, v in negatives:
            bits |= 1 << edge_index(images[u], images[v])
        if basis.reduce_bits(bits) == target:
            return True
    return False


def signed_automorphism_group(
    s: SignedGraph, grp: PermutationGroup
) -> PermutationGroup:
    """The subgroup of grp whose elements preserve every edge sign of s."""
    g = s.graph
    _check_group_degree(g, grp)
    negatives = s.negative_edges()
    target = s.signs.bits
    edge_index = g.edge_index
    keep = []
    for p in grp:
        images = p.images
        bits = 0
        for u, v in negatives:
            bits |= 1 << edge_index(images[u], images[v])
        if bits == target:
            keep.append(p)
    return PermutationGroup(keep)


def graphs_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking search (n <= 8)."""
    if max(g1.n, g2.n) > ISOMORPHISM_MAX_VERTICES:
        raise GuardExceeded(
            f"isomorphism search limited to n <= {ISOMORPHISM_MAX_VERTICES}, "
            f"got n={max(g1.n, g2.n)}"
        )
    return next(iter_isomorphisms(g1, g2), None) is not None


def enumerate_bounded_degree_graphs(n: int, max_degree: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices
    with maximum degree <= max_degree (n <= 8).

    Enumerates edge subsets of K_n with degree pruning and deduplicates
    with graphs_isomorphic, bucketing by degree sequence first.
    """
    if n > ISOMORPHISM_MAX_VERTICES:
        raise GuardExceeded(
            f"bounded-degree enumeration limited to n <= {ISOMORPHISM_MAX_VERTICES}, "
            f"got n={n}"
        )
    if n < 1:
        raise ValueError("need n >= 1")
    if max_degree < 0:
        raise ValueError("max degree must be non-negative")
    universe = complete_graph(n).edges if n > 1 else ()
    degrees = [0] * n
    chosen: list[tuple[int, int]] = []
    buckets: dict[tuple[int, ...], list[Graph]] = {}
    representatives: list[Graph] = []

    def record() -> None:
        candidate = Graph(n, chosen)
        key = tuple(sorted(degrees))
        bucket = buckets.setdefault(key, [])
        if any(graphs_isomorphic(candidate, seen) for seen in bucket):
            return
        bucket.append(candidate)
        representatives.append(candidate)

    def extend(idx: int) -> None:
        if idx == len(universe):
            record()
            return
        extend(idx + 1)
        u, v = universe[idx]
        if degrees[u] < max_degree and degrees[v] < max_degree:
            degrees[u] += 1
            degrees[v] += 1
            chosen.append((u, v))
            extend(idx + 1)
            chosen.pop()
            degrees[u] -= 1
            degrees[v] -= 1

    extend(0)
    return representatives


@lru_cache(maxsize=16)
def _symmetric_group(n: int) -> PermutationGroup:
    return closure(complete_graph_generators(n))


def negative_iso_implies_same_orbit_check(
    g: Graph, a: SignedGraph, b: SignedGraph
) -> bool:
    """On a complete graph, signings with isomorphic negative subgraphs must
    be switching isomorphic; returns the truth of that implication for the
    given pair (vacuously true when the negative subgraphs differ)."""
    if g != complete_graph(g.n):
        raise ValueError("underlying graph must be complete")
    if g.n > 7:
        raise GuardExceeded(f"check limited to complete graphs on n <= 7, got n={g.n}")
    if a.graph != g or b.graph != g:
        raise ValueError("signings must live on the given graph")
    if not graphs_isomorphic(negative_subgraph(a), negative_subgraph(b)):
        return True
    return switching_isomorphic(a, b, _symmetric_group(g.n))


def verify_lower_bound(n: int) -> tuple[int, bool]:
    """Floor on the number of switching-isomorphism types of a signed K_n.

    Builds one signing per isomorphism class of graphs with maximum degree
    floor(n/4) - 1, negative exactly on that subgraph, and checks that the
    signings are pairwise switching non-isomorphic.  Returns (how many,
    whether the pairwise check passed).
    """
    if not 4 <= n <= 8:
        raise GuardExceeded(f"lower-bound verification limited to 4 <= n <= 8, got {n}")
    max_degree = n // 4 - 1
    shapes = enumerate_bounded_degree_graphs(n, max_degree)
    kn = complete_graph(n)
    signings = [SignedGraph.from_negative_edges(kn, shape.edges) for shape in shapes]
    grp = _symmetric_group(n)
    for i in range(len(signings)):
        for j in range(i + 1, len(signings)):
            if switching_isomorphic(signings[i], signings[j], grp):
                return len(signings), False
    return len(signings), True


def gp_edge_layers(g: Graph, n: int, k: int) -> GpEdgeLayers:
    """Split the edges of GP(n, k) into outer cycle, inner edges and spokes."""
    if g != generalized_petersen(n, k):
        raise ValueError(
            f"graph is not GP({n},{k}) with the standard vertex numbering"
        )
    outer = frozenset(g.edge_index(j, (j + 1) % n) for j in range(n))
    inner = frozenset(g.edge_index(n + j, n + (j + k) % n) for j in range(n))
    spokes = frozenset(g.edge_index(j, n + j) for j in range(n))
    return GpEdgeLayers(outer, inner, spokes)
