"""Vertex permutations, automorphism groups, and induced edge actions."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import GuardExceeded
from .gf2 import BitVector
from .graphs import Graph, generalized_petersen

CLOSURE_ORDER_GUARD = 10**6
BRUTE_AUTOMORPHISM_MAX_VERTICES = 12

# GP parameter pairs whose automorphism groups are larger than the
# rotation/reflection(/layer-swap) construction produces.
EXCEPTIONAL_GP_PAIRS = frozenset(
    {(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)}
)


class ExceptionalGpPair(ValueError):
    """The closed-form GP generators do not apply; fall back to a brute search."""


class VertexPermutation:
    """Bijection of 0..n-1; ``images[v]`` is where v goes.

    Composition follows function application: ``(p * q)(v) == p(q(v))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{imgs} is not a permutation of 0..{len(imgs) - 1}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(range(n))

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "VertexPermutation") -> "VertexPermutation":
        if len(self.images) != len(other.images):
            raise ValueError("cannot compose permutations of different degree")
        mine = self.images
        return VertexPermutation(tuple(mine[w] for w in other.images))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return VertexPermutation(inv)

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexPermutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"VertexPermutation({self.images})"


class EdgePermutation:
    """Bijection of edge indices induced by a vertex permutation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]) -> None:
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{imgs} is not a permutation of 0..{len(imgs) - 1}")
        self.images = imgs

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: "EdgePermutation") -> "EdgePermutation":
        if len(self.images) != len(other.images):
            raise ValueError("cannot compose permutations of different degree")
        mine = self.images
        return EdgePermutation(tuple(mine[w] for w in other.images))

    def push_bits(self, bits: int) -> int:
        """Carry a sign vector along: output bit images[e] = input bit e."""
        out = 0
        images = self.images
        while bits:
            lsb = bits & -bits
            out |= 1 << images[lsb.bit_length() - 1]
            bits ^= lsb
        return out

    def push(self, v: BitVector) -> BitVector:
        if v.length != len(self.images):
            raise ValueError(f"length mismatch: {v.length} != {len(self.images)}")
        return BitVector(v.length, self.push_bits(v.bits))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EdgePermutation):
            return self.images == other.images
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"EdgePermutation({self.images})"


class PermutationGroup:
    """A materialized permutation group: the full element list.

    The constructor checks the cheap invariants (identity present, no
    duplicates, one common degree); :meth:`validate` checks the group
    axioms outright and is meant for tests.
    """

    __slots__ = ("elements", "_element_set")

    def __init__(self, elements: Iterable[VertexPermutation]) -> None:
        elems = tuple(elements)
        if not elems:
            raise ValueError("a permutation group needs at least the identity")
        degree = len(elems[0])
        if any(len(p) != degree for p in elems):
            raise ValueError("group elements must share one degree")
        self._element_set = frozenset(elems)
        if len(self._element_set) != len(elems):
            raise ValueError("duplicate group elements")
        if VertexPermutation.identity(degree) not in self._element_set:
            raise ValueError("identity element missing")
        self.elements = elems

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.elements[0])

    def __iter__(self) -> Iterator[VertexPermutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: VertexPermutation) -> bool:
        return p in self._element_set

    def validate(self) -> None:
        """Raise unless closed under composition and inverse (O(order^2))."""
        for p in self.elements:
            if p.inverse() not in self._element_set:
                raise ValueError(f"inverse of {p} missing")
            for q in self.elements:
                if p * q not in self._element_set:
                    raise ValueError(f"product {p} * {q} missing")

    def __repr__(self) -> str:
        return f"PermutationGroup(order={self.order}, degree={self.degree})"


def is_automorphism(g: Graph, p: VertexPermutation) -> bool:
    """True when p maps the edge set of g onto itself."""
    if len(p) != g.n:
        raise ValueError(f"permutation degree {len(p)} != vertex count {g.n}")
    images = p.images
    # p is a bijection, so mapping all m edges to edges means onto as well.
    return all(g.has_edge(images[u], images[v]) for u, v in g.edges)


def complete_graph_generators(n: int) -> list[VertexPermutation]:
    """A transposition and an n-cycle: together they generate all n! symmetries."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return [VertexPermutation.identity(1)]
    swap = VertexPermutation((1, 0) + tuple(range(2, n)))
    if n == 2:
        return [swap]
    cycle = VertexPermutation(tuple(range(1, n)) + (0,))
    return [swap, cycle]


def gp_generators(n: int, k: int) -> list[VertexPermutation]:
    """Rotation and reflection of GP(n, k), plus the layer swap when
    k^2 = +-1 (mod n).

    Raises ExceptionalGpPair for the handful of parameter pairs whose full
    automorphism group is strictly larger; use brute_automorphisms there.
    """
    if n < 3 or not 1 <= k <= (n - 1) // 2:
        raise ValueError(f"invalid generalized Petersen parameters ({n},{k})")
    if (n, k) in EXCEPTIONAL_GP_PAIRS:
        raise ExceptionalGpPair(
            f"GP({n},{k}) has extra automorphisms; use brute_automorphisms"
        )
    rotation = VertexPermutation(
        tuple(i * n + (j + 1) % n for i in (0, 1) for j in range(n))
    )
    reflection = VertexPermutation(
        tuple(i * n + (n - j) % n for i in (0, 1) for j in range(n))
    )
    gens = [rotation, reflection]
    if (k * k) % n in (1, n - 1):
        layer_swap = VertexPermutation(
            tuple((1 - i) * n + (k * j) % n for i in (0, 1) for j in range(n))
        )
        gens.append(layer_swap)
    graph = generalized_petersen(n, k)
    for gen in gens:
        assert is_automorphism(graph, gen), f"generator {gen} failed validation"
    return gens


def closure(
    generators: Iterable[VertexPermutation], degree: int | None = None
) -> PermutationGroup:
    """The group generated by the given permutations, materialized.

    Breadth-first products from the identity; refuses past
    CLOSURE_ORDER_GUARD elements.
    """
    gens = list(generators)
    if not gens:
        if degree is None:
            raise ValueError("degree is required for an empty generator set")
        return PermutationGroup([VertexPermutation.identity(degree)])
    if degree is not None and any(len(g) != degree for g in gens):
        raise ValueError("generator degree does not match the requested degree")
    identity = VertexPermutation.identity(len(gens[0]))
    elements: dict[VertexPermutation, None] = {identity: None}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for e in frontier:
            for gen in gens:
                f = e * gen
                if f not in elements:
                    elements[f] = None
                    next_frontier.append(f)
                    if len(elements) > CLOSURE_ORDER_GUARD:
                        raise GuardExceeded(
                            f"group closure exceeded {CLOSURE_ORDER_GUARD} elements"
                        )
        frontier = next_frontier
    return PermutationGroup(elements)


def iter_isomorphisms(g1: Graph, g2: Graph) -> Iterator[VertexPermutation]:
    """Every vertex bijection carrying the edges of g1 exactly onto g2's.

    Backtracking over a breadth-first vertex order with degree and
    neighborhood-consistency pruning; callers impose their own size guards.
    """
    n = g1.n
    if n != g2.n or g1.m != g2.m:
        return
    deg1 = [g1.degree(v) for v in range(n)]
    deg2 = [g2.degree(v) for v in range(n)]
    if sorted(deg1) != sorted(deg2):
        return
    order: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in g1.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    adj1 = [frozenset(g1.neighbors(v)) for v in range(n)]
    adj2 = [frozenset(g2.neighbors(v)) for v in range(n)]
    images = [-1] * n
    used = [False] * n

    def backtrack(i: int) -> Iterator[VertexPermutation]:
        if i == n:
            yield VertexPermutation(images)
            return
        v = order[i]
        placed_nbrs = [u for u in adj1[v] if images[u] != -1]
        if placed_nbrs:
            candidates = sorted(adj2[images[placed_nbrs[0]]])
        else:
            candidates = range(n)
        for w in candidates:
            if used[w] or deg2[w] != deg1[v]:
                continue
            ok = True
            for u in placed_nbrs:
                if w not in adj2[images[u]]:
                    ok = False
                    break
            if ok:
                # mapped non-neighbors must stay non-neighbors
                for u in range(n):
                    if images[u] != -1 and u not in adj1[v] and w in adj2[images[u]]:
                        ok = False
                        break
            if not ok:
                continue
            images[v] = w
            used[w] = True
            yield from backtrack(i + 1)
            images[v] = -1
            used[w] = False

    yield from backtrack(0)


def brute_automorphisms(g: Graph) -> PermutationGroup:
    """The full automorphism group by backtracking search (n <= 12)."""
    if g.n > BRUTE_AUTOMORPHISM_MAX_VERTICES:
        raise GuardExceeded(
            f"automorphism search limited to n <= {BRUTE_AUTOMORPHISM_MAX_VERTICES}, "
            f"got n={g.n}"
        )
    return PermutationGroup(iter_isomorphisms(g, g))


def induced_edge_perm(g: Graph, p: VertexPermutation) -> EdgePermutation:
    """The permutation of edge indices that p induces."""
    if not is_automorphism(g, p):
        raise ValueError("permutation is not an automorphism of the graph")
    images = p.images
    return EdgePermutation(
        g.edge_index(images[u], images[v]) for u, v in g.edges
    )


def gp_automorphism_group(n: int, k: int) -> PermutationGroup:
    """Automorphism group of GP(n, k): generator closure when the closed
    form applies, brute search for the exceptional pairs."""
    try:
        return closure(gp_generators(n, k))
    except ExceptionalGpPair:
        return brute_automorphisms(generalized_petersen(n, k))
