"""Immutable simple graphs with a fixed lexicographic edge ordering."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import Graph6ParseError
from .gf2 import BitVector


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Edges are stored as (u, v) pairs with u < v, sorted lexicographically;
    the position of a pair in that order is its edge index.  Every bit
    vector in the package is indexed against this ordering, so two equal
    graphs always agree about what bit i means.
    """

    __slots__ = ("n", "edges", "_index", "_neighbors", "_stars", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            normalized.append((u, v) if u < v else (v, u))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        self.n = n
        self.edges = tuple(normalized)
        self._index = {e: i for i, e in enumerate(self.edges)}
        neighbors: list[list[int]] = [[] for _ in range(n)]
        stars = [0] * n
        for i, (u, v) in enumerate(self.edges):
            neighbors[u].append(v)
            neighbors[v].append(u)
            stars[u] |= 1 << i
            stars[v] |= 1 << i
        self._neighbors = tuple(tuple(sorted(ns)) for ns in neighbors)
        self._stars = tuple(stars)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge {u, v}; symmetric in its arguments."""
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise ValueError(f"no edge ({u},{v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def star_mask(self, v: int) -> int:
        """Incident edges of v as an int bitmask over edge indices."""
        return self._stars[v]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GpVertex:
    """Vertex of a generalized Petersen graph: layer 0 is the outer cycle,
    layer 1 the inner; flat ids are layer*n + position."""

    layer: int
    position: int

    def to_id(self, n: int) -> int:
        if self.layer not in (0, 1):
            raise ValueError(f"layer must be 0 or 1, got {self.layer}")
        if not 0 <= self.position < n:
            raise ValueError(f"position {self.position} out of range mod {n}")
        return self.layer * n + self.position

    @classmethod
    def from_id(cls, vid: int, n: int) -> "GpVertex":
        if not 0 <= vid < 2 * n:
            raise ValueError(f"vertex id {vid} out of range for 2n={2 * n}")
        return cls(vid // n, vid % n)


def complete_graph(n: int) -> Graph:
    """K_n: every pair of the n vertices joined by an edge."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle, spokes, and inner edges j -> j+k mod n.

    Vertex (layer, j) is flattened to layer*n + j, so the outer cycle is
    0..n-1 and the inner vertices are n..2n-1.
    """
    if n < 3:
        raise ValueError("generalized Petersen graph needs n >= 3")
    if not 1 <= k <= (n - 1) // 2:
        raise ValueError(f"k={k} out of range 1..{(n - 1) // 2} for n={n}")
    edges = []
    for j in range(n):
        edges.append((j, (j + 1) % n))
        edges.append((j, n + j))
        edges.append((n + j, n + (j + k) % n))
    g = Graph(2 * n, edges)
    assert g.m == 3 * n
    return g


_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62).

    The first byte encodes n as chr(n + 63); the remaining bytes pack the
    upper triangle of the adjacency matrix in column order, six bits per
    byte, most significant bit first, zero-padded.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6ParseError("empty graph6 input")
    head = ord(s[0]) - 63
    if head == 63:
        raise Graph6ParseError("long-form graph6 (n > 62) is not supported")
    if not 0 <= head <= 62:
        raise Graph6ParseError(f"invalid graph6 header character {s[0]!r}")
    n = head
    data = s[1:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) < need:
        raise Graph6ParseError(f"truncated graph6 data: need {need} bytes, got {len(data)}")
    if len(data) > need:
        raise Graph6ParseError(f"trailing graph6 data: need {need} bytes, got {len(data)}")
    values = []
    for ch in data:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6ParseError(f"invalid graph6 data character {ch!r}")
        values.append(v)
    edges = []
    cursor = 0
    for j in range(1, n):
        for i in range(j):
            if (values[cursor // 6] >> (5 - cursor % 6)) & 1:
                edges.append((i, j))
            cursor += 1
    while cursor < 6 * need:
        if (values[cursor // 6] >> (5 - cursor % 6)) & 1:
            raise Graph6ParseError("nonzero padding bits in graph6 data")
        cursor += 1
    return Graph(n, edges)


def connected_components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Component count and a per-vertex component id (ids are 0..c-1 in
    order of each component's smallest vertex)."""
    labels = [-1] * g.n
    c = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = c
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if labels[w] == -1:
                    labels[w] = c
                    stack.append(w)
        c += 1
    return c, tuple(labels)


def vertex_cut_edges(g: Graph, vertices: Iterable[int]) -> BitVector:
    """Edges with exactly one endpoint in the given vertex set.

    This is the GF(2) sum of the vertex stars, so cuts of symmetric
    differences are XORs of cuts.
    """
    bits = 0
    for v in set(vertices):
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        bits ^= g.star_mask(v)
    return BitVector(g.m, bits)
