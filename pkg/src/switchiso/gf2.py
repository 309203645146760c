"""GF(2) vector algebra over the edge space of a graph.

Sign vectors, edge cuts and switching classes all live in GF(2)^m with one
coordinate per edge.  Vectors are packed into Python ints (bit i = edge i),
which keeps XOR, AND and popcount single machine-assisted operations even
for a few thousand edges.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import GuardExceeded

if TYPE_CHECKING:
    from .graphs import Graph

# Coset exhaustion visits 2^rank vectors; refuse beyond this.
MIN_WEIGHT_RANK_GUARD = 20


def _lex_key(bits: int, length: int) -> int:
    """Reorder bits so that comparing keys as ints compares bit 0 first."""
    if length == 0:
        return 0
    return int(format(bits, f"0{length}b")[::-1], 2)


class BitVector:
    """Fixed-length vector over GF(2); treated as immutable.

    Bit i of ``bits`` is coordinate i; positions at or beyond ``length``
    are always zero.
    """

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0) -> None:
        if length < 0:
            raise ValueError("length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError(f"bits 0x{bits:x} out of range for length {length}")
        self.length = length
        self.bits = bits

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        bits = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError(f"index {i} out of range for length {length}")
            bits |= 1 << i
        return cls(length, bits)

    def get(self, i: int) -> bool:
        if not 0 <= i < self.length:
            raise ValueError(f"index {i} out of range for length {self.length}")
        return bool((self.bits >> i) & 1)

    def with_bit(self, i: int, value: bool) -> "BitVector":
        """Copy of this vector with coordinate i set to ``value``."""
        if not 0 <= i < self.length:
            raise ValueError(f"index {i} out of range for length {self.length}")
        if value:
            return BitVector(self.length, self.bits | (1 << i))
        return BitVector(self.length, self.bits & ~(1 << i))

    def weight(self) -> int:
        """Number of set coordinates."""
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of the set coordinates, ascending."""
        out = []
        bits = self.bits
        while bits:
            lsb = bits & -bits
            out.append(lsb.bit_length() - 1)
            bits ^= lsb
        return tuple(out)

    def lex_key(self) -> int:
        """Sort key for lexicographic order with bit 0 most significant."""
        return _lex_key(self.bits, self.length)

    def _check_same_length(self, other: "BitVector") -> None:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} != {other.length}")

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check_same_length(other)
        return BitVector(self.length, self.bits & other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BitVector):
            return self.length == other.length and self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __repr__(self) -> str:
        return f"BitVector({self.length}, 0b{self.bits:b})"


class Gf2Basis:
    """Row-reduced basis of a subspace of GF(2)^m.

    Every row has its leading 1 at its pivot column and zeros at all other
    pivot columns, and pivots strictly increase; this makes coset reduction
    a single pass and makes the zero-pivot coset member unique.
    """

    __slots__ = ("m", "_rows", "_pivots", "_free", "_pivot_mask", "_pivot_rows")

    def __init__(self, m: int, rows: Iterable[int], pivots: Iterable[int]) -> None:
        self.m = m
        self._rows = tuple(rows)
        self._pivots = tuple(pivots)
        if len(self._rows) != len(self._pivots):
            raise ValueError("rows and pivots must pair up")
        if list(self._pivots) != sorted(set(self._pivots)):
            raise ValueError("pivots must strictly increase")
        pivot_mask = 0
        for p in self._pivots:
            if not 0 <= p < m:
                raise ValueError(f"pivot {p} out of range")
            pivot_mask |= 1 << p
        for row, p in zip(self._rows, self._pivots):
            if row >> m:
                raise ValueError("row has bits beyond the ambient length")
            if row & pivot_mask != 1 << p:
                raise ValueError("rows are not in reduced row-echelon form")
        self._pivot_mask = pivot_mask
        self._free = tuple(i for i in range(m) if not (pivot_mask >> i) & 1)
        self._pivot_rows = tuple(zip((1 << p for p in self._pivots), self._rows))

    @classmethod
    def from_vectors(cls, m: int, vectors: Iterable["BitVector | int"]) -> "Gf2Basis":
        """Row-reduce a spanning set, picking the lowest index as each pivot."""
        work = []
        for v in vectors:
            bits = v.bits if isinstance(v, BitVector) else v
            if bits >> m:
                raise ValueError("vector has bits beyond the ambient length")
            if bits:
                work.append(bits)
        rows: list[int] = []
        pivots: list[int] = []
        for col in range(m):
            if not work:
                break
            mask = 1 << col
            pivot_row = None
            for idx, r in enumerate(work):
                if r & mask:
                    pivot_row = work.pop(idx)
                    break
            if pivot_row is None:
                continue
            work = [r ^ pivot_row if r & mask else r for r in work]
            work = [r for r in work if r]
            rows = [r ^ pivot_row if r & mask else r for r in rows]
            rows.append(pivot_row)
            pivots.append(col)
        return cls(m, rows, pivots)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def rows(self) -> tuple[BitVector, ...]:
        return tuple(BitVector(self.m, r) for r in self._rows)

    @property
    def free_indices(self) -> tuple[int, ...]:
        """Non-pivot columns; their bit patterns index the cosets."""
        return self._free

    @property
    def pivot_mask(self) -> int:
        return self._pivot_mask

    def reduce_bits(self, bits: int) -> int:
        """Raw-int version of :meth:`reduce` for hot loops."""
        for pivot_bit, row in self._pivot_rows:
            if bits & pivot_bit:
                bits ^= row
        return bits

    def reduce(self, v: BitVector) -> BitVector:
        """The unique member of ``v + span`` whose pivot coordinates are zero.

        reduce(v) == reduce(w) exactly when v and w lie in the same coset.
        """
        if v.length != self.m:
            raise ValueError(f"length mismatch: {v.length} != {self.m}")
        return BitVector(self.m, self.reduce_bits(v.bits))

    def in_span(self, v: BitVector) -> bool:
        """True when v is a GF(2) combination of the basis rows."""
        if v.length != self.m:
            raise ValueError(f"length mismatch: {v.length} != {self.m}")
        return self.reduce_bits(v.bits) == 0

    def coset_representative_bits(self) -> Iterator[int]:
        """All 2^(m-rank) zero-pivot representatives, lexicographically.

        Lexicographic means bit 0 is most significant, so the all-zero
        vector comes first.
        """
        free = self._free
        k = len(free)
        for t in range(1 << k):
            bits = 0
            for j in range(k):
                if (t >> (k - 1 - j)) & 1:
                    bits |= 1 << free[j]
            yield bits


@lru_cache(maxsize=256)
def cut_space_basis(g: "Graph") -> Gf2Basis:
    """Row-reduced basis of the cut space: the span of all vertex stars.

    Its rank is n - c for a graph with c connected components, and its
    members are exactly the edge sets of the form delta(S).
    """
    return Gf2Basis.from_vectors(g.m, (g.star_mask(v) for v in range(g.n)))


def min_weight_coset_member(basis: Gf2Basis, v: BitVector) -> tuple[int, BitVector]:
    """Minimum-popcount member of the coset ``v + span(basis)``.

    Exhausts all 2^rank coset members in Gray-code order, so the result is
    exact; ties go to the lexicographically smallest vector (bit 0 most
    significant).
    """
    if v.length != basis.m:
        raise ValueError(f"length mismatch: {v.length} != {basis.m}")
    rank = basis.rank
    if rank > MIN_WEIGHT_RANK_GUARD:
        raise GuardExceeded(
            f"basis rank {rank} exceeds the coset-exhaustion guard "
            f"{MIN_WEIGHT_RANK_GUARD}"
        )
    rows = basis._rows
    m = basis.m
    cur = v.bits
    best = cur
    best_w = cur.bit_count()
    best_key: int | None = None
    for i in range(1, 1 << rank):
        cur ^= rows[(i & -i).bit_length() - 1]
        w = cur.bit_count()
        if w < best_w:
            best, best_w, best_key = cur, w, None
        elif w == best_w and cur != best:
            if best_key is None:
                best_key = _lex_key(best, m)
            key = _lex_key(cur, m)
            if key < best_key:
                best, best_key = cur, key
    return best_w, BitVector(m, best)
