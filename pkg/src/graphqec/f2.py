"""GF(2) linear algebra on int-packed bit-vectors.

Vectors are Python ints used as bitsets: coordinate i lives at bit i, so
coordinate 0 is the *first* coordinate.  Subspaces are kept in reduced row
echelon form with pivots at the lowest set bit, which makes equal subspaces
bit-identical and coset representatives canonical (minimum-lexicographic when
earlier coordinates are more significant).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import AmbientMismatch, BudgetExceeded, MixedLength


class BitVec:
    """Fixed-length GF(2) vector; addition is XOR, so v + v = 0."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int = 0):
        if bits < 0 or (bits >> n):
            raise ValueError(f"bits 0x{bits:x} do not fit in length {n}")
        self.n = n
        self.bits = bits

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for length {n}")
            bits ^= 1 << i
        return cls(n, bits)

    @classmethod
    def from01(cls, s: str) -> "BitVec":
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
            elif c != "0":
                raise ValueError(f"invalid bit character {c!r}")
        return cls(len(s), bits)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def _check(self, other: "BitVec") -> None:
        if self.n != other.n:
            raise MixedLength(f"lengths differ: {self.n} vs {other.n}")

    def __xor__(self, other: "BitVec") -> "BitVec":
        self._check(other)
        return BitVec(self.n, self.bits ^ other.bits)

    __add__ = __xor__

    def dot(self, other: "BitVec") -> int:
        """Inner product: parity of the coordinate-wise AND."""
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, BitVec) and self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"BitVec({self.to01()!r})"


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _rref(rows: Iterable[int]) -> dict[int, int]:
    """Reduce integer rows to RREF; returns {pivot_bit_index: row}."""
    basis: dict[int, int] = {}
    for r in rows:
        r = _reduce_bits(r, basis)
        if r == 0:
            continue
        p = _lsb_index(r)
        # Clear the new pivot from existing rows to stay fully reduced.
        for q, row in list(basis.items()):
            if (row >> p) & 1:
                basis[q] = row ^ r
        basis[p] = r
    return basis


def _reduce_bits(v: int, basis: dict[int, int]) -> int:
    for p in sorted(basis):
        if (v >> p) & 1:
            v ^= basis[p]
    return v


class Subspace:
    """A subspace of GF(2)^n held as a canonical RREF basis.

    Two Subspace values spanning the same set of vectors compare equal and
    have bit-identical basis rows.
    """

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[BitVec | int] = ()):
        ints = []
        for v in vectors:
            if isinstance(v, BitVec):
                if v.n != ambient_dim:
                    raise MixedLength(f"row length {v.n} != ambient {ambient_dim}")
                ints.append(v.bits)
            else:
                ints.append(int(v))
        basis = _rref(ints)
        self.ambient_dim = ambient_dim
        self.pivots = tuple(sorted(basis))
        self.rows = tuple(basis[p] for p in self.pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[BitVec]:
        return [BitVec(self.ambient_dim, r) for r in self.rows]

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"ambient dims differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def reduce_bits(self, bits: int) -> int:
        """Canonical coset representative of bits modulo this subspace."""
        for p, row in zip(self.pivots, self.rows):
            if (bits >> p) & 1:
                bits ^= row
        return bits

    def reduce(self, v: BitVec) -> BitVec:
        if v.n != self.ambient_dim:
            raise MixedLength(f"vector length {v.n} != ambient {self.ambient_dim}")
        return BitVec(self.ambient_dim, self.reduce_bits(v.bits))

    def contains(self, v: BitVec | int) -> bool:
        bits = v.bits if isinstance(v, BitVec) else int(v)
        return self.reduce_bits(bits) == 0

    def orthogonal_complement(self) -> "Subspace":
        """All vectors orthogonal to every basis row."""
        n = self.ambient_dim
        pivset = set(self.pivots)
        kernel = []
        for f in range(n):
            if f in pivset:
                continue
            v = 1 << f
            for p, row in zip(self.pivots, self.rows):
                if (row >> f) & 1:
                    v |= 1 << p
            kernel.append(v)
        return Subspace(n, kernel)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: RREF [v|v; w|0], rows with zero left half give a∩b."""
        self._check(other)
        n = self.ambient_dim
        stacked = [r | (r << n) for r in self.rows] + list(other.rows)
        out = []
        for row in _rref(stacked).values():
            if row & ((1 << n) - 1) == 0:
                out.append(row >> n)
        return Subspace(n, out)

    __and__ = intersect

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, list(self.rows) + list(other.rows))

    __add__ = sum

    def contains_space(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(r) for r in other.rows)

    def enumerate_bits(self) -> Iterator[int]:
        """All 2^dim member vectors as ints (ascending combination order)."""
        for mask in range(1 << self.dim):
            v = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    v ^= self.rows[i]
                m >>= 1
                i += 1
            yield v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def zero_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ())


def full_subspace(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, [1 << i for i in range(ambient_dim)])


def rref(matrix: Iterable[BitVec]) -> Subspace:
    """Canonical echelon basis of the row span of the given vectors."""
    rows = list(matrix)
    if not rows:
        raise ValueError("rref needs at least one row to fix the ambient length")
    n = rows[0].n
    for r in rows:
        if r.n != n:
            raise MixedLength(f"row lengths differ: {r.n} vs {n}")
    return Subspace(n, rows)


def orthogonal_complement(s: Subspace) -> Subspace:
    return s.orthogonal_complement()


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def min_generator_count(
    target: BitVec,
    generators: list[BitVec],
    modulo: Subspace | None = None,
    budget: int | None = None,
) -> int | None:
    """Least m such that target plus a sum of m generators lands in `modulo`.

    Breadth-first search over canonical coset representatives modulo the given
    subspace, so each coset class is visited exactly once and the result does
    not depend on generator order.  Returns None when the reachable coset set
    is exhausted without a hit (proven: no such m exists).  Raises
    BudgetExceeded when the minimum is proven to exceed `budget`.
    """
    if budget is not None and budget < 0:
        raise ValueError("budget must be >= 0")
    n = target.n
    mod = modulo if modulo is not None else zero_subspace(n)
    if mod.ambient_dim != n:
        raise AmbientMismatch(f"modulo ambient {mod.ambient_dim} != vector length {n}")
    masks = set()
    for g in generators:
        if g.n != n:
            raise MixedLength(f"generator length {g.n} != target length {n}")
        m = mod.reduce_bits(g.bits)
        if m:
            masks.add(m)
    start = mod.reduce_bits(target.bits)
    if start == 0:
        return 0
    masks = sorted(masks)
    visited = {start}
    frontier = [start]
    dist = 0
    while frontier:
        if budget is not None and dist >= budget:
            raise BudgetExceeded(
                f"no representation with at most {budget} generators", bound=budget
            )
        dist += 1
        nxt = []
        for s in frontier:
            for m in masks:
                t = s ^ m
                if t == 0:
                    return dist
                if t not in visited:
                    visited.add(t)
                    nxt.append(t)
        frontier = nxt
    return None
