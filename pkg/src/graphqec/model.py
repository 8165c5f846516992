"""Commuting-Pauli Hamiltonians from local cycles, solved combinatorially.

The energy of a charge class is determined by its inner products with the
term cycles, so the spectrum is the weight enumerator of the linear syndrome
code (class -> violated-term pattern), scaled by the 2^(n-r) classes per
syndrome.  An independent oracle diagonalizes the actual signed Pauli terms
by symplectic reduction, never touching the graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _bulk
from .codespace import GraphicalCode, close_cycles
from .errors import TooLarge
from .f2 import BitVec, Subspace
from .metrics import ClassSpace
from .pauli import DEFAULT_CONVENTION, PairingConvention, PauliString, cycle_to_pauli

SPECTRUM_ENUM_LIMIT = 22
ORACLE_QUBIT_LIMIT = 12


@dataclass
class HamiltonianSpec:
    """Sum of negated cycle operators, one per local cycle (with multiplicity)."""

    code: GraphicalCode
    terms: list[BitVec]

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @classmethod
    def from_code(cls, code: GraphicalCode) -> "HamiltonianSpec":
        terms = list(code.generating_cycles)
        closure = close_cycles(code.graph, terms)
        if closure != code.cycle_group:
            raise ValueError("terms do not generate the code's cycle group")
        return cls(code=code, terms=terms)


@dataclass
class SpectrumReport:
    levels: list[tuple[int, int]]  # (energy, degeneracy), ascending energy
    ground_energy: int
    ground_degeneracy: int
    gap: float
    n_qubits: int
    term_count: int
    method: str

    def to_json_dict(self) -> dict:
        return {
            "levels": [[e, d] for e, d in self.levels],
            "ground_energy": self.ground_energy,
            "ground_degeneracy": self.ground_degeneracy,
            "gap": None if self.gap == math.inf else self.gap,
            "n_qubits": self.n_qubits,
            "term_count": self.term_count,
            "method": self.method,
        }


def _krawtchouk(j: int, i: int, length: int) -> int:
    return sum(
        (-1) ** s * math.comb(i, s) * math.comb(length - i, j - s)
        for s in range(0, j + 1)
    )


def _weight_distribution(rows: list[int], length: int) -> list[int]:
    """Exact weight distribution of the span of rows inside F_2^length."""
    space = Subspace(length, rows)
    r = space.dim
    counts = [0] * (length + 1)
    if r <= SPECTRUM_ENUM_LIMIT:
        if length <= 64:
            arr = _bulk.xor_span(list(space.rows))
            w = _bulk.popcount_u64(arr)
            for value in w:
                counts[int(value)] += 1
        else:
            for bits in space.enumerate_bits():
                counts[bits.bit_count()] += 1
        return counts
    dual = space.orthogonal_complement()
    if dual.dim > SPECTRUM_ENUM_LIMIT:
        raise TooLarge(
            f"syndrome code rank {r} and corank {dual.dim} both exceed "
            f"{SPECTRUM_ENUM_LIMIT}"
        )
    dual_counts = [0] * (length + 1)
    if length <= 64:
        arr = _bulk.xor_span(list(dual.rows))
        for value in _bulk.popcount_u64(arr):
            dual_counts[int(value)] += 1
    else:
        for bits in dual.enumerate_bits():
            dual_counts[bits.bit_count()] += 1
    size = 1 << dual.dim
    for j in range(length + 1):
        total = sum(dual_counts[i] * _krawtchouk(j, i, length) for i in range(length + 1))
        q, rem = divmod(total, size)
        if rem:
            raise AssertionError("MacWilliams transform is not integral")
        counts[j] = q
    return counts


def spectrum(h: HamiltonianSpec) -> SpectrumReport:
    """Exact level structure over charge classes.

    The energy of a class with violated-term pattern of weight w is 2w - T;
    each achievable pattern is shared by 2^(n - rank) classes.
    """
    code = h.code
    n = code.n
    t_count = h.term_count
    cs = ClassSpace(code.graph)
    class_basis = [BitVec(code.graph.edge_count, r) for r in cs.basis_rows]
    columns = []
    for rep in class_basis:
        col = 0
        for i, term in enumerate(h.terms):
            if rep.dot(term):
                col |= 1 << i
        columns.append(col)
    rank = Subspace(max(t_count, 1), columns).dim
    if rank != n - code.k:
        raise AssertionError(f"syndrome rank {rank} != n - k = {n - code.k}")
    counts = _weight_distribution(columns, t_count)
    multiplier = 1 << (n - rank)
    levels = [
        (2 * w - t_count, counts[w] * multiplier)
        for w in range(t_count + 1)
        if counts[w]
    ]
    if sum(d for _, d in levels) != 1 << n:
        raise AssertionError("level degeneracies do not sum to 2^n")
    gap = levels[1][0] - levels[0][0] if len(levels) > 1 else math.inf
    return SpectrumReport(
        levels=levels,
        ground_energy=levels[0][0],
        ground_degeneracy=levels[0][1],
        gap=gap,
        n_qubits=n,
        term_count=t_count,
        method="charge_classes",
    )


def partition_function(h: HamiltonianSpec, beta: float) -> float:
    """Sum over levels of degeneracy * exp(-beta * energy)."""
    report = spectrum(h)
    return sum(float(d) * math.exp(-beta * e) for e, d in report.levels)


@dataclass
class GapTrend:
    points: list[tuple[int, float]]
    constant: bool

    def to_json_dict(self) -> dict:
        return {
            "points": [[s, g] for s, g in self.points],
            "constant": self.constant,
        }


def gap_trend(family_builder, sizes: list[int]) -> GapTrend:
    """Gap per size for a family constructor; flags whether it is constant."""
    points = []
    for size in sizes:
        instance = family_builder(size)
        report = spectrum(HamiltonianSpec.from_code(instance.code))
        points.append((size, report.gap))
    gaps = {g for _, g in points}
    return GapTrend(points=points, constant=len(gaps) == 1)


def exact_diag_oracle(
    h: HamiltonianSpec, conv: PairingConvention = DEFAULT_CONVENTION
) -> SpectrumReport:
    """Spectrum of the signed Pauli terms via symplectic reduction.

    Expresses every term over an independent generator set with exact sign
    tracking, then enumerates the 2^rank joint eigenvalue patterns; each
    pattern carries a 2^(n-rank)-dimensional eigenspace.  Integer arithmetic
    throughout.
    """
    code = h.code
    n = code.n
    if n > ORACLE_QUBIT_LIMIT:
        raise TooLarge(f"oracle handles at most {ORACLE_QUBIT_LIMIT} qubits")
    term_ops = [cycle_to_pauli(code.graph, t, conv) for t in h.terms]
    # Phase 1: echelonize the terms into a fully reduced signed basis, so a
    # single ascending-pivot pass later never reintroduces a pivot bit.
    gens: list[tuple[int, PauliString]] = []
    for op in term_ops:
        cur = op
        for pivot, gen in gens:
            if (cur.symplectic_bits() >> pivot) & 1:
                cur = cur * gen
        bits = cur.symplectic_bits()
        if bits == 0:
            continue  # dependent term (any sign); expressed in phase 2
        pivot = (bits & -bits).bit_length() - 1
        gens = [
            (p, g * cur if (g.symplectic_bits() >> pivot) & 1 else g)
            for p, g in gens
        ]
        gens.append((pivot, cur))
        gens.sort(key=lambda item: item[0])
    # Phase 2: express every term over the frozen basis with exact signs.
    expressions: list[tuple[int, frozenset[int]]] = []
    for op in term_ops:
        cur = op
        used = set()
        for idx, (pivot, gen) in enumerate(gens):
            if (cur.symplectic_bits() >> pivot) & 1:
                cur = cur * gen
                used.add(idx)
        if cur.symplectic_bits() != 0:
            raise AssertionError("term fails to reduce against the term basis")
        expressions.append((cur.sign, frozenset(used)))
    r = len(gens)
    multiplier = 1 << (n - r)
    level_counts: dict[int, int] = {}
    for pattern in range(1 << r):
        energy = 0
        for sign, subset in expressions:
            value = sign
            for j in subset:
                if (pattern >> j) & 1:
                    value = -value
            energy -= value
        level_counts[energy] = level_counts.get(energy, 0) + multiplier
    levels = sorted(level_counts.items())
    gap = levels[1][0] - levels[0][0] if len(levels) > 1 else math.inf
    return SpectrumReport(
        levels=levels,
        ground_energy=levels[0][0],
        ground_degeneracy=levels[0][1],
        gap=gap,
        n_qubits=n,
        term_count=h.term_count,
        method="exact_diag",
    )
