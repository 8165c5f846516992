"""Charge/cycle duality: closures, perps, equivalence classes, and codes.

A code on a quantized graph is a dual pair of subspaces of the edge space:
a closed cycle group (always containing the full edge set 1_E) and its
perpendicular charge group (always containing the cut space).  The logical
content is the quotient charge_group / cut_space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import NotACycle, NotEven
from .f2 import BitVec, Subspace
from .graph import QuantizedGraph


@dataclass(frozen=True)
class ChargeClass:
    """A charge set modulo the cut space, held by its canonical representative."""

    graph: QuantizedGraph = field(compare=False, repr=False)
    representative: BitVec

    def __post_init__(self):
        rep = self.graph.cut_space_.reduce(self.representative)
        object.__setattr__(self, "representative", rep)

    def is_trivial(self) -> bool:
        return self.representative.is_zero()

    def __add__(self, other: "ChargeClass") -> "ChargeClass":
        return ChargeClass(self.graph, self.representative ^ other.representative)


@dataclass
class GraphicalCode:
    """A graph together with its dual (charge group, cycle group) pair."""

    graph: QuantizedGraph
    cycle_group: Subspace
    charge_group: Subspace
    n: int
    k: int
    logical_class_reps: list[ChargeClass]
    generating_cycles: list[BitVec] = field(default_factory=list)

    def logical_classes(self):
        """Iterate all 2^k charge classes (on demand; reps are a basis)."""
        k = len(self.logical_class_reps)
        for mask in range(1 << k):
            rep = self.graph.zero_vector()
            for i in range(k):
                if (mask >> i) & 1:
                    rep ^= self.logical_class_reps[i].representative
            yield ChargeClass(self.graph, rep)


def close_cycles(g: QuantizedGraph, cycles: list[BitVec]) -> Subspace:
    """Span of the given cycles with the full edge set 1_E adjoined.

    1_E is a cycle on any 4-regular graph and its cycle operator is trivial;
    adjoining it keeps the logical count and the essential-length search
    domain consistent.
    """
    for c in cycles:
        if not g.cycle_space_.contains(c):
            raise NotACycle(f"generator {c.to01()} is outside the cycle space")
    return Subspace(g.edge_count, list(cycles) + [g.full_edge_set()])


def perp_charges(g: QuantizedGraph, cycle_group: Subspace) -> Subspace:
    """Even edge sets orthogonal to every cycle of the group."""
    if not g.cycle_space_.contains_space(cycle_group):
        raise NotACycle("cycle_group is not inside the cycle space")
    return cycle_group.orthogonal_complement().intersect(g.even_space_)


def perp_cycles(g: QuantizedGraph, charge_group: Subspace) -> Subspace:
    """Cycles orthogonal to every charge set of the group."""
    if not g.even_space_.contains_space(charge_group):
        raise NotEven("charge_group is not inside the even space")
    return charge_group.orthogonal_complement().intersect(g.cycle_space_)


def _logical_class_basis(g: QuantizedGraph, charge_group: Subspace) -> list[ChargeClass]:
    cut = g.cut_space_
    reduced = Subspace(g.edge_count, [cut.reduce_bits(r) for r in charge_group.rows])
    return [ChargeClass(g, BitVec(g.edge_count, r)) for r in reduced.rows]


def _assemble(
    g: QuantizedGraph,
    cycle_group: Subspace,
    charge_group: Subspace,
    generating_cycles: list[BitVec],
) -> GraphicalCode:
    n = g.vertex_count
    k = n - (cycle_group.dim - 1)
    k_dual = charge_group.dim - (n - 1)
    if k != k_dual:
        raise AssertionError(f"k identities disagree: {k} vs {k_dual}")
    reps = _logical_class_basis(g, charge_group)
    if len(reps) != k:
        raise AssertionError(f"logical class basis has {len(reps)} != k={k} entries")
    return GraphicalCode(
        graph=g,
        cycle_group=cycle_group,
        charge_group=charge_group,
        n=n,
        k=k,
        logical_class_reps=reps,
        generating_cycles=generating_cycles,
    )


def code_from_cycles(g: QuantizedGraph, cycles: list[BitVec]) -> GraphicalCode:
    """Build the code stabilized by the given cycles (plus the closure)."""
    cycle_group = close_cycles(g, cycles)
    charge_group = perp_charges(g, cycle_group)
    return _assemble(g, cycle_group, charge_group, list(cycles))


def code_from_charges(g: QuantizedGraph, charges: list[BitVec]) -> GraphicalCode:
    """Build the code whose logical charge sets span the given charges."""
    for c in charges:
        if not g.even_space_.contains(c):
            raise NotEven(f"charge set {c.to01()} has odd weight")
    charge_group = Subspace(g.edge_count, list(charges)).sum(g.cut_space_)
    cycle_group = perp_cycles(g, charge_group)
    closed_charges = perp_charges(g, cycle_group)
    if closed_charges != charge_group:
        raise AssertionError("charge group is not perp-closed")
    return _assemble(g, cycle_group, charge_group, cycle_group.basis())


def check_matrix(code: GraphicalCode) -> list[BitVec]:
    """Rows are the recorded generating cycles, columns the edges in file order.

    Solutions of A x = 0 inside the even space are exactly the charge group.
    """
    return list(code.generating_cycles)


def classify(g: QuantizedGraph, c: BitVec) -> ChargeClass:
    """Canonical class of an even edge set modulo the cut space."""
    if not g.even_space_.contains(c):
        raise NotEven(f"edge set {c.to01()} has odd weight")
    return ChargeClass(g, c)


# -- reports ---------------------------------------------------------------


def code_report(code: GraphicalCode) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "edge_order": [[list(a), list(b)] for a, b in code.graph.edges],
        "cycle_basis": [BitVec(code.graph.edge_count, r).to01() for r in code.cycle_group.rows],
        "charge_basis": [BitVec(code.graph.edge_count, r).to01() for r in code.charge_group.rows],
        "logical_class_reps": [c.representative.to01() for c in code.logical_class_reps],
        "check_matrix": [row.to01() for row in check_matrix(code)],
    }


def code_report_json(code: GraphicalCode) -> str:
    return json.dumps(code_report(code), sort_keys=True, indent=2)


def matrix_to_alist(rows: list[BitVec], n_cols: int) -> str:
    """MacKay alist text for a binary matrix given as row bit-vectors.

    Layout: "n m" (columns rows), max column/row weights, per-column weights,
    per-row weights, then 1-based index lists per column and per row.
    """
    m = len(rows)
    col_idx = [[] for _ in range(n_cols)]
    row_idx = []
    for i, r in enumerate(rows):
        sup = [j + 1 for j in r.support()]
        row_idx.append(sup)
        for j in r.support():
            col_idx[j].append(i + 1)
    col_w = [len(c) for c in col_idx]
    row_w = [len(r) for r in row_idx]
    lines = [
        f"{n_cols} {m}",
        f"{max(col_w, default=0)} {max(row_w, default=0)}",
        " ".join(map(str, col_w)),
        " ".join(map(str, row_w)),
    ]
    lines += [" ".join(map(str, c)) for c in col_idx]
    lines += [" ".join(map(str, r)) for r in row_idx]
    return "\n".join(lines) + "\n"
