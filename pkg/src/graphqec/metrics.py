"""Distance theory: weights, essential lengths, optimal codes, and bounds.

The two halves of the distance formula are computed independently: the
bipartite weight side is a BFS word metric on charge classes generated by
adjacent-edge pairs, and the essential-length side is an exhaustive scan of
the cycle space outside the closed cycle group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import _bulk
from .codespace import ChargeClass, GraphicalCode, close_cycles
from .errors import BudgetExceeded, NotACycle, NotEven, TooLarge
from .f2 import BitVec, Subspace, min_generator_count, zero_subspace
from .graph import QuantizedGraph, pair_generators

ENUM_DIM_LIMIT = 24  # exact cycle-space enumeration guard
CLASS_DIM_LIMIT = 20  # exact optimal-group search guard
SEARCH_NODE_CAP = 2_000_000


# -- elementary weights ------------------------------------------------------


def weight_w(g: QuantizedGraph, c: BitVec, budget: int | None = None) -> int:
    """Min number of adjacent-edge pairs summing to the charge set c."""
    if not g.even_space_.contains(c):
        raise NotEven("weight is defined for even edge sets only")
    result = min_generator_count(c, pair_generators(g), zero_subspace(g.edge_count), budget)
    if result is None:
        raise AssertionError("even sets are always pair-generated on connected graphs")
    return result


def bipartite_weight(g: QuantizedGraph, c: BitVec, budget: int | None = None) -> int:
    """Min pair count for c modulo the cut space; 0 iff c is bipartite."""
    if not g.even_space_.contains(c):
        raise NotEven("bipartite weight is defined for even edge sets only")
    result = min_generator_count(c, pair_generators(g), g.cut_space_, budget)
    if result is None:
        raise AssertionError("charge classes are always pair-reachable")
    return result


# -- charge-class coordinates ------------------------------------------------


class ClassSpace:
    """Dense integer coordinates on the quotient (even sets) / (cut space)."""

    def __init__(self, g: QuantizedGraph):
        self.graph = g
        cut = g.cut_space_
        reduced = Subspace(g.edge_count, [cut.reduce_bits(r) for r in g.even_space_.rows])
        self.basis_rows = reduced.rows
        self.pivots = reduced.pivots
        self.dim = reduced.dim  # equals the vertex count

    def encode(self, c: BitVec) -> int:
        rep = self.graph.cut_space_.reduce_bits(c.bits)
        idx = 0
        for i, p in enumerate(self.pivots):
            idx |= ((rep >> p) & 1) << i
        return idx

    def decode(self, idx: int) -> BitVec:
        bits = 0
        for i, row in enumerate(self.basis_rows):
            if (idx >> i) & 1:
                bits ^= row
        return BitVec(self.graph.edge_count, bits)

    def wb_table(self, budget: int | None = None) -> np.ndarray:
        """BFS distances w_b for every class index (-1 beyond the budget)."""
        masks = []
        for pg in pair_generators(self.graph):
            if not pg.is_zero():
                m = self.encode(pg)
                if m:
                    masks.append(m)
        return _bulk.bfs_distances(self.dim, masks, max_level=budget)


# -- essential-length search ---------------------------------------------


def _vertex_masks(g: QuantizedGraph) -> list[tuple[int, int]]:
    out = []
    for v in range(g.vertex_count):
        nonloop = loop = 0
        for s in range(4):
            e = g.slot_edge(v, s)
            if g.is_loop(e):
                loop |= 1 << e
            else:
                nonloop |= 1 << e
        out.append((nonloop, loop))
    return out


def _ell_bulk(g: QuantizedGraph, arr: np.ndarray) -> np.ndarray:
    """Essential length of each uint64-packed cycle in arr."""
    ell = np.zeros(arr.shape, dtype=np.int16)
    for nonloop, loop in _vertex_masks(g):
        cnt = _bulk.popcount_u64(arr & np.uint64(nonloop)).astype(np.int16)
        cnt += 2 * _bulk.popcount_u64(arr & np.uint64(loop)).astype(np.int16)
        ell += (cnt == 2).astype(np.int16)
    return ell


def _quotient_rows(space: Subspace, sub: Subspace) -> list[int]:
    """RREF rows spanning a complement of sub inside space."""
    reduced = [sub.reduce_bits(r) for r in space.rows]
    return list(Subspace(space.ambient_dim, reduced).rows)


def ell_of_set(
    g: QuantizedGraph,
    cycle_group: Subspace,
    budget: int | None = None,
) -> tuple[float, BitVec | None]:
    """Minimum essential length over cycles outside the closed group.

    Exact block enumeration over cycle-space cosets of the group.  Returns
    (inf, None) when the group is the whole cycle space.  The optional budget
    is accepted for interface parity; enumeration is exact at desk scale.
    """
    del budget
    if not g.cycle_space_.contains_space(cycle_group):
        raise NotACycle("cycle_group is not inside the cycle space")
    if not cycle_group.contains(g.full_edge_set()):
        raise ValueError("cycle_group must be a canonical closure containing 1_E")
    if g.cycle_space_.dim > ENUM_DIM_LIMIT:
        raise TooLarge(f"cycle space dim {g.cycle_space_.dim} > {ENUM_DIM_LIMIT}")
    if g.edge_count > 64:
        raise TooLarge("essential-length enumeration packs edges into 64-bit words")
    qrows = _quotient_rows(g.cycle_space_, cycle_group)
    if not qrows:
        return math.inf, None
    block = _bulk.xor_span(list(cycle_group.rows))
    best = math.inf
    witness = None
    for combo in range(1, 1 << len(qrows)):
        rep = 0
        for i, row in enumerate(qrows):
            if (combo >> i) & 1:
                rep ^= row
        shifted = block ^ np.uint64(rep)
        ell = _ell_bulk(g, shifted)
        pos = int(np.argmin(ell))
        if int(ell[pos]) < best:
            best = int(ell[pos])
            witness = BitVec(g.edge_count, int(shifted[pos]))
            if best == 0:
                break
    return best, witness


def essential_girth(g: QuantizedGraph) -> int:
    """Min essential length over cycles other than 0 and the full edge set."""
    value, _ = ell_of_set(g, close_cycles(g, []))
    if value is math.inf:
        raise AssertionError("a 4-regular graph always has nontrivial cycles")
    return int(value)


# -- the distance formula ------------------------------------------------


@dataclass
class DistanceReport:
    d: float
    wb_part: float
    ell_part: float
    witness_class: ChargeClass | None
    witness_cycle: BitVec | None
    method: str = "graphical"
    budget_used: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "d": None if self.d == math.inf else int(self.d),
            "wb_part": None if self.wb_part == math.inf else int(self.wb_part),
            "ell_part": None if self.ell_part == math.inf else int(self.ell_part),
            "witness_class": (
                self.witness_class.representative.to01() if self.witness_class else None
            ),
            "witness_cycle": self.witness_cycle.to01() if self.witness_cycle else None,
            "method": self.method,
            "budget_used": self.budget_used,
        }


def distance(code: GraphicalCode, budget: int | None = None) -> DistanceReport:
    """d = min(bipartite weight over nontrivial logical classes, min essential
    length outside the cycle group)."""
    g = code.graph
    cs = ClassSpace(g)
    table = cs.wb_table(budget)
    wb_part = math.inf
    witness_class = None
    unreached = False
    basis_idx = [cs.encode(rep.representative) for rep in code.logical_class_reps]
    for mask in range(1, 1 << len(basis_idx)):
        idx = 0
        for i, b in enumerate(basis_idx):
            if (mask >> i) & 1:
                idx ^= b
        dval = int(table[idx])
        if dval < 0:
            unreached = True
            continue
        if dval < wb_part:
            wb_part = dval
            witness_class = ChargeClass(g, cs.decode(idx))
    ell_part, witness_cycle = ell_of_set(g, code.cycle_group)
    if unreached and budget is not None and wb_part > budget:
        # Every candidate class is beyond the budget; only one-sided info.
        if ell_part > budget:
            report = DistanceReport(
                math.inf, math.inf, ell_part, None, witness_cycle, budget_used=budget
            )
            raise BudgetExceeded(
                f"distance exceeds budget {budget}", bound=budget, partial=report
            )
        wb_part = math.inf
        witness_class = None
    d = min(wb_part, ell_part)
    return DistanceReport(
        d=d,
        wb_part=wb_part,
        ell_part=ell_part,
        witness_class=witness_class,
        witness_cycle=witness_cycle,
        budget_used=budget,
    )


# -- threshold sets and optimal codes -------------------------------------


@dataclass
class ThresholdSets:
    """The three D-threshold objects: cycles below D, their perp, and the
    admissible charge predicate/sampler."""

    graph: QuantizedGraph
    d_threshold: int
    ld_cycles: list[BitVec]
    ld_span: Subspace
    admissible_space: Subspace  # ld_span^perp intersected with the even space
    _wb: Callable[[BitVec], int]

    def cd_contains(self, c: BitVec) -> bool:
        return self._wb(c) >= self.d_threshold

    def id_iter(self) -> Iterator[BitVec]:
        for bits in self.admissible_space.enumerate_bits():
            v = BitVec(self.graph.edge_count, bits)
            if self._wb(v) >= self.d_threshold:
                yield v


def _cycle_enumeration(g: QuantizedGraph) -> tuple[np.ndarray, np.ndarray]:
    if g.cycle_space_.dim > ENUM_DIM_LIMIT:
        raise TooLarge(f"cycle space dim {g.cycle_space_.dim} > {ENUM_DIM_LIMIT}")
    if g.edge_count > 64:
        raise TooLarge("cycle enumeration packs edges into 64-bit words")
    arr = _bulk.xor_span(list(g.cycle_space_.rows))
    return arr, _ell_bulk(g, arr)


def threshold_sets(g: QuantizedGraph, d_threshold: int) -> ThresholdSets:
    arr, ell = _cycle_enumeration(g)
    keep = arr[ell < d_threshold]
    ld_cycles = [BitVec(g.edge_count, int(b)) for b in sorted(map(int, keep))]
    ld_span = Subspace(g.edge_count, [c.bits for c in ld_cycles])
    admissible = ld_span.orthogonal_complement().intersect(g.even_space_)
    cs = ClassSpace(g)
    table = cs.wb_table()
    return ThresholdSets(
        graph=g,
        d_threshold=d_threshold,
        ld_cycles=ld_cycles,
        ld_span=ld_span,
        admissible_space=admissible,
        _wb=lambda c: int(table[cs.encode(c)]),
    )


def _ell_span_ladder(g: QuantizedGraph) -> dict[int, Subspace]:
    """For each t, the span of all cycles with essential length <= t."""
    arr, ell = _cycle_enumeration(g)
    order = np.argsort(ell, kind="stable")
    ladder: dict[int, Subspace] = {}
    basis: dict[int, int] = {}
    current = None
    for pos in order:
        t = int(ell[pos])
        if current is None:
            current = t
        if t != current:
            ladder[current] = Subspace(g.edge_count, list(basis.values()))
            current = t
        v = int(arr[pos])
        for p in sorted(basis):
            if (v >> p) & 1:
                v ^= basis[p]
        if v:
            basis[(v & -v).bit_length() - 1] = v
    if current is not None:
        ladder[current] = Subspace(g.edge_count, list(basis.values()))
    return ladder


def _ld_span_at(ladder: dict[int, Subspace], g: QuantizedGraph, d_threshold: int) -> Subspace:
    ts = [t for t in ladder if t < d_threshold]
    if not ts:
        return zero_subspace(g.edge_count)
    return ladder[max(ts)]


def _class_indices(cs: ClassSpace, space: Subspace) -> tuple[list[int], int]:
    """Distinct class indices of a charge subspace: basis and quotient dim."""
    idx_basis = sorted({cs.encode(BitVec(cs.graph.edge_count, r)) for r in space.rows} - {0})
    span: dict[int, int] = {}
    for v in idx_basis:
        for p in sorted(span):
            if (v >> p) & 1:
                v ^= span[p]
        if v:
            span[(v & -v).bit_length() - 1] = v
    reduced = sorted(span.values())
    return reduced, len(reduced)


def _enumerate_indices(basis: list[int]) -> list[int]:
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out


def graph_code_distance(g: QuantizedGraph) -> int:
    """Largest D for which some class has w_b >= D and is perp to all
    cycles of essential length < D (descending scan from n)."""
    cs = ClassSpace(g)
    table = cs.wb_table()
    ladder = _ell_span_ladder(g)
    for d_threshold in range(g.vertex_count, 0, -1):
        span = _ld_span_at(ladder, g, d_threshold)
        admissible = span.orthogonal_complement().intersect(g.even_space_)
        basis, _ = _class_indices(cs, admissible)
        for idx in _enumerate_indices(basis):
            if idx and table[idx] >= d_threshold:
                return d_threshold
    raise AssertionError("D = 1 always admits a non-bipartite even set")


@dataclass
class OptimalResult:
    k: int
    witness_group: Subspace
    exact: bool


def optimal_function(g: QuantizedGraph, d_threshold: int) -> OptimalResult:
    """Largest subgroup of admissible charges whose nontrivial classes all
    have w_b >= D, reported as (k, witness group, exactness flag)."""
    cs = ClassSpace(g)
    table = cs.wb_table()
    ladder = _ell_span_ladder(g)
    span = _ld_span_at(ladder, g, d_threshold)
    admissible = span.orthogonal_complement().intersect(g.even_space_)
    basis, qdim = _class_indices(cs, admissible)
    all_indices = _enumerate_indices(basis)
    good = sorted(idx for idx in all_indices if idx and table[idx] >= d_threshold)
    if len(good) == len(all_indices) - 1:
        return OptimalResult(qdim, _lift_group(g, cs, basis), True)
    if not good:
        return OptimalResult(0, g.cut_space_, True)
    exact = qdim <= CLASS_DIM_LIMIT
    basis_found, complete = _max_good_subspace(good, SEARCH_NODE_CAP if exact else 0)
    return OptimalResult(
        len(basis_found), _lift_group(g, cs, basis_found), exact and complete
    )


def _max_good_subspace(good: list[int], node_cap: int) -> tuple[list[int], bool]:
    """Branch-and-bound for a maximum subspace inside good ∪ {0}."""
    good_set = set(good)
    best: list[int] = []
    nodes = 0
    aborted = False

    def recurse(basis: list[int], elems: frozenset[int], start: int) -> None:
        nonlocal best, nodes, aborted
        if aborted:
            return
        nodes += 1
        if nodes > node_cap:
            aborted = True
            return
        if len(basis) > len(best):
            best = list(basis)
        remaining = sum(1 for i in range(start, len(good)) if good[i] not in elems)
        if len(basis) + max(0, (remaining + 1).bit_length() - 1) <= len(best):
            return
        for i in range(start, len(good)):
            c = good[i]
            if c in elems:
                continue
            coset = [c ^ e for e in elems]
            if all(x in good_set for x in coset):
                recurse(basis + [c], elems | frozenset(coset), i + 1)

    if node_cap > 0:
        recurse([], frozenset([0]), 0)
    if aborted or node_cap == 0:
        # Greedy pass: deterministic lower bound.
        basis: list[int] = []
        elems = frozenset([0])
        for c in good:
            if c in elems:
                continue
            coset = [c ^ e for e in elems]
            if all(x in good_set for x in coset):
                basis.append(c)
                elems = elems | frozenset(coset)
        if len(basis) > len(best):
            best = basis
        return best, False
    return best, True


def _lift_group(g: QuantizedGraph, cs: ClassSpace, class_indices: list[int]) -> Subspace:
    lifted = [cs.decode(idx).bits for idx in class_indices]
    return Subspace(g.edge_count, lifted).sum(g.cut_space_)


@dataclass
class OptimalProfile:
    graph: QuantizedGraph = field(repr=False)
    code_distance: int
    breakpoints: list[tuple[int, int]]
    witnesses: list[Subspace]
    exact: bool

    def to_json_dict(self) -> dict:
        return {
            "code_distance": self.code_distance,
            "breakpoints": [[d, k] for d, k in self.breakpoints],
            "witness_charge_bases": [
                [BitVec(self.graph.edge_count, r).to01() for r in w.rows]
                for w in self.witnesses
            ],
            "exact": self.exact,
        }


def optimal_profile(g: QuantizedGraph) -> OptimalProfile:
    """The (d_j, k(d_j)) staircase of optimal codes with witness groups."""
    dmax = graph_code_distance(g)
    results = {d: optimal_function(g, d) for d in range(1, dmax + 1)}
    breakpoints = []
    witnesses = []
    for d in range(1, dmax + 1):
        k_here = results[d].k
        k_next = results[d + 1].k if d + 1 <= dmax else 0
        if d == dmax or k_here > k_next:
            breakpoints.append((d, k_here))
            witnesses.append(results[d].witness_group)
    return OptimalProfile(
        graph=g,
        code_distance=dmax,
        breakpoints=breakpoints,
        witnesses=witnesses,
        exact=all(r.exact for r in results.values()),
    )


# -- existence bounds ---------------------------------------------------


def gv_sum(n: int, d: int) -> int:
    """Exact integer sum_{j<d} C(n,j) 3^j."""
    return sum(math.comb(n, j) * 3**j for j in range(d))


def gv_bound(n: int, d: int) -> float:
    """Guaranteed logical count n - log2(sum_{j<d} C(n,j) 3^j); may be <= 0."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    return n - math.log2(gv_sum(n, d))


def gv_bound_improved(n: int, d: int, s: int) -> float:
    """Bound with s spanning dimensions of short cycles removed."""
    if s < 0:
        raise ValueError("s must be >= 0")
    return gv_bound(n, d) - s


def gv_bound_at_least(n: int, d: int, s: int, k: int) -> bool:
    """Exact integer test: n - s - log2(gv_sum) >= k."""
    return 2 ** (n - s - k) >= gv_sum(n, d)
