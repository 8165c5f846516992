"""Quantized graphs: connected 4-valent multigraphs with ordered half-edge slots.

Each vertex carries four slots 0..3 (the four strings of its disc); an edge is
an unordered pair of (vertex, slot) half-edges.  Parallel edges and self-loops
are allowed.  The edge list order fixes the coordinate order of every
EdgeVector, bit-exactly, so reports are reproducible.
"""

from __future__ import annotations

import json
import random
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotACycle, NotConnected, NotFourValent, ParseError, SlotReused
from .f2 import BitVec, Subspace, orthogonal_complement

HalfEdge = tuple[int, int]  # (vertex index, slot index in 0..3)

# Slot-pair enumeration order used by pair_generators and the pairing classes.
SLOT_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class QuantizedGraph:
    """Connected 4-valent multigraph with per-vertex slot order."""

    def __init__(self, vertex_count: int, edges: Sequence[tuple[HalfEdge, HalfEdge]]):
        self.vertex_count = vertex_count
        self.edges = tuple((tuple(a), tuple(b)) for a, b in edges)
        self._slot_edge: dict[HalfEdge, int] = {}
        for idx, (a, b) in enumerate(self.edges):
            for v, s in (a, b):
                if not (0 <= v < vertex_count):
                    raise ParseError(f"edge {idx}: vertex {v} out of range")
                if not (0 <= s <= 3):
                    raise ParseError(f"edge {idx}: slot {s} out of range 0..3")
                if (v, s) in self._slot_edge:
                    raise SlotReused(f"half-edge (vertex {v}, slot {s}) used twice")
                self._slot_edge[(v, s)] = idx
        self.validate()

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def validate(self) -> None:
        """Check 4-valence (every slot filled) and connectivity."""
        for v in range(self.vertex_count):
            for s in range(4):
                if (v, s) not in self._slot_edge:
                    raise NotFourValent(f"vertex {v} is missing slot {s}")
        if len(self.edges) != 2 * self.vertex_count:
            raise NotFourValent(
                f"edge count {len(self.edges)} != 2*vertices {2 * self.vertex_count}"
            )
        if self.vertex_count == 0:
            raise NotConnected("empty graph")
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for s in range(4):
                a, b = self.edges[self._slot_edge[(v, s)]]
                w = b[0] if a == (v, s) else a[0]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.vertex_count:
            raise NotConnected(f"only {len(seen)} of {self.vertex_count} vertices reachable")

    def slot_edge(self, v: int, s: int) -> int:
        """Edge index attached at (vertex v, slot s)."""
        return self._slot_edge[(v, s)]

    def incident_edges(self, v: int) -> tuple[int, int, int, int]:
        """Edge indices at slots 0..3 of v (a self-loop appears twice)."""
        return tuple(self._slot_edge[(v, s)] for s in range(4))

    def is_loop(self, e: int) -> bool:
        a, b = self.edges[e]
        return a[0] == b[0]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e][0][0], self.edges[e][1][0]

    # -- edge vectors ------------------------------------------------------

    def edge_vector(self, indices: Iterable[int]) -> BitVec:
        return BitVec.from_indices(self.edge_count, indices)

    def zero_vector(self) -> BitVec:
        return BitVec(self.edge_count)

    def full_edge_set(self) -> BitVec:
        """The vector 1_E of all edges; a cycle on any 4-regular graph."""
        return BitVec(self.edge_count, (1 << self.edge_count) - 1)

    def vertex_star(self, v: int) -> BitVec:
        """Edges with exactly one endpoint at v; self-loops contribute 0."""
        bits = 0
        for s in range(4):
            e = self._slot_edge[(v, s)]
            if not self.is_loop(e):
                bits ^= 1 << e
        # Parallel edges appear at two slots of v only if they are loops;
        # non-loop edges occupy one slot here, so XOR equals the star set.
        return BitVec(self.edge_count, bits)

    def charged_slot_count(self, v: int, vec: BitVec) -> int:
        """Number of slots of v whose edge lies in vec (loops count twice)."""
        return sum(1 for s in range(4) if (vec.bits >> self._slot_edge[(v, s)]) & 1)

    # -- canonical GF(2) spaces (cached; graphs are immutable) --------------

    @cached_property
    def _incidence_rows(self) -> list[BitVec]:
        return [self.vertex_star(v) for v in range(self.vertex_count)]

    @cached_property
    def cycle_space_(self) -> Subspace:
        return Subspace(self.edge_count, self._incidence_rows).orthogonal_complement()

    @cached_property
    def cut_space_(self) -> Subspace:
        return Subspace(self.edge_count, self._incidence_rows)

    @cached_property
    def even_space_(self) -> Subspace:
        return orthogonal_complement(Subspace(self.edge_count, [self.full_edge_set()]))

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[list(a), list(b)] for a, b in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "QuantizedGraph":
        try:
            n = int(data["vertices"])
            edges = [
                ((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
                for a, b in data["edges"]
            ]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ParseError(f"malformed graph object: {exc}") from exc
        return cls(n, edges)

    @classmethod
    def from_json(cls, text: str) -> "QuantizedGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def validate(g: QuantizedGraph) -> None:
    g.validate()


def cycle_space(g: QuantizedGraph) -> Subspace:
    """Edge sets with even incidence at every vertex; contains 1_E."""
    return g.cycle_space_


def cut_space(g: QuantizedGraph) -> Subspace:
    """Span of vertex stars = edge sets crossing a vertex bipartition."""
    return g.cut_space_


def even_space(g: QuantizedGraph) -> Subspace:
    """Even-cardinality edge sets (the charge sets)."""
    return g.even_space_


def is_bipartite_set(g: QuantizedGraph, c: BitVec) -> bool:
    return g.cut_space_.contains(c)


def pair_generators(g: QuantizedGraph) -> list[BitVec]:
    """The 6n adjacent-edge-pair vectors, in (vertex, slot-pair) order.

    A pair of slots on the same edge (the two legs of a self-loop) XORs to the
    zero vector; it is kept in the list for stable indexing and skipped by
    searches.
    """
    out = []
    for v in range(g.vertex_count):
        incident = g.incident_edges(v)
        for i, j in SLOT_PAIRS:
            out.append(BitVec(g.edge_count, (1 << incident[i]) ^ (1 << incident[j])))
    return out


def essential_length(g: QuantizedGraph, l: BitVec) -> int:
    """Number of vertices where the cycle l uses exactly two slots."""
    if not g.cycle_space_.contains(l):
        raise NotACycle("edge vector is not a cycle")
    return sum(1 for v in range(g.vertex_count) if g.charged_slot_count(v, l) == 2)


def random_regular_multigraph(n: int, seed: int) -> QuantizedGraph:
    """Seeded random connected 4-valent multigraph on n vertices.

    Draws uniform perfect matchings on the 4n half-edge slots until the
    result is connected (loops and parallel edges permitted).
    """
    rng = random.Random(seed)
    slots = [(v, s) for v in range(n) for s in range(4)]
    while True:
        perm = slots[:]
        rng.shuffle(perm)
        edges = [(perm[2 * i], perm[2 * i + 1]) for i in range(2 * n)]
        edges = [tuple(sorted(e)) for e in edges]
        edges.sort()
        try:
            return QuantizedGraph(n, edges)
        except NotConnected:
            continue
