"""Finite groups with two marked generators, Cayley graphs, relation cycles.

Vertices are group elements in a deterministic enumeration order; every
element g contributes an a-edge (g, ga) and a b-edge (g, gb).  Slots follow
the convention 0 = a-outgoing, 1 = a-incoming, 2 = b-outgoing,
3 = b-incoming, so order-2 generators yield doubled edges and the graph is
always 4-valent.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .codespace import GraphicalCode, check_matrix, code_from_cycles
from .errors import (
    BoundViolated,
    IdentityGenerator,
    NotARelator,
    NotGenerating,
    ParseError,
)
from .f2 import BitVec
from .graph import QuantizedGraph


class GroupSpec:
    """A finite group with two marked generators a and b."""

    def __init__(self, elements, mul, inv, identity, a, b, kind: str, meta: dict):
        self.elements = tuple(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self._mul = mul
        self._inv = inv
        self.identity = identity
        self.a = a
        self.b = b
        self.kind = kind
        self.meta = meta
        self._validate()

    # -- constructors -------------------------------------------------------

    @classmethod
    def cyclic(cls, n: int, a: int, b: int) -> "GroupSpec":
        if n < 1:
            raise ParseError("cyclic group order must be >= 1")
        return cls(
            range(n),
            lambda x, y: (x + y) % n,
            lambda x: (-x) % n,
            0,
            a % n,
            b % n,
            "cyclic",
            {"n": n},
        )

    @classmethod
    def product(cls, moduli: list[int], a, b) -> "GroupSpec":
        moduli = [int(m) for m in moduli]
        if any(m < 1 for m in moduli):
            raise ParseError("moduli must be >= 1")
        elements = list(itertools.product(*[range(m) for m in moduli]))
        norm = lambda t: tuple(x % m for x, m in zip(t, moduli))
        return cls(
            elements,
            lambda x, y: tuple((u + v) % m for u, v, m in zip(x, y, moduli)),
            lambda x: tuple((-u) % m for u, m in zip(x, moduli)),
            tuple(0 for _ in moduli),
            norm(tuple(a)),
            norm(tuple(b)),
            "product",
            {"moduli": moduli},
        )

    @classmethod
    def parity_subgroup(cls, moduli: list[int], a, b) -> "GroupSpec":
        """Subgroup of the product where the coordinate sum is even."""
        moduli = [int(m) for m in moduli]
        if any(m % 2 for m in moduli):
            raise ParseError("parity subgroup needs even moduli to be well defined")
        elements = [
            t
            for t in itertools.product(*[range(m) for m in moduli])
            if sum(t) % 2 == 0
        ]
        norm = lambda t: tuple(x % m for x, m in zip(t, moduli))
        av, bv = norm(tuple(a)), norm(tuple(b))
        for name, v in (("a", av), ("b", bv)):
            if sum(v) % 2:
                raise ParseError(f"generator {name}={v} is outside the parity subgroup")
        return cls(
            elements,
            lambda x, y: tuple((u + v) % m for u, v, m in zip(x, y, moduli)),
            lambda x: tuple((-u) % m for u, m in zip(x, moduli)),
            tuple(0 for _ in moduli),
            av,
            bv,
            "parity_subgroup",
            {"moduli": moduli},
        )

    @classmethod
    def from_table(cls, mul_table: list[list[int]], a: int, b: int) -> "GroupSpec":
        n = len(mul_table)
        if any(len(row) != n for row in mul_table):
            raise ParseError("multiplication table must be square")
        for row in mul_table:
            for v in row:
                if not 0 <= v < n:
                    raise ParseError("table entries must be element indices")
        identity = None
        for e in range(n):
            if all(mul_table[e][x] == x == mul_table[x][e] for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ParseError("table has no identity element")
        inv = {}
        for x in range(n):
            for y in range(n):
                if mul_table[x][y] == identity and mul_table[y][x] == identity:
                    inv[x] = y
                    break
            else:
                raise ParseError(f"element {x} has no inverse")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mul_table[mul_table[x][y]][z] != mul_table[x][mul_table[y][z]]:
                        raise ParseError("table is not associative")
        return cls(
            range(n),
            lambda x, y: mul_table[x][y],
            lambda x: inv[x],
            identity,
            a,
            b,
            "table",
            {"mul": mul_table},
        )

    # -- group operations ----------------------------------------------------

    def mul(self, x, y):
        return self._mul(x, y)

    def inv(self, x):
        return self._inv(x)

    @property
    def order(self) -> int:
        return len(self.elements)

    def _validate(self) -> None:
        for name, g in (("a", self.a), ("b", self.b)):
            if g not in self.index:
                raise ParseError(f"generator {name}={g!r} is not a group element")
            if g == self.identity:
                raise IdentityGenerator(f"generator {name} is the identity")
        seen = {self.identity}
        frontier = [self.identity]
        steps = [self.a, self.b, self._inv(self.a), self._inv(self.b)]
        while frontier:
            g = frontier.pop()
            for s in steps:
                h = self._mul(g, s)
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        if len(seen) != len(self.elements):
            raise NotGenerating(
                f"a and b generate only {len(seen)} of {len(self.elements)} elements"
            )

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        d = {"type": self.kind, **self.meta}
        d["a"] = list(self.a) if isinstance(self.a, tuple) else self.a
        d["b"] = list(self.b) if isinstance(self.b, tuple) else self.b
        return d

    @classmethod
    def from_json_dict(cls, data: dict) -> "GroupSpec":
        try:
            kind = data["type"]
            if kind == "cyclic":
                return cls.cyclic(int(data["n"]), int(data["a"]), int(data["b"]))
            if kind == "product":
                return cls.product(data["moduli"], data["a"], data["b"])
            if kind == "parity_subgroup":
                return cls.parity_subgroup(data["moduli"], data["a"], data["b"])
            if kind == "table":
                return cls.from_table(data["mul"], int(data["a"]), int(data["b"]))
        except KeyError as exc:
            raise ParseError(f"group spec missing field {exc}") from exc
        raise ParseError(f"unknown group spec type {data.get('type')!r}")

    @classmethod
    def from_json(cls, text: str) -> "GroupSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)


class CayleyGraph(QuantizedGraph):
    """Quantized graph of a GroupSpec, keeping the group structure around."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        n = spec.order
        idx = spec.index
        self.a_edge = [0] * n
        self.b_edge = [0] * n
        edges = []
        for i, g in enumerate(spec.elements):
            self.a_edge[i] = len(edges)
            edges.append(((i, 0), (idx[spec.mul(g, spec.a)], 1)))
        for i, g in enumerate(spec.elements):
            self.b_edge[i] = len(edges)
            edges.append(((i, 2), (idx[spec.mul(g, spec.b)], 3)))
        super().__init__(n, edges)

    def vertex_permutation(self, h) -> list[int]:
        """Left translation g -> h*g as a vertex permutation."""
        idx = self.spec.index
        return [idx[self.spec.mul(h, g)] for g in self.spec.elements]

    def edge_permutation(self, h) -> list[int]:
        """Edge permutation induced by left translation (type-preserving)."""
        idx = self.spec.index
        perm = [0] * self.edge_count
        for i, g in enumerate(self.spec.elements):
            j = idx[self.spec.mul(h, g)]
            perm[self.a_edge[i]] = self.a_edge[j]
            perm[self.b_edge[i]] = self.b_edge[j]
        return perm


def cayley_graph(spec: GroupSpec) -> CayleyGraph:
    return CayleyGraph(spec)


# -- presentations -----------------------------------------------------------

_STEP = {"a": ("a", +1), "A": ("a", -1), "b": ("b", +1), "B": ("b", -1)}


def parse_word(word: str) -> list[tuple[str, int]]:
    """Words over a, b with A, B for inverses; parentheses/spaces ignored."""
    steps = []
    for ch in word:
        if ch in "() \t":
            continue
        if ch not in _STEP:
            raise ParseError(f"invalid word character {ch!r} (use a, b, A, B)")
        steps.append(_STEP[ch])
    return steps


@dataclass(frozen=True)
class Presentation:
    """Relator words of the covering group, over the letters a, b, A, B."""

    relators: tuple[str, ...]
    curvature: int | None = None

    @property
    def max_relator_length(self) -> int:
        return max((len(parse_word(r)) for r in self.relators), default=0)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def validate(self, spec: GroupSpec) -> None:
        for r in self.relators:
            g = spec.identity
            for gen, sign in parse_word(r):
                step = spec.a if gen == "a" else spec.b
                if sign < 0:
                    step = spec.inv(step)
                g = spec.mul(g, step)
            if g != spec.identity:
                raise NotARelator(f"relator {r!r} evaluates to {g!r}, not the identity")

    def to_json_dict(self) -> dict:
        return {"relators": list(self.relators)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Presentation":
        try:
            relators = tuple(str(r) for r in data["relators"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed presentation: {exc}") from exc
        for r in relators:
            parse_word(r)
        return cls(relators)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def relation_cycle(cg: CayleyGraph, start, word: str) -> BitVec:
    """Edge-toggle trace of the word from start; backtracking cancels mod 2."""
    spec = cg.spec
    if start in spec.index:
        cur = start
    else:
        raise ParseError(f"start {start!r} is not a group element")
    bits = 0
    for gen, sign in parse_word(word):
        step = spec.a if gen == "a" else spec.b
        table = cg.a_edge if gen == "a" else cg.b_edge
        if sign > 0:
            bits ^= 1 << table[spec.index[cur]]
            cur = spec.mul(cur, step)
        else:
            cur = spec.mul(cur, spec.inv(step))
            bits ^= 1 << table[spec.index[cur]]
    if cur != start:
        raise NotARelator(f"word {word!r} does not close from {start!r}")
    return BitVec(cg.edge_count, bits)


def code_from_group(spec: GroupSpec, presentation: Presentation) -> GraphicalCode:
    """Code generated by every translate of every relator cycle."""
    presentation.validate(spec)
    cg = cayley_graph(spec)
    cycles = [
        relation_cycle(cg, g, r) for r in presentation.relators for g in spec.elements
    ]
    return code_from_cycles(cg, cycles)


def triangle_presentation(p: int, q: int, r: int) -> Presentation:
    """Relators a^p, b^q, (ab)^r with the curvature sign attached."""
    if min(p, q, r) < 2:
        raise ParseError("triangle parameters must be >= 2")
    excess = Fraction(1, p) + Fraction(1, q) + Fraction(1, r) - 1
    curvature = 1 if excess > 0 else (0 if excess == 0 else -1)
    return Presentation(("a" * p, "b" * q, "ab" * r), curvature=curvature)


# -- sparsity ---------------------------------------------------------------


@dataclass
class LdpcReport:
    row_weight_max: int
    col_weight_max: int
    density: float
    n_rows: int
    n_cols: int
    max_relator_length: int
    relator_count: int

    def to_json_dict(self) -> dict:
        return {
            "row_weight_max": self.row_weight_max,
            "col_weight_max": self.col_weight_max,
            "density": round(self.density, 6),
            "n_rows": self.n_rows,
            "n_cols": self.n_cols,
            "max_relator_length": self.max_relator_length,
            "relator_count": self.relator_count,
        }


def ldpc_report(code: GraphicalCode, presentation: Presentation) -> LdpcReport:
    """Row/column weights of the check matrix with the structural bounds."""
    rows = check_matrix(code)
    n_cols = code.graph.edge_count
    row_w = [r.weight() for r in rows]
    col_w = [sum((r.bits >> j) & 1 for r in rows) for j in range(n_cols)]
    row_max = max(row_w, default=0)
    col_max = max(col_w, default=0)
    big_r = presentation.max_relator_length
    count = presentation.relator_count
    if row_max > big_r:
        raise BoundViolated(f"row weight {row_max} exceeds relator length {big_r}")
    if col_max > count * big_r:
        raise BoundViolated(f"column weight {col_max} exceeds {count}*{big_r}")
    density = max(
        row_max / n_cols if n_cols else 0.0,
        col_max / len(rows) if rows else 0.0,
    )
    if density > big_r / code.n + 1e-12:
        raise BoundViolated(f"density {density} exceeds R/n = {big_r / code.n}")
    return LdpcReport(
        row_weight_max=row_max,
        col_weight_max=col_max,
        density=density,
        n_rows=len(rows),
        n_cols=n_cols,
        max_relator_length=big_r,
        relator_count=count,
    )
