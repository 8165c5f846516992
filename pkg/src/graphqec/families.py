"""Named code families with their published parameters pinned for regression.

Each constructor returns a FamilyInstance carrying the code, the expected
[[n,k,d]] triple, and (where the source fixes one) the target stabilizer
list plus the slot-pairing convention that reproduces it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cayley import CayleyGraph, GroupSpec, Presentation, cayley_graph, relation_cycle
from .codespace import GraphicalCode, code_from_cycles
from .f2 import BitVec
from .graph import QuantizedGraph
from .pauli import (
    DEFAULT_CONVENTION,
    PairingConvention,
    PauliString,
    convention_search,
)


@dataclass
class FamilyInstance:
    name: str
    params: dict
    code: GraphicalCode
    convention: PairingConvention
    expected_n: int
    expected_k: int
    expected_d: int | None
    note: str = ""
    stabilizer_target: list[PauliString] = field(default_factory=list)
    presentation: Presentation | None = None

    def check_nk(self) -> None:
        if (self.code.n, self.code.k) != (self.expected_n, self.expected_k):
            raise AssertionError(
                f"{self.name}: computed ({self.code.n},{self.code.k}) != "
                f"expected ({self.expected_n},{self.expected_k})"
            )


# -- K5 ----------------------------------------------------------------------

K5_EDGE_PAIRS = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),  # ring
    (0, 2), (1, 3), (2, 4), (3, 0), (4, 1),  # chords
]


def k5_graph() -> QuantizedGraph:
    """Complete graph on five vertices, circulant slot layout.

    Slot s of vertex v points to vertex v+1+s (mod 5); the edge order lists
    the five ring edges then the five chords.
    """
    edges = []
    for i, j in K5_EDGE_PAIRS:
        edges.append(((i, (j - i - 1) % 5), (j, (i - j - 1) % 5)))
    return QuantizedGraph(5, edges)


def k5_generator_cycles(g: QuantizedGraph) -> list[BitVec]:
    """The four length-4 generator cycles (1-based walks 2-4-3-5-2, ...)."""
    pair_index = {frozenset(g.endpoints(e)): e for e in range(g.edge_count)}
    walks = [
        (1, 3, 2, 4),
        (2, 4, 3, 0),
        (3, 0, 4, 1),
        (4, 1, 0, 2),
    ]
    cycles = []
    for walk in walks:
        idxs = [
            pair_index[frozenset((walk[i], walk[(i + 1) % 4]))] for i in range(4)
        ]
        cycles.append(g.edge_vector(idxs))
    return cycles


FIVE_ONE_THREE_STABILIZERS = ["IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"]


def five_one_three() -> FamilyInstance:
    """[[5,1,3]] built from the Cayley graph of Z5 with generators 1 and 3."""
    spec = GroupSpec.cyclic(5, 1, 3)
    pres = Presentation(("aaaB", "a" * 10))
    code = _code_from_group_with_graph(spec, pres)
    target = [PauliString.from_letters(w) for w in FIVE_ONE_THREE_STABILIZERS]
    conv = convention_search(code.graph, target, code.cycle_group)
    return FamilyInstance(
        name="five_one_three",
        params={},
        code=code,
        convention=conv,
        expected_n=5,
        expected_k=1,
        expected_d=3,
        note="pentagon-plus-chords circulant; stabilizers are length-4 cycles",
        stabilizer_target=target,
        presentation=pres,
    )


def _code_from_group_with_graph(
    spec: GroupSpec, pres: Presentation, graph: QuantizedGraph | None = None
) -> GraphicalCode:
    pres.validate(spec)
    cg = cayley_graph(spec)
    cycles = [relation_cycle(cg, g, r) for r in pres.relators for g in spec.elements]
    return code_from_cycles(graph if graph is not None else cg, cycles)


# -- Shor instances ------------------------------------------------------


def shor_repetition() -> FamilyInstance:
    """Three-qubit phase-pairs code on the doubled triangle."""
    spec = GroupSpec.cyclic(3, 1, 1)
    pres = Presentation(("aB", "aaaaaa"))
    code = _code_from_group_with_graph(spec, pres)
    target = [PauliString.from_letters(w) for w in ("ZZI", "IZZ")]
    conv = convention_search(code.graph, target, code.cycle_group)
    return FamilyInstance(
        name="shor_repetition",
        params={},
        code=code,
        convention=conv,
        expected_n=3,
        expected_k=1,
        expected_d=1,
        note="doubled-edge pairs stabilize; corrects one bit-flip only",
        stabilizer_target=target,
        presentation=pres,
    )


SHOR_913_STABILIZERS = [
    "XXIIIIIII", "IXXIIIIII",
    "IIIXXIIII", "IIIIXXIII",
    "IIIIIIXXI", "IIIIIIIXX",
    "ZZZZZZIII", "IIIZZZZZZ",
]


def shor_913() -> FamilyInstance:
    """[[9,1,3]]: three columns of doubled paths closed by two rings.

    Qubit 3c+r+1 is column c, row r (rows stacked bottom to top).  The six
    doubled pairs give the weight-2 generators, the two column-gap cycles the
    weight-6 ones; the top ring carries the non-local weight-3 operator.
    """
    edges = []
    eidx = {}

    def add(name, he1, he2):
        eidx[name] = len(edges)
        edges.append((he1, he2))

    for c in range(3):
        base = 3 * c
        add(("a", c, 0), (base, 2), (base + 1, 0))
        add(("b", c, 0), (base, 3), (base + 1, 1))
        add(("a", c, 1), (base + 1, 2), (base + 2, 2))
        add(("b", c, 1), (base + 1, 3), (base + 2, 3))
    for c in range(3):
        add(("ring", 0, c), (3 * c, 1), (3 * ((c + 1) % 3), 0))
    for c in range(3):
        add(("ring", 2, c), (3 * c + 2, 1), (3 * ((c + 1) % 3) + 2, 0))
    g = QuantizedGraph(9, edges)

    cycles = []
    for c in range(3):
        for r in range(2):
            cycles.append(g.edge_vector([eidx[("a", c, r)], eidx[("b", c, r)]]))
    for c in range(2):
        cycles.append(
            g.edge_vector(
                [
                    eidx[("b", c, 0)], eidx[("b", c, 1)],
                    eidx[("a", c + 1, 0)], eidx[("a", c + 1, 1)],
                    eidx[("ring", 0, c)], eidx[("ring", 2, c)],
                ]
            )
        )
    code = code_from_cycles(g, cycles)
    target = [PauliString.from_letters(w) for w in SHOR_913_STABILIZERS]
    conv = convention_search(g, target, code.cycle_group)
    return FamilyInstance(
        name="shor_913",
        params={},
        code=code,
        convention=conv,
        expected_n=9,
        expected_k=1,
        expected_d=3,
        note="pair cycles read X, column-gap cycles read Z; X3X6X9 is non-local",
        stabilizer_target=target,
    )


# -- toric / Wen ----------------------------------------------------------


def _swap_slots_23(g: CayleyGraph, odd: set[int]) -> QuantizedGraph:
    swapped = {2: 3, 3: 2}
    edges = []
    for (v1, s1), (v2, s2) in g.edges:
        t1 = swapped.get(s1, s1) if v1 in odd else s1
        t2 = swapped.get(s2, s2) if v2 in odd else s2
        edges.append(((v1, t1), (v2, t2)))
    return QuantizedGraph(g.vertex_count, edges)


def toric(n: int) -> FamilyInstance:
    """[[2n^2, 2, n]] from the checkerboard subgroup of Z_{2n} x Z_{2n}.

    Swapping the two b slots on odd-column vertices makes the translated
    relator cycles read as pure-Z and pure-X squares (the familiar
    vertex/plaquette form), so the instance is CSS.
    """
    if n < 2:
        raise ValueError("toric needs n >= 2")
    spec = GroupSpec.parity_subgroup([2 * n, 2 * n], (1, 1), (2 * n - 1, 1))
    pres = Presentation(("abAB",))
    pres.validate(spec)
    cg = cayley_graph(spec)
    odd = {i for i, g in enumerate(spec.elements) if g[0] % 2 == 1}
    graph = _swap_slots_23(cg, odd)
    cycles = [relation_cycle(cg, g, "abAB") for g in spec.elements]
    code = code_from_cycles(graph, cycles)
    return FamilyInstance(
        name="toric",
        params={"n": n},
        code=code,
        convention=PairingConvention(("Y", "Z", "X")),
        expected_n=2 * n * n,
        expected_k=2,
        expected_d=n,
        note="periodic n x n lattice; qubit count is twice the lattice cells",
        presentation=pres,
    )


def wen(n: int) -> FamilyInstance:
    """Plaquette code on the full Z_n x Z_n Cayley graph.

    On odd tori the rotated lattice is non-bipartite: no checkerboard subset
    of plaquettes sums to the full edge set, so one logical qubit is lost
    (k = 1 instead of 2).
    """
    if n < 2:
        raise ValueError("wen needs n >= 2")
    spec = GroupSpec.product([n, n], (1, 0), (0, 1))
    pres = Presentation(("abAB",))
    code = _code_from_group_with_graph(spec, pres)
    even = n % 2 == 0
    return FamilyInstance(
        name="wen",
        params={"n": n},
        code=code,
        convention=DEFAULT_CONVENTION,
        expected_n=n * n,
        expected_k=2 if even else 1,
        expected_d=n if even else None,
        note="single-relator square-lattice model; k depends on lattice parity",
        presentation=pres,
    )


# -- Möbius ----------------------------------------------------------------


def _mobius_graph(n: int) -> tuple[QuantizedGraph, list[BitVec]]:
    """Staircase loop arrangement on the Möbius strip plus its region cycles.

    2n closed loops (vertical line x = a continued by horizontal line
    y = 2n+1-a through the quarter-turn gluing) cross pairwise once; the
    crossings are the vertices.  Slots follow the checkerboard rule: at
    crossing (x, y) the directions N,E,S,W sit at slots 0,1,2,3 when x+y is
    even and at 0,3,2,1 when odd.
    """
    size = 2 * n
    crossings = [(x, y) for y in range(1, size) for x in range(1, size - y + 1)]
    vid = {c: i for i, c in enumerate(crossings)}

    def slot(c, direction):
        x, y = c
        order = "NESW" if (x + y) % 2 == 0 else "NWSE"
        return order.index(direction)

    loops = []
    for a in range(1, size + 1):
        vertical = [(a, y) for y in range(1, size - a + 1)]
        horizontal = [(x, size + 1 - a) for x in range(a - 1, 0, -1)]
        loops.append((set(vertical), vertical + horizontal))

    edges = []
    arc_index: dict[frozenset, int] = {}
    for vertical_set, seq in loops:
        m = len(seq)
        for i in range(m):
            p, q = seq[i], seq[(i + 1) % m]
            leave = "N" if p in vertical_set else "W"
            enter = "S" if q in vertical_set else "E"
            arc_index[frozenset((p, q))] = len(edges)
            edges.append(((vid[p], slot(p, leave)), (vid[q], slot(q, enter))))
    g = QuantizedGraph(len(crossings), edges)

    def arc(p, q):
        return arc_index[frozenset((p, q))]

    faces = []
    # Interior squares; the ones touching the staircase lose their NE corner.
    for y in range(1, size):
        for x in range(1, size):
            if x + y > size - 1:
                continue
            idxs = [arc((x, y), (x + 1, y)), arc((x, y), (x, y + 1))]
            if x + y <= size - 2:
                idxs.append(arc((x, y + 1), (x + 1, y + 1)))
                idxs.append(arc((x + 1, y), (x + 1, y + 1)))
            else:
                idxs.append(arc((x + 1, y), (x, y + 1)))
            faces.append(g.edge_vector(idxs))
    # Glued faces along the identified boundary.
    for x in range(1, size):
        a_pt = (x, 1)
        c_pt = (1, size - x)
        idxs = []
        if x <= size - 2:
            idxs.append(arc((x, 1), (x + 1, 1)))
            idxs.append(arc(c_pt, (x + 1, 1)))  # wrap arc of loop x+1
        else:
            idxs.append(arc(c_pt, a_pt))  # wrap arc of the all-horizontal loop
        if x >= 2:
            d_pt = (1, size + 1 - x)
            idxs.append(arc(d_pt, a_pt))  # wrap arc of loop x
            idxs.append(arc(c_pt, d_pt))
        else:
            idxs.append(arc(c_pt, a_pt))  # wrap arc of loop 1
        faces.append(g.edge_vector(idxs))
    return g, faces


MOBIUS_2_STABILIZERS = [
    "XXIIIX",  # region a
    "IZZZIZ",  # region b
    "XIXXII",  # region c
    "ZZIZZI",  # region d (the published list misprints qubit 5 as 6)
    "IXXIXI",  # region e
    "IIIXXX",  # region f
]


def mobius(n: int) -> FamilyInstance:
    """[[n(2n-1), 1, n]] on the Möbius strip."""
    if n < 2:
        raise ValueError("mobius needs n >= 2")
    g, faces = _mobius_graph(n)
    code = code_from_cycles(g, faces)
    target = (
        [PauliString.from_letters(w) for w in MOBIUS_2_STABILIZERS] if n == 2 else []
    )
    return FamilyInstance(
        name="mobius",
        params={"n": n},
        code=code,
        convention=DEFAULT_CONVENTION,
        expected_n=n * (2 * n - 1),
        expected_k=1,
        expected_d=n,
        note="2n loops crossing pairwise once; one conservation law",
        stabilizer_target=target,
    )


# -- Klein ------------------------------------------------------------------


def _klein_graph(n: int) -> tuple[QuantizedGraph, list[BitVec], list[BitVec]]:
    """Medial graph of the n x n lattice on the Klein bottle.

    Horizontal wrap flips the vertical coordinate ((n, y) glued to (0, -y));
    vertical wrap is straight.  Returns (graph, vertex cycles, face cycles).
    """
    nn = n * n

    def h_disc(i, j):
        return j * n + i

    def v_disc(i, j):
        return nn + j * n + i

    def rot(i, j):
        # [E, N, W, S] edge discs in the local chart of lattice vertex (i, j).
        if i > 0:
            west = h_disc(i - 1, j)
        else:
            west = h_disc(n - 1, (-j) % n)
        return (
            h_disc(i, j),
            v_disc(i, j),
            west,
            v_disc(i, (j - 1) % n),
        )

    # Disc slots are [u-minus, u-plus, v-minus, v-plus] corners, where u is
    # the disc's first endpoint (west vertex for h discs, south for v discs)
    # and corner k at a lattice vertex pairs rot[k] with rot[k+1].
    edges = []
    corner_edge: dict[tuple[tuple[int, int], int], int] = {}

    def slot_of(disc, w, k):
        """Slot of corner (w, k) on the given disc."""
        i, j = w
        r = rot(i, j)
        idx = r.index(disc)
        # disc's endpoint role at w: h discs have u at their west vertex
        # (rot index 0) and v at their east vertex (index 2); v discs have u
        # at their south vertex (index 1) and v at their north vertex (3).
        if idx == 0:
            base = 0
        elif idx == 2:
            base = 2
        elif idx == 1:
            base = 0
        else:
            base = 2
        # corner k is disc's minus corner when k == idx-1, plus when k == idx.
        if k == (idx - 1) % 4:
            return base
        if k == idx:
            return base + 1
        raise AssertionError("corner does not touch this disc")

    for j in range(n):
        for i in range(n):
            w = (i, j)
            r = rot(i, j)
            for k in range(4):
                d1, d2 = r[k], r[(k + 1) % 4]
                corner_edge[(w, k)] = len(edges)
                edges.append(((d1, slot_of(d1, w, k)), (d2, slot_of(d2, w, k))))
    g = QuantizedGraph(2 * nn, edges)

    vertex_cycles = []
    for j in range(n):
        for i in range(n):
            vertex_cycles.append(
                g.edge_vector([corner_edge[((i, j), k)] for k in range(4)])
            )
    face_cycles = []
    for j in range(n):
        for i in range(n):
            corners = [((i, j), 0)]
            if i < n - 1:
                corners.append(((i + 1, j), 1))
                corners.append(((i + 1, (j + 1) % n), 2))
            else:
                corners.append(((0, (-j) % n), 2))
                corners.append(((0, (-j - 1) % n), 1))
            corners.append(((i, (j + 1) % n), 3))
            face_cycles.append(g.edge_vector([corner_edge[c] for c in corners]))
    return g, vertex_cycles, face_cycles


def klein(n: int) -> FamilyInstance:
    """[[2n^2, 2, n]] on the Klein bottle (one side pair glued with a flip)."""
    if n < 2:
        raise ValueError("klein needs n >= 2")
    g, vertex_cycles, face_cycles = _klein_graph(n)
    code = code_from_cycles(g, vertex_cycles + face_cycles)
    return FamilyInstance(
        name="klein",
        params={"n": n},
        code=code,
        convention=DEFAULT_CONVENTION,
        expected_n=2 * n * n,
        expected_k=2,
        expected_d=n,
        note="vertex and face cycles of the flipped lattice generate the group",
    )


FAMILY_BUILDERS = {
    "shor_repetition": lambda **kw: shor_repetition(),
    "shor_913": lambda **kw: shor_913(),
    "five_one_three": lambda **kw: five_one_three(),
    "toric": lambda n=2, **kw: toric(n),
    "wen": lambda n=2, **kw: wen(n),
    "mobius": lambda n=2, **kw: mobius(n),
    "klein": lambda n=2, **kw: klein(n),
}


def build_family(name: str, **params) -> FamilyInstance:
    try:
        builder = FAMILY_BUILDERS[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; choose from {sorted(FAMILY_BUILDERS)}"
        ) from None
    return builder(**params)
