"""Pauli realization of cycle operators, stabilizer groups, and oracles.

A cycle touches each vertex disc on 0, 2, or 4 of its slots.  Two touched
slots select one of the three perfect pairings of {0,1,2,3}; a pairing
convention maps pairings to Pauli letters.  The default matches the charge
dictionary: charges on slots {0,1} (or {2,3}) read Z, {0,2}/{1,3} read Y,
{0,3}/{1,2} read X.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codespace import ChargeClass, GraphicalCode
from .errors import (
    BudgetExceeded,
    KernelViolation,
    MinusIdentity,
    NoConventionFound,
    NonCommuting,
    NotACycle,
)
from .f2 import BitVec, Subspace
from .graph import QuantizedGraph

# Pairing classes of {0,1,2,3}: index 0 = {01|23}, 1 = {02|13}, 2 = {03|12}.
_PAIR_CLASS = {
    (0, 1): 0, (2, 3): 0,
    (0, 2): 1, (1, 3): 1,
    (0, 3): 2, (1, 2): 2,
}

_LETTER_XZ = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_XZ_LETTER = {v: k for k, v in _LETTER_XZ.items()}


def pair_class(i: int, j: int) -> int:
    """Pairing-class index of the slot pair {i, j}."""
    return _PAIR_CLASS[(i, j) if i < j else (j, i)]


@dataclass(frozen=True)
class PairingConvention:
    """Bijection from the three slot pairings to the letters X, Y, Z.

    ``letters[c]`` is the letter of pairing class c (0 = {01|23}, 1 = {02|13},
    2 = {03|12}).  The default is ('Z', 'Y', 'X').
    """

    letters: tuple[str, str, str] = ("Z", "Y", "X")

    def __post_init__(self):
        if sorted(self.letters) != ["X", "Y", "Z"]:
            raise ValueError(f"letters must be a bijection onto XYZ: {self.letters}")

    def letter_of_pair(self, i: int, j: int) -> str:
        return self.letters[pair_class(i, j)]

    def class_of_letter(self, letter: str) -> int:
        return self.letters.index(letter)

    @property
    def name(self) -> str:
        return "".join(self.letters)


DEFAULT_CONVENTION = PairingConvention()

# Search order for convention_search: lexicographic over the class-letter map.
ALL_CONVENTIONS = tuple(
    PairingConvention(p) for p in sorted(itertools.permutations("XYZ"))
)


class PauliString:
    """Signed n-qubit Pauli word in symplectic (x|z) bit representation."""

    __slots__ = ("n", "x", "z", "sign")

    def __init__(self, n: int, x: int = 0, z: int = 0, sign: int = 1):
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        self.n = n
        self.x = x
        self.z = z
        self.sign = sign

    @classmethod
    def from_letters(cls, word: str) -> "PauliString":
        """Parse e.g. '+IXZZX' or 'XZZXI' (sign prefix optional)."""
        sign = 1
        if word and word[0] in "+-":
            sign = 1 if word[0] == "+" else -1
            word = word[1:]
        x = z = 0
        for i, c in enumerate(word):
            try:
                xb, zb = _LETTER_XZ[c]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {c!r}") from None
            x |= xb << i
            z |= zb << i
        return cls(len(word), x, z, sign)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str, sign: int = 1) -> "PauliString":
        xb, zb = _LETTER_XZ[letter]
        return cls(n, xb << qubit, zb << qubit, sign)

    def letter(self, i: int) -> str:
        return _XZ_LETTER[((self.x >> i) & 1, (self.z >> i) & 1)]

    def to_letters(self) -> str:
        body = "".join(self.letter(i) for i in range(self.n))
        return ("+" if self.sign == 1 else "-") + body

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity_word(self) -> bool:
        return self.x == 0 and self.z == 0

    def commutes(self, other: "PauliString") -> bool:
        """Symplectic form <x1,z2> + <z1,x2> vanishes."""
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        return (
            (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        ) % 2 == 0

    def symplectic_bits(self) -> int:
        """2n-bit key: x part in the low bits, z part in the high bits."""
        return self.x | (self.z << self.n)

    def mul_phase(self, other: "PauliString") -> tuple[int, int, int]:
        """Exact product: returns (k mod 4, x, z) with P*Q = i^k X^x Z^z...

        The phase convention treats each string as a tensor product of the
        literal Hermitian matrices I, X, Y, Z.
        """
        k = 0 if self.sign == 1 else 2
        k += 0 if other.sign == 1 else 2
        for i in range(self.n):
            a = ((self.x >> i) & 1, (self.z >> i) & 1)
            b = ((other.x >> i) & 1, (other.z >> i) & 1)
            k += _PHASE_TABLE[a][b]
        return k % 4, self.x ^ other.x, self.z ^ other.z

    def __mul__(self, other: "PauliString") -> "PauliString":
        k, x, z = self.mul_phase(other)
        if k == 0:
            sign = 1
        elif k == 2:
            sign = -1
        else:
            raise ValueError("product of anticommuting strings has imaginary phase")
        return PauliString(self.n, x, z, sign)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliString)
            and (self.n, self.x, self.z, self.sign)
            == (other.n, other.x, other.z, other.sign)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.x, self.z, self.sign))

    def __repr__(self) -> str:
        return f"PauliString({self.to_letters()!r})"


def _phase_of_product(a: tuple[int, int], b: tuple[int, int]) -> int:
    """i-exponent of (letter a) * (letter b) relative to letter a+b."""
    la, lb = _XZ_LETTER[a], _XZ_LETTER[b]
    if la == "I" or lb == "I" or la == lb:
        return 0
    # Cyclic products carry +i, anticyclic -i:  XY=iZ, YZ=iX, ZX=iY.
    return 1 if (la, lb) in (("X", "Y"), ("Y", "Z"), ("Z", "X")) else 3


_PHASE_TABLE = {
    a: {b: _phase_of_product(a, b) for b in _LETTER_XZ.values()}
    for a in _LETTER_XZ.values()
}


@dataclass
class StabilizerGroup:
    """Pairwise-commuting generators with -I excluded from the group."""

    generators: list[PauliString]
    n: int

    @property
    def rank(self) -> int:
        return len(self.generators)

    def _rowspace(self) -> Subspace:
        return Subspace(2 * self.n, [g.symplectic_bits() for g in self.generators])

    def contains_word(self, p: PauliString) -> bool:
        """Membership modulo sign (as an unsigned Pauli word)."""
        return self._rowspace().contains(p.symplectic_bits())

    def member_sign(self, p: PauliString) -> int | None:
        """Sign s with s*p in the signed group, or None if the word is outside."""
        rows = _rref_paulis(self.generators)
        acc = PauliString(self.n)
        residue = p.symplectic_bits()
        for pivot, gen in rows:
            if (residue >> pivot) & 1:
                acc = acc * gen
                residue ^= gen.symplectic_bits()
        if residue != 0:
            return None
        return acc.sign * p.sign


def _rref_paulis(gens: list[PauliString]) -> list[tuple[int, PauliString]]:
    """Echelonized (pivot, generator-product) pairs with exact signs."""
    rows: list[tuple[int, PauliString]] = []
    for g in gens:
        cur = g
        for pivot, row in rows:
            if (cur.symplectic_bits() >> pivot) & 1:
                cur = cur * row
        bits = cur.symplectic_bits()
        if bits == 0:
            if cur.sign == -1:
                raise MinusIdentity("generator product reduces to -I")
            continue
        pivot = (bits & -bits).bit_length() - 1
        rows = [
            (p, r * cur if (r.symplectic_bits() >> pivot) & 1 else r) for p, r in rows
        ]
        rows.append((pivot, cur))
        rows.sort(key=lambda t: t[0])
    return rows


# -- cycle operators ---------------------------------------------------------


def cycle_to_pauli(
    g: QuantizedGraph, l: BitVec, conv: PairingConvention = DEFAULT_CONVENTION
) -> PauliString:
    """Pauli word of a cycle: per vertex, the letter of its charged slot pair.

    Vertices with zero or four charged slots contribute identity; the sign is
    fixed to +1 (any consistent sign choice is a Pauli-frame change).
    """
    if not g.cycle_space_.contains(l):
        raise NotACycle("edge vector is not a cycle")
    x = z = 0
    for v in range(g.vertex_count):
        slots = [s for s in range(4) if (l.bits >> g.slot_edge(v, s)) & 1]
        if len(slots) in (0, 4):
            continue
        if len(slots) != 2:
            raise NotACycle(f"vertex {v} has odd slot count {len(slots)}")
        xb, zb = _LETTER_XZ[conv.letter_of_pair(slots[0], slots[1])]
        x |= xb << v
        z |= zb << v
    return PauliString(g.vertex_count, x, z, 1)


def stabilizers(
    code: GraphicalCode, conv: PairingConvention = DEFAULT_CONVENTION
) -> StabilizerGroup:
    """Images of a cycle-group basis taken modulo the full edge set.

    rank = dim(cycle_group) - 1 = n - k.  Pairwise commutation and the
    absence of -I (via symplectic independence of the images) are verified.
    """
    g = code.graph
    one_e = Subspace(g.edge_count, [g.full_edge_set()])
    quotient = Subspace(g.edge_count, [one_e.reduce_bits(r) for r in code.cycle_group.rows])
    gens = [cycle_to_pauli(g, BitVec(g.edge_count, r), conv) for r in quotient.rows]
    for i, p in enumerate(gens):
        for q in gens[i + 1:]:
            if not p.commutes(q):
                raise NonCommuting(f"{p.to_letters()} vs {q.to_letters()}")
    rank = Subspace(2 * g.vertex_count, [p.symplectic_bits() for p in gens]).dim
    if rank != len(gens):
        raise MinusIdentity(
            "cycle images are symplectically dependent; a product is +/-I"
        )
    if rank != code.n - code.k:
        raise KernelViolation(f"stabilizer rank {rank} != n-k = {code.n - code.k}")
    return StabilizerGroup(generators=gens, n=code.n)


def kernel_check(g: QuantizedGraph, conv: PairingConvention = DEFAULT_CONVENTION) -> None:
    """Verify the cycle-to-Pauli map kills exactly {0, 1_E}."""
    basis = g.cycle_space_.basis()
    images = [cycle_to_pauli(g, b, conv).symplectic_bits() for b in basis]
    rank = Subspace(2 * g.vertex_count, images).dim
    if rank != g.cycle_space_.dim - 1:
        raise KernelViolation(
            f"image rank {rank} != cycle dim - 1 = {g.cycle_space_.dim - 1}"
        )
    full = cycle_to_pauli(g, g.full_edge_set(), conv)
    if not full.is_identity_word():
        raise KernelViolation("full edge set does not map to the identity word")


def pauli_to_charge_class(
    g: QuantizedGraph, p: PauliString, conv: PairingConvention = DEFAULT_CONVENTION
) -> ChargeClass:
    """Charge class realizing a Pauli word (well defined modulo cuts).

    Each non-identity letter at v adds the adjacent-edge-pair vector of one
    slot pairing with that letter; the two pairings of a class differ by the
    vertex star, so the class is independent of the choice.
    """
    bits = 0
    for v in range(g.vertex_count):
        letter = p.letter(v)
        if letter == "I":
            continue
        cls = conv.class_of_letter(letter)
        i, j = _CLASS_FIRST_PAIR[cls]
        bits ^= (1 << g.slot_edge(v, i)) ^ (1 << g.slot_edge(v, j))
    return ChargeClass(g, BitVec(g.edge_count, bits))


_CLASS_FIRST_PAIR = {0: (0, 1), 1: (0, 2), 2: (0, 3)}


# -- oracles -----------------------------------------------------------------


def _pauli_candidates(n: int, weight: int):
    for support in itertools.combinations(range(n), weight):
        for letters in itertools.product("XYZ", repeat=weight):
            x = z = 0
            for q, c in zip(support, letters):
                xb, zb = _LETTER_XZ[c]
                x |= xb << q
                z |= zb << q
            yield x, z


def oracle_distance(s: StabilizerGroup, budget: int) -> int:
    """Minimum weight of a word commuting with all generators but outside the group.

    Weight-ordered brute-force enumeration; exact whenever the answer is at
    most `budget`, else raises BudgetExceeded with the proven lower bound.
    """
    if s.rank >= s.n:
        raise ValueError("code has no logical qubits (rank >= n)")
    gens = [(g.x, g.z) for g in s.generators]
    rowspace = s._rowspace()
    for w in range(1, budget + 1):
        for x, z in _pauli_candidates(s.n, w):
            ok = True
            for gx, gz in gens:
                if ((x & gz).bit_count() + (z & gx).bit_count()) % 2:
                    ok = False
                    break
            if ok and not rowspace.contains(x | (z << s.n)):
                return w
    raise BudgetExceeded(f"distance exceeds budget {budget}", bound=budget)


@dataclass(frozen=True)
class CounterexamplePair:
    """A pair of correctable-weight errors whose product escapes detection."""

    error_p: PauliString
    error_q: PauliString


def kl_scalar(s: StabilizerGroup, ep: PauliString, eq: PauliString) -> complex | None:
    """The scalar for an error pair: 0 or a fourth root of unity; None when
    the pair is undetectable (the product acts inside the code space)."""
    k, x, z = ep.mul_phase(eq)
    word = PauliString(s.n, x, z, 1)
    for g in s.generators:
        if not word.commutes(g):
            return 0
    sign = s.member_sign(word)
    if sign is None:
        return None
    return (1j ** k) * sign


def knill_laflamme_check(
    s: StabilizerGroup,
    t: int | None = None,
    errors: list[PauliString] | None = None,
) -> CounterexamplePair | None:
    """Check detectability of products of weight-<=t errors (or a given list).

    Returns None when every product is detectable, else one counterexample
    pair.  Equivalent condition: every word of weight <= 2t in the centralizer
    lies in the group.
    """
    rowspace = s._rowspace()
    if errors is not None:
        for ep in errors:
            for eq in errors:
                _, x, z = ep.mul_phase(eq)
                word = PauliString(s.n, x, z, 1)
                if word.is_identity_word():
                    continue
                if all(word.commutes(g) for g in s.generators) and not rowspace.contains(
                    word.symplectic_bits()
                ):
                    return CounterexamplePair(ep, eq)
        return None
    if t is None:
        raise ValueError("provide either t or an explicit error list")
    for w in range(1, 2 * t + 1):
        for x, z in _pauli_candidates(s.n, w):
            word = PauliString(s.n, x, z, 1)
            if all(word.commutes(g) for g in s.generators) and not rowspace.contains(
                word.symplectic_bits()
            ):
                return CounterexamplePair(*_split_error(word, t))
    return None


def _split_error(word: PauliString, t: int) -> tuple[PauliString, PauliString]:
    support = [i for i in range(word.n) if word.letter(i) != "I"]
    first = set(support[: (len(support) + 1) // 2])
    xp = zp = xq = zq = 0
    for i in support:
        xb, zb = _LETTER_XZ[word.letter(i)]
        if i in first:
            xp |= xb << i
            zp |= zb << i
        else:
            xq |= xb << i
            zq |= zb << i
    return PauliString(word.n, xp, zp), PauliString(word.n, xq, zq)


def css_check(s: StabilizerGroup) -> tuple[bool, list[PauliString], list[PauliString]]:
    """Whether the group regenerates from pure-X and pure-Z words.

    Returns (is_css, x_generators, z_generators); the partition is empty when
    the group is not CSS.
    """
    n = s.n
    rows = [g.symplectic_bits() for g in s.generators]
    rank = Subspace(2 * n, rows).dim
    x_only = _pure_part(rows, n, part="x")
    z_only = _pure_part(rows, n, part="z")
    if len(x_only) + len(z_only) == rank:
        xg = [PauliString(n, bits, 0) for bits in x_only]
        zg = [PauliString(n, 0, bits >> n) for bits in z_only]
        return True, xg, zg
    return False, [], []


def _pure_part(rows: list[int], n: int, part: str) -> list[int]:
    """Basis of the subspace of the rowspan with zero z-part (or x-part)."""
    mask = ((1 << n) - 1) << n if part == "x" else (1 << n) - 1
    m = len(rows)
    # Augment each row with an indicator block, eliminate on the masked bits.
    aug = [(rows[i] & mask, rows[i]) for i in range(m)]
    basis: dict[int, tuple[int, int]] = {}
    pure = []
    for key, full in aug:
        for p, (bk, bf) in sorted(basis.items()):
            if (key >> p) & 1:
                key ^= bk
                full ^= bf
        if key == 0:
            if full:
                pure.append(full)
        else:
            basis[(key & -key).bit_length() - 1] = (key, full)
    out = Subspace(2 * n, pure)
    return list(out.rows)


def convention_search(
    g: QuantizedGraph,
    target: list[PauliString],
    cycle_group: Subspace | None = None,
) -> PairingConvention:
    """First convention (lexicographic class-letter order) reproducing the
    target group modulo signs.

    Without a cycle_group the criterion is that every target word is a cycle
    image (the code generated by the preimages then has exactly the target
    span as its stabilizer group).  With a cycle_group, the criterion is that
    the images of that group span the target group exactly.
    """
    for p in target:
        for q in target:
            if not p.commutes(q):
                raise ValueError("target words do not commute")
    n2 = 2 * g.vertex_count
    target_space = Subspace(n2, [p.symplectic_bits() for p in target])
    source = cycle_group.basis() if cycle_group is not None else g.cycle_space_.basis()
    for conv in ALL_CONVENTIONS:
        image_space = Subspace(
            n2, [cycle_to_pauli(g, b, conv).symplectic_bits() for b in source]
        )
        if cycle_group is not None:
            if image_space == target_space:
                return conv
        elif all(image_space.contains(p.symplectic_bits()) for p in target):
            return conv
    raise NoConventionFound("no uniform pairing convention reproduces the target")


def symplectic_check_matrix(s: StabilizerGroup) -> dict:
    """rank x 2n matrix (x part | z part) with row/column weight statistics."""
    rows = [BitVec(2 * s.n, g.symplectic_bits()) for g in s.generators]
    col_w = [sum((r.bits >> j) & 1 for r in rows) for j in range(2 * s.n)]
    row_w = [r.weight() for r in rows]
    return {
        "rows": rows,
        "n": s.n,
        "row_weights": row_w,
        "col_weights": col_w,
        "row_weight_max": max(row_w, default=0),
        "col_weight_max": max(col_w, default=0),
    }
