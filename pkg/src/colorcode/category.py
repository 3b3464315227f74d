"""Modular data of Rep(D(Z2 x Z2)), built independently of the lattice.

Simple objects are pairs (g, chi) of a group element and a character of
Z2 x Z2; fusion is componentwise, the twist is chi(g), the braiding scalar
is chi'(g), monodromy chi'(g) chi(g'), and the S-matrix (1/4) chi(g') chi'(g).
Everything is exact integer/rational arithmetic.

The fixed correspondence to lattice sector labels (and to double-layer
toric-code pairs) lets the categorical tables be transported and compared
entrywise against lattice measurements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sectors import ALL_LABELS, SectorLabel

GROUP_NAMES = ("0", "a", "b", "c")
CHARACTER_NAMES = ("1", "alpha", "beta", "gamma")


@dataclass(frozen=True, slots=True)
class GroupElement:
    u: int
    v: int

    def __post_init__(self):
        if self.u not in (0, 1) or self.v not in (0, 1):
            raise ValueError("components must be bits")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement((self.u + other.u) % 2, (self.v + other.v) % 2)

    @property
    def name(self) -> str:
        return GROUP_NAMES[2 * self.u + self.v]


@dataclass(frozen=True, slots=True)
class Character:
    x: int
    y: int

    def __post_init__(self):
        if self.x not in (0, 1) or self.y not in (0, 1):
            raise ValueError("components must be bits")

    def __call__(self, g: GroupElement) -> int:
        return -1 if (self.x * g.u + self.y * g.v) % 2 else 1

    def __mul__(self, other: "Character") -> "Character":
        return Character((self.x + other.x) % 2, (self.y + other.y) % 2)

    @property
    def name(self) -> str:
        return CHARACTER_NAMES[2 * self.x + self.y]


@dataclass(frozen=True, slots=True)
class SimpleObject:
    g: GroupElement
    chi: Character

    @property
    def name(self) -> str:
        return f"({self.g.name},{self.chi.name})"


GROUP = tuple(GroupElement(u, v) for (u, v) in ((0, 0), (1, 0), (0, 1), (1, 1)))
CHARACTERS = tuple(Character(x, y) for (x, y) in ((0, 0), (1, 0), (0, 1), (1, 1)))
OBJECTS = tuple(SimpleObject(g, chi) for g in GROUP for chi in CHARACTERS)


def fuse(a: SimpleObject, b: SimpleObject) -> SimpleObject:
    return SimpleObject(a.g + b.g, a.chi * b.chi)


def twist(a: SimpleObject) -> int:
    return a.chi(a.g)


def r_symbol(a: SimpleObject, b: SimpleObject) -> int:
    return b.chi(a.g)


def monodromy(a: SimpleObject, b: SimpleObject) -> int:
    return r_symbol(a, b) * r_symbol(b, a)


def quantum_dimension(a: SimpleObject) -> int:
    return 1


def s_matrix() -> list[list[Fraction]]:
    """16x16 modular S-matrix, entries exactly +-1/4, object-lex order."""
    quarter = Fraction(1, 4)
    return [[quarter * a.chi(b.g) * b.chi(a.g) for b in OBJECTS] for a in OBJECTS]


def s_block() -> list[list[Fraction]]:
    """The 4x4 toric-code S factor (both layers are identical)."""
    half = Fraction(1, 2)
    signs = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    return [[half * s for s in row] for row in signs]


def verlinde_fusion() -> list[list[list[int]]]:
    """N[x][y][z] from the Verlinde formula, in exact rationals.

    Must be 0/1-valued with a single 1 per (x, y), matching componentwise
    fusion.
    """
    S = s_matrix()
    n = len(OBJECTS)
    N = [[[0] * n for _ in range(n)] for _ in range(n)]
    for xi in range(n):
        for yi in range(n):
            for zi in range(n):
                total = sum(S[xi][w] * S[yi][w] * S[zi][w] / S[0][w]
                            for w in range(n))
                if total.denominator != 1:
                    raise ArithmeticError("Verlinde sum is not an integer")
                N[xi][yi][zi] = int(total)
    return N


# -- correspondence to lattice sectors and double-layer toric code -----------

_CORRESPONDENCE_ROWS: tuple[tuple[SectorLabel, str], ...] = (
    (SectorLabel.ONE, "11"),
    (SectorLabel.RX, "e1"),
    (SectorLabel.BX, "1e"),
    (SectorLabel.GX, "ee"),
    (SectorLabel.BZ, "m1"),
    (SectorLabel.F1, "f1"),
    (SectorLabel.BY, "me"),
    (SectorLabel.F4, "fe"),
    (SectorLabel.RZ, "1m"),
    (SectorLabel.RY, "em"),
    (SectorLabel.F2, "1f"),
    (SectorLabel.F3, "ef"),
    (SectorLabel.GZ, "mm"),
    (SectorLabel.F6, "fm"),
    (SectorLabel.F5, "mf"),
    (SectorLabel.GY, "ff"),
)

LABEL_TO_OBJECT: dict[SectorLabel, SimpleObject] = {
    label: OBJECTS[i] for i, (label, _) in enumerate(_CORRESPONDENCE_ROWS)}
OBJECT_TO_LABEL: dict[SimpleObject, SectorLabel] = {
    obj: label for label, obj in LABEL_TO_OBJECT.items()}
LABEL_TO_TORIC: dict[SectorLabel, str] = {
    label: toric for (label, toric) in _CORRESPONDENCE_ROWS}


def correspondence(label: SectorLabel) -> tuple[SimpleObject, str]:
    """Fixed bijection sector label -> (simple object, toric-pair string)."""
    return LABEL_TO_OBJECT[label], LABEL_TO_TORIC[label]


def toric_components(obj: SimpleObject) -> tuple[int, int]:
    """Indices of the two toric-code factors (order 1, e, m, f)."""
    return 2 * obj.g.u + obj.chi.x, 2 * obj.g.v + obj.chi.y


def fusion_label_table() -> dict[tuple[SectorLabel, SectorLabel], SectorLabel]:
    """Categorical fusion transported to sector labels."""
    out = {}
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            out[(a, b)] = OBJECT_TO_LABEL[fuse(LABEL_TO_OBJECT[a], LABEL_TO_OBJECT[b])]
    return out


def twist_label_vector() -> dict[SectorLabel, int]:
    return {a: twist(LABEL_TO_OBJECT[a]) for a in ALL_LABELS}


def monodromy_label_table() -> dict[tuple[SectorLabel, SectorLabel], int]:
    out = {}
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            out[(a, b)] = monodromy(LABEL_TO_OBJECT[a], LABEL_TO_OBJECT[b])
    return out
