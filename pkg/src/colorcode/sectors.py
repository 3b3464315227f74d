"""Anyon sector detection, fusion and braiding measurements on the lattice.

An excitation localized in a region is fingerprinted by the commutation
signs of the nine colored winding-loop operator types around the region
(the detector signature).  The sixteen reference configurations (vacuum,
nine colored bosons created by open strings, six fermions created by boson
pairs) produce sixteen distinct signatures, which classifies sectors and
lets fusion be measured as signature products.

Braiding signs are measured from the commutation parity of a string
operator with a charge-transport operator routed around it; only the
gauge-invariant combination (monodromy) is compared against tables.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import GeometryUnrealizable, NotEnclosable, UnrealizableSignature
from .lattice import Color, ColoredLattice, Region, disk_region
from .pauli import PauliOperator, from_support, identity, single
from .stabilizer import StabilizerGroup
from .strings import (ColorString, enclosed_faces, expand_face_path, far_face,
                      find_string, string_operator, torus_brick,
                      vertical_string, winding_loop)


def _face_distances(lattice: ColoredLattice, sources: set[int]) -> dict[int, int]:
    dist = {f: 0 for f in sources}
    frontier = sorted(sources)
    while frontier:
        nxt = []
        for f in frontier:
            for g in lattice.face_adjacency(f):
                if g not in dist:
                    dist[g] = dist[f] + 1
                    nxt.append(g)
        frontier = nxt
    return dist

KIND_ORDER = ("X", "Y", "Z")


class SectorLabel(Enum):
    ONE = "1"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    GX = "gx"
    GY = "gy"
    GZ = "gz"
    BX = "bx"
    BY = "by"
    BZ = "bz"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"
    F6 = "f6"

    @property
    def is_boson(self) -> bool:
        return len(self.value) == 2 and self.value[0] in "rgb"

    @property
    def color(self) -> Color:
        if not self.is_boson:
            raise ValueError(f"{self} carries no color label")
        return Color.from_short(self.value[0])

    @property
    def kind(self) -> str:
        if not self.is_boson:
            raise ValueError(f"{self} carries no Pauli label")
        return self.value[1].upper()


ALL_LABELS = tuple(SectorLabel)  # vacuum, nine bosons, six fermions

# Boson-pair representatives generating each fermion sector.  (The pair for
# f5 uses bx*gz; the three pairs equivalent per sector are exercised by
# fermion_equivalence_check.)
FERMION_PAIRS: dict[SectorLabel, tuple[SectorLabel, SectorLabel]] = {
    SectorLabel.F1: (SectorLabel.RX, SectorLabel.BZ),
    SectorLabel.F2: (SectorLabel.RZ, SectorLabel.BX),
    SectorLabel.F3: (SectorLabel.BZ, SectorLabel.GY),
    SectorLabel.F4: (SectorLabel.RZ, SectorLabel.GY),
    SectorLabel.F5: (SectorLabel.BX, SectorLabel.GZ),
    SectorLabel.F6: (SectorLabel.BX, SectorLabel.GY),
}

DETECTOR_ORDER = tuple((c, k) for c in Color for k in KIND_ORDER)


@dataclass(frozen=True)
class DetectorSignature:
    """Signs of the nine loop detectors, in (rx, ry, rz, gx, ..., bz) order."""
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != 9 or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signature needs nine +-1 entries")

    def get(self, color: Color, kind: str) -> int:
        return self.signs[DETECTOR_ORDER.index((color, kind))]

    def product(self, other: "DetectorSignature") -> "DetectorSignature":
        return DetectorSignature(tuple(a * b for a, b in zip(self.signs, other.signs)))

    @classmethod
    def vacuum(cls) -> "DetectorSignature":
        return cls((1,) * 9)


class Detectors:
    """Winding loops of all three colors around a region, plus sector tables."""

    def __init__(self, group: StabilizerGroup, region: Optional[Region] = None,
                 separation: int = 1):
        self.group = group
        self.lattice = group.lattice
        if region is None:
            region = standard_region(self.lattice)
        self.region = region
        self.loops: dict[Color, ColorString] = {}
        self.loop_ops: dict[tuple[Color, str], PauliOperator] = {}
        blocked: set[int] = set()
        for c in Color:
            loop = None
            for sep in range(separation, -1, -1):
                try:
                    loop = winding_loop(self.lattice, region, c, separation=sep)
                    break
                except NotEnclosable:
                    continue
            if loop is None:
                raise NotEnclosable(f"no {c.name} winding loop around the region")
            if group.membership(string_operator(self.lattice, loop, "X")) is None:
                raise GeometryUnrealizable(f"{c.name} winding loop is not contractible")
            self.loops[c] = loop
            blocked.update(loop.faces)
            blocked.update(enclosed_faces(self.lattice, loop))
            for k in KIND_ORDER:
                self.loop_ops[(c, k)] = string_operator(self.lattice, loop, k)
        # probes may carry syndrome inside the region or far outside the
        # loops, never on or strictly between them
        self.allowed_syndrome = frozenset(region.faces) | frozenset(
            f.id for f in self.lattice.faces if f.id not in blocked)
        self._reference_ops: dict[SectorLabel, PauliOperator] = {}
        self._classify_table: dict[tuple[int, ...], SectorLabel] = {}

    # -- signature ------------------------------------------------------

    def signature(self, p: PauliOperator) -> DetectorSignature:
        syn = self.group.syndrome(p).faces()
        if not syn <= self.allowed_syndrome:
            raise ValueError(
                f"probe syndrome {sorted(syn - self.allowed_syndrome)} lies on or "
                "between the detector loops")
        signs = tuple(1 if self.loop_ops[d].commutes(p) else -1
                      for d in DETECTOR_ORDER)
        return DetectorSignature(signs)

    # -- reference configurations ----------------------------------------

    def reference_op(self, label: SectorLabel) -> PauliOperator:
        """Operator creating the reference excitation for ``label`` in the region."""
        if label in self._reference_ops:
            return self._reference_ops[label]
        if label is SectorLabel.ONE:
            op = identity(self.lattice.n_qubits)
        elif label.is_boson:
            s = self._reference_string(label.color)
            op = string_operator(self.lattice, s, label.kind)
        else:
            a, b = FERMION_PAIRS[label]
            op = self.reference_op(a) * self.reference_op(b)
        self._reference_ops[label] = op
        return op

    def _reference_string(self, color: Color) -> ColorString:
        lattice = self.lattice
        centroid = lattice.faces[min(self.region.faces)].brick
        inside = [f for f in sorted(self.region.faces)
                  if lattice.faces[f].color == color]
        if not inside:
            raise GeometryUnrealizable(f"region holds no {color.name} face")
        # endpoint with the widest margin to the detector loops; separation
        # of at least two steps is enforced
        loop_faces = {f for loop in self.loops.values() for f in loop.faces}
        margins = _face_distances(lattice, loop_faces)
        endpoint = max(inside, key=lambda f: (margins.get(f, 0), -f))
        if margins.get(endpoint, 0) < 2:
            raise GeometryUnrealizable(
                f"no {color.name} region face two steps clear of the loops")
        start = far_face(lattice, color, centroid)
        if start not in self.allowed_syndrome or start in self.region.faces:
            raise GeometryUnrealizable("no far anchor face outside the detectors")
        return find_string(lattice, color, start, endpoint)

    def classify(self, sig: DetectorSignature) -> SectorLabel:
        if not self._classify_table:
            for label in ALL_LABELS:
                ref_sig = self.signature(self.reference_op(label))
                self._classify_table[ref_sig.signs] = label
            if len(self._classify_table) != 16:
                raise UnrealizableSignature(
                    "reference configurations did not produce 16 distinct signatures")
        label = self._classify_table.get(sig.signs)
        if label is None:
            raise UnrealizableSignature(f"signature {sig.signs} matches no sector")
        return label

    def fuse_measure(self, a: SectorLabel, b: SectorLabel) -> SectorLabel:
        combined = self.reference_op(a) * self.reference_op(b)
        return self.classify(self.signature(combined))


def standard_region(lattice: ColoredLattice, radius: int = 1) -> Region:
    geo = lattice.geometry
    center = lattice.face_at(torus_brick(lattice, geo.bricks_x // 2, geo.rows // 2))
    return disk_region(lattice, center, radius)


_detector_cache: "weakref.WeakKeyDictionary[StabilizerGroup, dict]" = \
    weakref.WeakKeyDictionary()


def detectors_for(group: StabilizerGroup, region: Optional[Region] = None,
                  separation: int = 1) -> Detectors:
    per_group = _detector_cache.setdefault(group, {})
    key = (frozenset(region.faces) if region is not None else None, separation)
    if key not in per_group:
        per_group[key] = Detectors(group, region, separation)
    return per_group[key]


def detector_signature(group: StabilizerGroup, p: PauliOperator,
                       region: Optional[Region] = None) -> DetectorSignature:
    return detectors_for(group, region).signature(p)


def classify(group: StabilizerGroup, sig: DetectorSignature,
             region: Optional[Region] = None) -> SectorLabel:
    return detectors_for(group, region).classify(sig)


def fuse_measure(group: StabilizerGroup, a: SectorLabel, b: SectorLabel,
                 region: Optional[Region] = None) -> SectorLabel:
    return detectors_for(group, region).fuse_measure(a, b)


# -- braiding ---------------------------------------------------------------


def _standard_base(lattice: ColoredLattice, color: Color) -> int:
    """Base face of the standard braiding geometry: red, green, blue columns
    left to right at the bottom row."""
    return lattice.face_at((color.value, 0))


def _sideways_pair(lattice: ColoredLattice, face: int, direction: int) -> list[int]:
    """Two same-color hops moving three bricks sideways at constant height."""
    i, j = lattice.faces[face].brick
    if direction < 0:
        steps = [(-2, -1), (-1, 1)]
    else:
        steps = [(2, 1), (1, -1)]
    out = []
    for di, dj in steps:
        i, j = i + di, j + dj
        out.append(lattice.face_at(torus_brick(lattice, i, j)))
    return out


def braiding_sign(lattice: ColoredLattice, c1: Color, k1: str, c2: Color, k2: str,
                  orientation: str, truncation: int = 2) -> int:
    """Commutation parity of a string of type (c1,k1) with the transport
    operator moving a (c2,k2) string to one side of it.

    ``orientation`` is "left" or "right": the side, in the standard
    red/green/blue left-to-right gauge, to which the second string is
    transported.
    """
    if orientation not in ("left", "right"):
        raise ValueError(f"bad orientation {orientation!r}")
    geo = lattice.geometry
    if geo.kind != "torus" or geo.bricks_x < 9 or geo.rows < 2 * truncation + 6:
        raise GeometryUnrealizable(
            "braiding geometry needs a torus with bricks_x >= 9 and "
            f"rows >= {2 * truncation + 6}")
    n_hops = truncation
    gamma1 = vertical_string(lattice, _standard_base(lattice, c1), n_hops + 2)
    gamma2 = vertical_string(lattice, _standard_base(lattice, c2), n_hops)
    direction = -1 if orientation == "left" else 1
    # transported copy three bricks to the chosen side, and the connector
    # joining the two truncated tops
    i2, j2 = lattice.faces[_standard_base(lattice, c2)].brick
    moved_base = lattice.face_at(torus_brick(lattice, i2 + 3 * direction, j2))
    gamma2_moved = vertical_string(lattice, moved_base, n_hops)
    top = gamma2.faces[-1]
    connector_path = [top] + _sideways_pair(lattice, top, direction)
    connector = expand_face_path(lattice, connector_path)
    if connector.faces[-1] != gamma2_moved.faces[-1]:
        raise GeometryUnrealizable("connector failed to reach the moved string")
    transport = (string_operator(lattice, gamma2, k2)
                 * string_operator(lattice, connector, k2)
                 * string_operator(lattice, gamma2_moved, k2))
    probe = string_operator(lattice, gamma1, k1)
    return 1 if probe.commutes(transport) else -1


def _boson_factors(label: SectorLabel) -> tuple[SectorLabel, ...]:
    if label is SectorLabel.ONE:
        return ()
    if label.is_boson:
        return (label,)
    return FERMION_PAIRS[label]


def monodromy_measure(lattice: ColoredLattice, a: SectorLabel, b: SectorLabel) -> int:
    """Gauge-invariant double-braiding sign, fermions resolved into boson
    pairs through the braiding composition rules."""
    m = 1
    for fa in _boson_factors(a):
        for fb in _boson_factors(b):
            m *= braiding_sign(lattice, fa.color, fa.kind, fb.color, fb.kind, "left")
            m *= braiding_sign(lattice, fa.color, fa.kind, fb.color, fb.kind, "right")
    return m


def monodromy_from_detectors(det: Detectors, a: SectorLabel, b: SectorLabel) -> int:
    """Independent monodromy route: detector signs of a's excitation against
    b's loop types, multiplied over b's boson factors."""
    sig = det.signature(det.reference_op(a))
    m = 1
    for fb in _boson_factors(b):
        m *= sig.get(fb.color, fb.kind)
    return m


# -- fermion equivalence identities ------------------------------------------

# (base color, string kind, stabilizer kind, side) for the six sector moves;
# each turns the LHS boson pair into the RHS pair times stabilizers and a
# local corner operator.
MOVE_CONFIGS: dict[SectorLabel, tuple[Color, str, str, str]] = {
    SectorLabel.F1: (Color.RED, "X", "Z", "right"),    # rx*bz ~ ry*gz
    SectorLabel.F2: (Color.RED, "Z", "X", "right"),    # rz*bx ~ ry*gx
    SectorLabel.F3: (Color.GREEN, "X", "Z", "right"),  # gx*rz ~ gy*bz
    SectorLabel.F4: (Color.GREEN, "X", "Z", "left"),   # gx*bz ~ gy*rz
    SectorLabel.F5: (Color.BLUE, "X", "Z", "right"),   # bx*gz ~ by*rz
    SectorLabel.F6: (Color.RED, "X", "Z", "left"),     # rx*gz ~ ry*bz
}


def move_identity_ops(lattice: ColoredLattice, base_color: Color, k: str,
                      k_stab: str, side: str, truncation: int,
                      base_row: int = 0,
                      include_stabilizers: bool = True) -> tuple[PauliOperator, PauliOperator]:
    """LHS and RHS of one sector-move identity at the given truncation.

    LHS = S^k(gamma) * S^{k_stab}(side string) * prod of k_stab stabilizers
    on gamma's faces 1..N; RHS = sigma * S^{k k_stab}(shortened gamma) *
    S^{k_stab}(other side string), where sigma acts on the two freed support
    vertices and the top midpoint of gamma's last face.
    """
    if truncation < 2:
        raise GeometryUnrealizable("sector moves need truncation >= 2")
    geo = lattice.geometry
    if geo.kind != "torus" or geo.rows < 2 * truncation + 4 or geo.bricks_x < truncation + 3:
        raise GeometryUnrealizable("lattice too small for the three-string geometry")
    n = lattice.n_qubits
    base = lattice.face_at(torus_brick(lattice, base_color.value, base_row))
    i, j = lattice.faces[base].brick
    gamma = vertical_string(lattice, base, truncation)
    side_i = i if side == "left" else i + 1
    other_i = i + 1 if side == "left" else i
    gamma_side = vertical_string(
        lattice, lattice.face_at(torus_brick(lattice, side_i, j + 1)), truncation)
    gamma_other = vertical_string(
        lattice, lattice.face_at(torus_brick(lattice, other_i, j + 1)), truncation)
    gamma_short = vertical_string(
        lattice, lattice.face_at(torus_brick(lattice, i + 1, j + 2)), truncation - 1)

    stab_product = identity(n)
    if include_stabilizers:
        for s in range(1, truncation + 1):
            fid = lattice.face_at(torus_brick(lattice, i + s, j + 2 * s))
            verts = sorted(set(lattice.faces[fid].vertices))
            stab_product = stab_product * from_support(n, verts, k_stab)

    v0, v1 = gamma.vertices[0], gamma.vertices[1]
    top_face = lattice.faces[gamma.faces[-1]]
    w = top_face.vertices[4]  # top midpoint of the last face
    sigma = (single(v0, k, n) * single(v1, k, n)
             * single(v1, k_stab, n) * single(w, k_stab, n))

    mixed = "Y" if {k, k_stab} == {"X", "Z"} else k
    lhs = (string_operator(lattice, gamma, k)
           * string_operator(lattice, gamma_side, k_stab)
           * stab_product)
    rhs = (sigma * string_operator(lattice, gamma_short, mixed)
           * string_operator(lattice, gamma_other, k_stab))
    return lhs, rhs


def fermion_equivalence_check(lattice: ColoredLattice,
                              truncation: int = 3) -> dict[SectorLabel, bool]:
    """Exact operator-identity check for all six fermion sector moves."""
    results = {}
    for label, (color, k, k_stab, side) in MOVE_CONFIGS.items():
        lhs, rhs = move_identity_ops(lattice, color, k, k_stab, side, truncation)
        results[label] = lhs == rhs
    return results
