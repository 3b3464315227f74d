"""Executable acceptance checks; every check is exact (no tolerances).

Each criterion returns a CheckResult; ``run_acceptance`` executes them in
order.  The same checks back the test suite and ``colorcode verify``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

from . import anyon_tables, category
from .lattice import Color, ColoredLattice, build_torus, micro_torus
from .oracle import DenseOracle
from .pauli import PauliOperator, from_support, identity, single
from .sectors import (ALL_LABELS, Detectors, braiding_sign,
                      fermion_equivalence_check, monodromy_measure,
                      move_identity_ops, MOVE_CONFIGS, standard_region)
from .stabilizer import StabilizerGroup, face_stabilizers
from .strings import (ColorString, crossing_parity_odd, deformation_witness,
                      expand_face_path, far_face, find_string, hex_ring,
                      horizontal_wrap_loop, string_operator, vertical_wrap_loop)

SIGN_PHASE = {1: 0, 1j: 1, -1: 2, -1j: 3}
KINDS = ("X", "Y", "Z")


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.number:2d} {self.name}: {self.detail} [{self.seconds:.2f}s]"


class Workbench:
    """Shared lattices, groups and detectors for the acceptance run."""

    @cached_property
    def torus66(self) -> ColoredLattice:
        return build_torus(6, 6)

    @cached_property
    def group66(self) -> StabilizerGroup:
        return face_stabilizers(self.torus66)

    @cached_property
    def torus126(self) -> ColoredLattice:
        return build_torus(12, 6)

    @cached_property
    def torus1212(self) -> ColoredLattice:
        return build_torus(12, 12)

    @cached_property
    def group1212(self) -> StabilizerGroup:
        return face_stabilizers(self.torus1212)

    @cached_property
    def detectors(self) -> Detectors:
        return Detectors(self.group1212, standard_region(self.torus1212))

    @cached_property
    def micro_group(self) -> StabilizerGroup:
        return face_stabilizers(micro_torus())

    @cached_property
    def oracle(self) -> DenseOracle:
        return DenseOracle(self.micro_group)


def random_ring(lattice: ColoredLattice, rng: random.Random) -> ColorString:
    center = rng.randrange(len(lattice.faces))
    return hex_ring(lattice, center, 1)


def random_open_string(lattice: ColoredLattice, rng: random.Random) -> ColorString:
    color = Color(rng.randrange(3))
    faces = lattice.faces_of_color(color)
    f0, f1 = rng.sample(faces, 2)
    return find_string(lattice, color, f0, f1)


def detour_variant(lattice: ColoredLattice, s: ColorString,
                   rng: random.Random) -> Optional[ColorString]:
    """Homotopic variant of an open string: reroute one hop through a common
    neighbor (a triangle in the color's face lattice)."""
    graph = lattice.same_color_face_graph(s.color)
    faces = list(s.faces)
    hops = list(range(len(faces) - 1))
    rng.shuffle(hops)
    for m in hops:
        nbrs_a = {nb for nb, _ in graph[faces[m]]}
        nbrs_b = {nb for nb, _ in graph[faces[m + 1]]}
        options = sorted((nbrs_a & nbrs_b) - set(faces))
        if options:
            alt = options[rng.randrange(len(options))]
            return expand_face_path(lattice, faces[:m + 1] + [alt] + faces[m + 1:])
    return None


def _apply_sign(op: PauliOperator, sign: complex) -> PauliOperator:
    return PauliOperator(op.n, op.x, op.z, (op.phase + SIGN_PHASE[sign]) % 4)


# -- criteria ----------------------------------------------------------------


def check_gsd(bench: Workbench) -> tuple[bool, str]:
    details = []
    ok = True
    for build in ((6, 6), (12, 6)):
        t0 = time.perf_counter()
        group = face_stabilizers(build_torus(*build))
        gsd = group.ground_space_dim()
        dt = time.perf_counter() - t0
        ok &= gsd == 16 and dt < 1.0
        details.append(f"torus{build}: gsd={gsd} in {dt:.2f}s")
    return ok, "; ".join(details)


def check_oracle(bench: Workbench) -> tuple[bool, str]:
    rng = random.Random(2007)
    group = bench.micro_group
    oracle = bench.oracle
    n = group.n
    symbolic_dim = group.ground_space_dim()
    dense_dim = oracle.dimension()
    if dense_dim != symbolic_dim:
        return False, f"dense dim {dense_dim} != symbolic {symbolic_dim}"

    lattice = group.lattice
    logicals = []
    for (x, y) in lattice.vertex_coords:
        if y != 0:
            continue
        pair = [lattice.vertex_id((x, 0)), lattice.vertex_id((x, 1))]
        kind = "X" if x % 2 else "Z"
        logicals.append(from_support(n, pair, kind))

    samples: list[PauliOperator] = []
    for _ in range(80):
        op = identity(n)
        for idx in range(len(group.generators)):
            if rng.random() < 0.4:
                op = op * group.generators[idx]
        samples.append(PauliOperator(n, op.x, op.z, (op.phase + rng.randrange(4)) % 4))
    for _ in range(60):
        samples.append(PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n),
                                     rng.randrange(4)))
    for _ in range(30):
        samples.append(single(rng.randrange(n), rng.choice(KINDS), n))
    for _ in range(30):
        samples.append(rng.choice(logicals) * samples[rng.randrange(80)])
    assert len(samples) == 200

    flagged = 0
    for p in samples:
        if oracle.omega0(p) != group.omega0(p):
            return False, f"group-average mismatch on {p.to_text()}"
        logical = oracle.is_logical(p)
        pure = oracle.omega0_pure(p)
        if logical:
            flagged += 1
        elif pure != group.omega0(p):
            return False, f"pure-state mismatch on non-logical {p.to_text()}"
    return True, (f"dense dim {dense_dim} == 2^(n-rank); 200 monomials agree, "
                  f"{flagged} logical-coset flags")


def check_omega0(bench: Workbench) -> tuple[bool, str]:
    rng = random.Random(2011)
    group = bench.group66
    lattice = bench.torus66
    for g in group.generators:
        if group.omega0(g) != 1:
            return False, "generator expectation != 1"
    for v in range(lattice.n_qubits):
        for kind in KINDS:
            if group.omega0(single(v, kind, lattice.n_qubits)) != 0:
                return False, f"weight-1 {kind} at {v} has nonzero expectation"
    for _ in range(50):
        ring = random_ring(lattice, rng)
        if group.omega0(string_operator(lattice, ring, rng.choice(KINDS))) != 1:
            return False, f"closed string expectation != 1 on {ring.faces}"
    for _ in range(50):
        s = random_open_string(lattice, rng)
        if group.omega0(string_operator(lattice, s, rng.choice(KINDS))) != 0:
            return False, f"open string expectation != 0 on {s.faces}"
    return True, "K/J = 1 on 72 faces; 216 weight-1 = 0; 50 loops = 1; 50 open = 0"


def check_endpoint_law(bench: Workbench) -> tuple[bool, str]:
    rng = random.Random(2013)
    group = bench.group66
    lattice = bench.torus66
    for _ in range(100):
        s = random_open_string(lattice, rng)
        kind = rng.choice(KINDS)
        syn = group.syndrome(string_operator(lattice, s, kind))
        pattern = (kind in ("Z", "Y"), kind in ("X", "Y"))
        expected = {s.faces[0]: pattern, s.faces[-1]: pattern}
        if syn.violated != expected:
            return False, f"syndrome {syn.violated} != {expected} for {kind} on {s.faces}"
    return True, "100 open strings excite exactly their two endpoint faces"


def check_deformation(bench: Workbench) -> tuple[bool, str]:
    # on a 6-row torus the color sublattice has essential 3-cycles, which
    # would make triangle detours wind the torus; 12x12 keeps them contractible
    rng = random.Random(2017)
    group = bench.group1212
    lattice = bench.torus1212
    witnessed = 0
    while witnessed < 100:
        s1 = random_open_string(lattice, rng)
        if len(s1.faces) < 2:
            continue
        s2 = detour_variant(lattice, s1, rng)
        if s2 is None:
            continue
        for _ in range(rng.randrange(3)):
            s3 = detour_variant(lattice, s2, rng)
            if s3 is not None:
                s2 = s3
        kind = rng.choice(KINDS)
        w = deformation_witness(group, s1, s2, kind)
        if w is None:
            return False, f"homotopic pair {s1.faces} / {s2.faces} not witnessed"
        prod = identity(lattice.n_qubits)
        for idx in w.generators:
            prod = prod * group.generators[idx]
        lhs = string_operator(lattice, s1, kind)
        rhs = _apply_sign(prod * string_operator(lattice, s2, kind), w.sign)
        if lhs != rhs:
            return False, "witness does not reproduce the operator ratio"
        witnessed += 1
    distinct = 0
    while distinct < 20:
        color = Color(rng.randrange(3))
        faces = lattice.faces_of_color(color)
        l1 = vertical_wrap_loop(lattice, rng.choice(faces))
        l2 = horizontal_wrap_loop(lattice, rng.choice(faces))
        if deformation_witness(group, l1, l2, rng.choice(KINDS)) is not None:
            return False, "homologically distinct loops reported homotopic"
        distinct += 1
    return True, "100 homotopic pairs witnessed exactly; 20 distinct-class pairs rejected"


def check_sector_classification(bench: Workbench) -> tuple[bool, str]:
    det = bench.detectors
    signatures = {}
    for label in ALL_LABELS:
        sig = det.signature(det.reference_op(label))
        signatures[sig.signs] = label
    if len(signatures) != 16:
        return False, f"only {len(signatures)} distinct signatures"
    for label in ALL_LABELS:
        if det.classify(det.signature(det.reference_op(label))) != label:
            return False, f"classify misidentifies {label.value}"
    return True, "16 reference configurations give 16 signatures; classify is a bijection"


def check_fusion_table(bench: Workbench) -> tuple[bool, str]:
    det = bench.detectors
    categorical = category.fusion_label_table()
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            measured = det.fuse_measure(a, b)
            published = anyon_tables.FUSION[(a.value, b.value)]
            if measured.value != published:
                return False, f"{a.value} x {b.value}: measured {measured.value}, table {published}"
            if categorical[(a, b)] != measured:
                return False, f"{a.value} x {b.value}: category disagrees"
    return True, "256/256 fusion entries match the published table and the category"


def check_monodromy_table(bench: Workbench) -> tuple[bool, str]:
    lattice = bench.torus1212
    bosons = [l for l in ALL_LABELS if l.is_boson]
    for a in bosons:
        for b in bosons:
            left = braiding_sign(lattice, a.color, a.kind, b.color, b.kind, "left")
            right = braiding_sign(lattice, a.color, a.kind, b.color, b.kind, "right")
            if a.color == b.color or a.kind == b.kind:
                if (left, right) != (1, 1):
                    return False, f"eps({a.value},{b.value}) != +1 in an identity case"
            else:
                if left * right != -1:
                    return False, f"no orientation asymmetry for ({a.value},{b.value})"
                swapped = braiding_sign(lattice, b.color, b.kind, a.color, a.kind, "left")
                if left * swapped != -1:
                    return False, f"eps({a.value},{b.value}) and swapped not opposite"
    categorical = category.monodromy_label_table()
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            m = monodromy_measure(lattice, a, b)
            if m != anyon_tables.MONODROMY[(a.value, b.value)]:
                return False, f"M({a.value},{b.value}) = {m} != table"
            if m != categorical[(a, b)]:
                return False, f"M({a.value},{b.value}) disagrees with category"
    return True, "256/256 monodromies match; braiding identity/asymmetry claims hold"


def check_fermion_equivalences(bench: Workbench) -> tuple[bool, str]:
    lattice = bench.torus1212
    results = fermion_equivalence_check(lattice, truncation=3)
    if not all(results.values()):
        bad = [l.value for l, ok in results.items() if not ok]
        return False, f"identities fail for {bad}"
    # dropping the stabilizer strip must break every identity
    for label, (color, k, k_stab, side) in MOVE_CONFIGS.items():
        lhs, rhs = move_identity_ops(lattice, color, k, k_stab, side,
                                     truncation=3, include_stabilizers=False)
        if lhs == rhs:
            return False, f"{label.value} identity survives without stabilizers"
    return True, "all six sector-move identities hold exactly at truncation 3"


def check_category(bench: Workbench) -> tuple[bool, str]:
    from fractions import Fraction
    S = category.s_matrix()
    quarter = Fraction(1, 4)
    if any(abs(S[a][b]) != quarter for a in range(16) for b in range(16)):
        return False, "S entry not +-1/4"
    for a in range(16):
        for b in range(16):
            if S[a][b] != S[b][a]:
                return False, "S not symmetric"
            dot = sum(S[a][w] * S[b][w] for w in range(16))
            if dot != (1 if a == b else 0):
                return False, "S not unitary"
    block = category.s_block()
    for a, oa in enumerate(category.OBJECTS):
        ta = category.toric_components(oa)
        for b, ob in enumerate(category.OBJECTS):
            tb = category.toric_components(ob)
            if S[a][b] != block[ta[0]][tb[0]] * block[ta[1]][tb[1]]:
                return False, "S does not factor as S1 (x) S2"
    N = category.verlinde_fusion()
    for a in range(16):
        for b in range(16):
            hits = [z for z in range(16) if N[a][b][z]]
            expected = category.OBJECTS.index(
                category.fuse(category.OBJECTS[a], category.OBJECTS[b]))
            if any(v not in (0, 1) for v in N[a][b]) or hits != [expected]:
                return False, "Verlinde tensor disagrees with componentwise fusion"
    twists = category.twist_label_vector()
    if sum(1 for t in twists.values() if t == -1) != 6:
        return False, "fermion count != 6"
    for label, t in twists.items():
        if t != anyon_tables.TWISTS[label.value]:
            return False, f"twist({label.value}) mismatch"
    for a in category.OBJECTS:
        for b in category.OBJECTS:
            lhs = category.monodromy(a, b)
            rhs = category.twist(category.fuse(a, b)) // (category.twist(a) * category.twist(b))
            if lhs != rhs:
                return False, "M != theta ratio"
    return True, "S exact and factorized; Verlinde = fusion; 10+6 twists; M = theta ratio"


def check_non_traciality(bench: Workbench) -> tuple[bool, str]:
    group = bench.group66
    lattice = bench.torus66
    n = lattice.n_qubits
    red_center = lattice.faces_of_color(Color.RED)[len(lattice.faces) // 6 // 2]
    loop = hex_ring(lattice, red_center, 1)
    inside_green = sorted(f for f in lattice.face_adjacency(red_center)
                          if lattice.faces[f].color == Color.GREEN)[0]
    f_far = far_face(lattice, Color.GREEN, lattice.faces[red_center].brick)
    s1 = find_string(lattice, Color.GREEN, inside_green, f_far)
    s2 = find_string(lattice, Color.GREEN, f_far, inside_green)
    if not crossing_parity_odd(lattice, loop, s1):
        return False, "green string does not cross the red loop once"
    L = string_operator(lattice, loop, "X")
    S1 = string_operator(lattice, s1, "Z")
    S2 = string_operator(lattice, s2, "Z")
    combined = L * S1 * S2
    if group.omega0(combined) != 1:
        return False, f"omega0(L S1 S2) = {group.omega0(combined)} != 1"
    reordered = S2 * L * S1
    if reordered != -combined:
        return False, "reordering does not flip the sign"
    return True, "omega0(L S1 S2) = 1 and S2 L S1 = -(L S1 S2) exactly"


CRITERIA: list[tuple[int, str, Callable[[Workbench], tuple[bool, str]]]] = [
    (1, "ground-state degeneracy", check_gsd),
    (2, "dense-oracle agreement", check_oracle),
    (3, "ground-state functional", check_omega0),
    (4, "endpoint law", check_endpoint_law),
    (5, "string deformation", check_deformation),
    (6, "sector classification", check_sector_classification),
    (7, "fusion table", check_fusion_table),
    (8, "monodromy table", check_monodromy_table),
    (9, "fermion equivalences", check_fermion_equivalences),
    (10, "category module", check_category),
    (11, "non-traciality witness", check_non_traciality),
]


def run_acceptance(numbers: Optional[set[int]] = None,
                   bench: Optional[Workbench] = None) -> list[CheckResult]:
    bench = bench or Workbench()
    results = []
    for number, name, fn in CRITERIA:
        if numbers is not None and number not in numbers:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn(bench)
        except Exception as exc:  # a crash is a failed criterion, not a crash of the run
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(number, name, ok, detail, time.perf_counter() - t0))
    return results
