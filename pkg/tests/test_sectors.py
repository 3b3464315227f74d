"""Sector detection, fusion, braiding and the fermion move identities."""

import random

import pytest

from colorcode import anyon_tables
from colorcode.errors import GeometryUnrealizable, UnrealizableSignature
from colorcode.lattice import Color
from colorcode.pauli import from_support, identity
from colorcode.sectors import (ALL_LABELS, DETECTOR_ORDER, FERMION_PAIRS,
                               MOVE_CONFIGS, DetectorSignature, SectorLabel,
                               braiding_sign, fermion_equivalence_check,
                               monodromy_from_detectors, monodromy_measure,
                               move_identity_ops)
from colorcode.strings import (expand_face_path, far_face, find_string,
                               string_operator)

BOSONS = [l for l in ALL_LABELS if l.is_boson]


def fires(sig):
    return {f"{d[0].short}{d[1].lower()}"
            for d, s in zip(DETECTOR_ORDER, sig.signs) if s == -1}


def test_vacuum_signature(detectors):
    sig = detectors.signature(identity(detectors.lattice.n_qubits))
    assert sig == DetectorSignature.vacuum()
    assert detectors.classify(sig) is SectorLabel.ONE


def test_rx_signature_fires_opposite_detectors(detectors):
    sig = detectors.signature(detectors.reference_op(SectorLabel.RX))
    assert fires(sig) == {"gy", "gz", "by", "bz"}


def test_boson_signatures_follow_crossing_rule(detectors):
    for label in BOSONS:
        sig = detectors.signature(detectors.reference_op(label))
        expected = {f"{c.short}{k.lower()}" for c in Color for k in "XYZ"
                    if c != label.color and k != label.kind}
        assert fires(sig) == expected


def test_through_string_has_trivial_signature(detectors):
    # entering and leaving the region crosses every loop an even number of times
    lattice = detectors.lattice
    region_green = sorted(f for f in detectors.region.faces
                          if lattice.faces[f].color == Color.GREEN)[0]
    centroid = lattice.faces[region_green].brick
    far1 = far_face(lattice, Color.GREEN, centroid)
    far2 = [f for f in lattice.faces_of_color(Color.GREEN)
            if f in detectors.allowed_syndrome
            and f not in detectors.region.faces and f != far1][0]
    leg1 = string_operator(lattice, find_string(lattice, Color.GREEN, far1, region_green), "X")
    leg2 = string_operator(lattice, find_string(lattice, Color.GREEN, region_green, far2), "X")
    sig = detectors.signature(leg1 * leg2)
    assert sig == DetectorSignature.vacuum()


def test_classify_reference_bijection(detectors):
    seen = {}
    for label in ALL_LABELS:
        sig = detectors.signature(detectors.reference_op(label))
        assert sig.signs not in seen
        seen[sig.signs] = label
        assert detectors.classify(sig) is label


def test_fermion_pair_classifies_as_fermion(detectors):
    op = (detectors.reference_op(SectorLabel.RX)
          * detectors.reference_op(SectorLabel.BZ))
    assert detectors.classify(detectors.signature(op)) is SectorLabel.F1


def test_unrealizable_signature_rejected(detectors):
    lone = DetectorSignature((-1,) + (1,) * 8)
    with pytest.raises(UnrealizableSignature):
        detectors.classify(lone)


def test_probe_outside_region_rejected(detectors):
    lattice = detectors.lattice
    blocked = sorted(set(l for loop in detectors.loops.values() for l in loop.faces))
    face = lattice.faces[blocked[0]]
    probe = from_support(lattice.n_qubits, sorted(set(face.vertices))[:1], "X")
    with pytest.raises(ValueError):
        detectors.signature(probe)


def test_fusion_examples(detectors):
    assert detectors.fuse_measure(SectorLabel.RX, SectorLabel.RY) is SectorLabel.RZ
    assert detectors.fuse_measure(SectorLabel.F1, SectorLabel.F2) is SectorLabel.GY
    for a in ALL_LABELS:
        assert detectors.fuse_measure(a, a) is SectorLabel.ONE
        assert detectors.fuse_measure(SectorLabel.ONE, a) is a


def test_fusion_commutative_and_associative(detectors):
    table = {(a, b): detectors.fuse_measure(a, b)
             for a in ALL_LABELS for b in ALL_LABELS}
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            assert table[(a, b)] == table[(b, a)]
            for c in ALL_LABELS:
                assert table[(table[(a, b)], c)] == table[(a, table[(b, c)])]


def test_fusion_matches_published_table(detectors):
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            assert detectors.fuse_measure(a, b).value == \
                anyon_tables.FUSION[(a.value, b.value)]


def test_sector_locality(detectors):
    # replacing a reference string by a homotopic one with the same in-region
    # endpoint leaves the signature unchanged
    lattice = detectors.lattice
    ref = detectors._reference_string(Color.RED)
    graph = lattice.same_color_face_graph(Color.RED)
    faces = list(ref.faces)
    alt = sorted(({nb for nb, _ in graph[faces[0]]} & {nb for nb, _ in graph[faces[1]]})
                 - set(faces))[0]
    deformed = expand_face_path(lattice, [faces[0], alt] + faces[1:])
    for kind in "XYZ":
        sig1 = detectors.signature(string_operator(lattice, ref, kind))
        sig2 = detectors.signature(string_operator(lattice, deformed, kind))
        assert sig1 == sig2


def test_braiding_same_color_or_kind_trivial(torus1212):
    assert braiding_sign(torus1212, Color.RED, "X", Color.RED, "Z", "left") == 1
    assert braiding_sign(torus1212, Color.RED, "X", Color.RED, "Z", "right") == 1
    assert braiding_sign(torus1212, Color.RED, "X", Color.BLUE, "X", "left") == 1
    assert braiding_sign(torus1212, Color.GREEN, "Y", Color.BLUE, "Y", "right") == 1


def test_braiding_mixed_pair_standard_gauge(torus1212):
    # red left of blue: transporting bz to the left crosses the rx string
    assert braiding_sign(torus1212, Color.RED, "X", Color.BLUE, "Z", "left") == -1
    assert braiding_sign(torus1212, Color.RED, "X", Color.BLUE, "Z", "right") == 1


def test_braiding_asymmetry(torus1212):
    for a in BOSONS:
        for b in BOSONS:
            if a.color == b.color or a.kind == b.kind:
                continue
            left_ab = braiding_sign(torus1212, a.color, a.kind, b.color, b.kind, "left")
            left_ba = braiding_sign(torus1212, b.color, b.kind, a.color, a.kind, "left")
            assert left_ab * left_ba == -1


def test_braiding_requires_room(torus66):
    with pytest.raises(GeometryUnrealizable):
        braiding_sign(torus66, Color.RED, "X", Color.BLUE, "Z", "left")


def test_monodromy_examples(torus1212):
    assert monodromy_measure(torus1212, SectorLabel.RX, SectorLabel.GY) == -1
    assert monodromy_measure(torus1212, SectorLabel.F1, SectorLabel.F1) == 1
    for x in ALL_LABELS:
        assert monodromy_measure(torus1212, SectorLabel.ONE, x) == 1


def test_monodromy_routes_agree(detectors, torus1212):
    # braiding route vs detector route, entrywise
    for a in ALL_LABELS:
        for b in ALL_LABELS:
            braid = monodromy_measure(torus1212, a, b)
            det = monodromy_from_detectors(detectors, a, b)
            assert braid == det == anyon_tables.MONODROMY[(a.value, b.value)]


def test_monodromy_hexagon_consistency(detectors):
    # a fermion's monodromy is the product of its constituents' monodromies
    for f, (b1, b2) in FERMION_PAIRS.items():
        for x in ALL_LABELS:
            assert (monodromy_from_detectors(detectors, f, x)
                    == monodromy_from_detectors(detectors, b1, x)
                    * monodromy_from_detectors(detectors, b2, x))


def test_fermion_equivalences_hold(torus1212):
    results = fermion_equivalence_check(torus1212, truncation=3)
    assert all(results.values())
    results2 = fermion_equivalence_check(torus1212, truncation=2)
    assert all(results2.values())


def test_fermion_identity_needs_stabilizers(torus1212):
    for color, k, k_stab, side in MOVE_CONFIGS.values():
        lhs, rhs = move_identity_ops(torus1212, color, k, k_stab, side, 3,
                                     include_stabilizers=False)
        assert lhs != rhs


def test_fermion_move_conjugation_agrees(group1212, torus1212):
    # the two boson-pair representatives act identically on far-away probes
    from colorcode.strings import vertical_string, torus_brick
    lattice = torus1212
    base = lattice.face_at((Color.RED.value, 0))
    i, j = lattice.faces[base].brick
    pair_a = (string_operator(lattice, vertical_string(lattice, base, 3), "X")
              * string_operator(lattice, vertical_string(
                  lattice, lattice.face_at(torus_brick(lattice, i + 1, j + 1)), 3), "Z"))
    lhs, rhs = move_identity_ops(lattice, Color.RED, "X", "Z", "right", 3)
    pair_b = rhs  # sigma * ry * gz
    rng = random.Random(47)
    far = [lattice.vertex_id((16, 9)), lattice.vertex_id((17, 9)),
           lattice.vertex_id((16, 10)), lattice.vertex_id((17, 10))]
    for _ in range(50):
        probe = from_support(lattice.n_qubits,
                             rng.sample(far, rng.randrange(1, 4)), rng.choice("XYZ"))
        va = group1212.omega0(pair_a.adjoint() * probe * pair_a)
        vb = group1212.omega0(pair_b.adjoint() * probe * pair_b)
        assert va == vb
