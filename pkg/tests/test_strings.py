"""Colored strings: paths, operators, deformation, winding loops."""

import random
from collections import deque

import pytest

from colorcode.errors import (ColorMismatch, GeometryUnrealizable, NoPath,
                              NotEnclosable)
from colorcode.lattice import Color, ColoredLattice, Region, disk_region
from colorcode.pauli import from_support, identity
from colorcode.strings import (crossing_parity_odd, deformation_witness,
                               enclosed_faces, expand_face_path, find_string,
                               hex_ring, horizontal_wrap_loop, string_operator,
                               vertical_string, vertical_wrap_loop, winding_loop)


def bfs_distance(graph, start, goal):
    seen = {start: 0}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        if f == goal:
            return seen[f]
        for nb, _ in graph[f]:
            if nb not in seen:
                seen[nb] = seen[f] + 1
                queue.append(nb)
    return None


def test_degenerate_string(torus66):
    s = find_string(torus66, Color.RED, 0, 0)
    assert s.faces == (0,) and s.vertices == ()
    assert string_operator(torus66, s, "X") == identity(torus66.n_qubits)


def test_adjacent_faces_two_support_vertices(torus66):
    graph = torus66.same_color_face_graph(Color.RED)
    f0 = 0
    f1 = graph[f0][0][0]
    s = find_string(torus66, Color.RED, f0, f1)
    assert len(s.faces) == 2 and len(s.vertices) == 2


def test_path_length_matches_bfs_oracle(torus66):
    rng = random.Random(23)
    for _ in range(30):
        color = Color(rng.randrange(3))
        graph = torus66.same_color_face_graph(color)
        f0, f1 = rng.sample(sorted(graph), 2)
        s = find_string(torus66, color, f0, f1)
        assert len(s.faces) - 1 == bfs_distance(graph, f0, f1)


def test_color_mismatch(torus66):
    green = torus66.faces_of_color(Color.GREEN)[0]
    with pytest.raises(ColorMismatch):
        find_string(torus66, Color.RED, green, green)


def test_no_path_on_cut_patch():
    # remove the only red-red connector from a 2x3 patch: red becomes disconnected
    from colorcode.lattice import build_planar
    lat = build_planar(2, 3)
    reds = lat.faces_of_color(Color.RED)
    assert len(reds) == 2
    data = lat.to_json()
    red_edges = [e for e in data["edges"] if e["color"] == "r"]
    keep = [e for e in data["edges"] if e not in red_edges]
    for i, e in enumerate(keep):
        e["id"] = i
    data["edges"] = keep
    cut = ColoredLattice.from_json(data)
    with pytest.raises(NoPath):
        find_string(cut, Color.RED, reds[0], reds[1])


def test_string_operator_kinds(torus66):
    s = find_string(torus66, Color.GREEN, *torus66.faces_of_color(Color.GREEN)[:2])
    sx = string_operator(torus66, s, "X")
    sz = string_operator(torus66, s, "Z")
    sy = string_operator(torus66, s, "Y")
    assert sx == from_support(torus66.n_qubits, s.vertices, "X")
    assert sy == sx * sz
    assert sy.support() == frozenset(s.vertices)


def test_closed_ring_is_stabilizer_product(group66, torus66):
    ring = hex_ring(torus66, 5, 1)
    assert ring.closed
    for kind in "XYZ":
        op = string_operator(torus66, ring, kind)
        assert group66.syndrome(op).is_empty()
        assert group66.omega0(op) == 1


def test_same_color_strings_commute(torus66):
    rng = random.Random(31)
    for _ in range(30):
        color = Color(rng.randrange(3))
        faces = torus66.faces_of_color(color)
        s1 = find_string(torus66, color, *rng.sample(faces, 2))
        s2 = find_string(torus66, color, *rng.sample(faces, 2))
        for k1 in "XYZ":
            for k2 in "XYZ":
                assert string_operator(torus66, s1, k1).commutes(
                    string_operator(torus66, s2, k2))


def test_distinct_color_loops_commute(torus1212):
    r = hex_ring(torus1212, torus1212.face_at((6, 6)), 2)
    g = hex_ring(torus1212, torus1212.face_at((7, 6)), 2)
    for k1 in "XYZ":
        for k2 in "XYZ":
            assert string_operator(torus1212, r, k1).commutes(
                string_operator(torus1212, g, k2))


def test_deformation_identity_pair(group66, torus66):
    s = find_string(torus66, Color.RED, 0, torus66.faces_of_color(Color.RED)[4])
    w = deformation_witness(group66, s, s, "X")
    assert w is not None and w.generators == () and w.sign == 1


def test_deformation_witness_k_only(group1212, torus1212):
    # two homotopic red X-strings differ by K stabilizers of enclosed
    # green/blue faces only
    lattice = torus1212
    graph = lattice.same_color_face_graph(Color.RED)
    f0 = lattice.face_at((6, 6))
    s1 = find_string(lattice, Color.RED, f0, lattice.face_at((9, 6)))
    faces = list(s1.faces)
    a, b = faces[0], faces[1]
    alt = sorted(({nb for nb, _ in graph[a]} & {nb for nb, _ in graph[b]})
                 - set(faces))[0]
    s2 = expand_face_path(lattice, [faces[0], alt] + faces[1:])
    w = deformation_witness(group1212, s1, s2, "X")
    assert w is not None and w.sign == 1
    assert all(name == "K" for name, _ in w.names)
    for _, fid in w.names:
        assert lattice.faces[fid].color in (Color.GREEN, Color.BLUE)
    prod = identity(lattice.n_qubits)
    for idx in w.generators:
        prod = prod * group1212.generators[idx]
    assert string_operator(lattice, s1, "X") == prod * string_operator(lattice, s2, "X")


def test_deformation_rejects_distinct_homology(group66, torus66):
    for color in Color:
        base = torus66.faces_of_color(color)[0]
        v = vertical_wrap_loop(torus66, base)
        h = horizontal_wrap_loop(torus66, base)
        assert deformation_witness(group66, v, h, "X") is None


def test_vertical_string_constant_column(torus1212):
    s = vertical_string(torus1212, torus1212.face_at((3, 2)), 4)
    cols = {torus1212.vertex_coords[v][0] for v in s.vertices}
    assert len(cols) == 1
    heights = sorted(torus1212.vertex_coords[v][1] for v in s.vertices)
    assert heights == list(range(heights[0], heights[0] + 8))


def test_hex_ring_wrap_rejected(torus66):
    with pytest.raises(GeometryUnrealizable):
        hex_ring(torus66, 0, 2)


def test_winding_loop_encloses_single_face(torus1212, group1212):
    green = torus1212.face_at((7, 6))
    region = Region(torus1212, frozenset({green}))
    loop = winding_loop(torus1212, region, Color.RED)
    assert loop.closed and loop.color == Color.RED
    assert green in enclosed_faces(torus1212, loop)
    op = string_operator(torus1212, loop, "X")
    assert group1212.syndrome(op).is_empty()
    assert group1212.omega0(op) == 1


def test_winding_loop_whole_torus_not_enclosable(torus66):
    region = Region(torus66, frozenset(range(len(torus66.faces))))
    with pytest.raises(NotEnclosable):
        winding_loop(torus66, region, Color.RED)


def test_crossing_parity_detects_containment(torus1212):
    center = torus1212.face_at((6, 6))
    ring = hex_ring(torus1212, center, 2)
    inside = enclosed_faces(torus1212, ring)
    assert center in inside
    region = disk_region(torus1212, center, 1)
    assert region.faces <= inside
    # a string entering the ring crosses it an odd number of times
    green_in = sorted(f for f in region.faces
                      if torus1212.faces[f].color == Color.GREEN)[0]
    far = [f for f in torus1212.faces_of_color(Color.GREEN)
           if f not in inside and f not in ring.faces][-1]
    probe = find_string(torus1212, Color.GREEN, green_in, far)
    assert crossing_parity_odd(torus1212, ring, probe)


def test_homotopic_conjugation_invariance(group1212, torus1212):
    # omega0 of a conjugated local probe is unchanged when the string is
    # deformed between homotopic representatives
    lattice = torus1212
    graph = lattice.same_color_face_graph(Color.RED)
    s1 = find_string(lattice, Color.RED, lattice.face_at((6, 6)),
                     lattice.face_at((9, 6)))
    faces = list(s1.faces)
    alt = sorted(({nb for nb, _ in graph[faces[1]]} & {nb for nb, _ in graph[faces[2]]})
                 - set(faces))[0]
    s2 = expand_face_path(lattice, faces[:2] + [alt] + faces[2:])
    rng = random.Random(41)
    far_vertices = [lattice.vertex_id((20, 1)), lattice.vertex_id((21, 1)),
                    lattice.vertex_id((20, 2))]
    for kind in "XZ":
        op1 = string_operator(lattice, s1, kind)
        op2 = string_operator(lattice, s2, kind)
        for _ in range(20):
            probe = from_support(lattice.n_qubits,
                                 rng.sample(far_vertices, rng.randrange(1, 3)),
                                 rng.choice("XYZ"))
            lhs = group1212.omega0(op1.adjoint() * probe * op1)
            rhs = group1212.omega0(op2.adjoint() * probe * op2)
            assert lhs == rhs
