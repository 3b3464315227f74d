"""Colored strings, string operators, deformation witnesses, winding loops.

A string of color c alternates c-colored faces and c-colored edges; its
operator of kind k is the tensor of sigma^k over the support, with the
Y-type operator defined as the literal product of the X-type and Z-type
operators (phase tracked).

Brick-coordinate walks must respect the torus identification
``(i, j + rows) ~ (i - rows/2, j)``: each row is shifted half a brick, so a
full vertical wrap displaces the brick index.  ``torus_brick`` performs the
reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ColorMismatch, GeometryUnrealizable, NoPath, NotEnclosable
from .lattice import Color, ColoredLattice, Region
from .pauli import PauliOperator, from_support
from .stabilizer import StabilizerGroup


@dataclass(frozen=True)
class ColorString:
    color: Color
    faces: tuple[int, ...]      # f_0 .. f_{n+1}; closed iff first == last
    vertices: tuple[int, ...]   # v_0 .. v_{2n+1}, the support
    closed: bool

    def __post_init__(self):
        if len(self.faces) >= 2 and len(self.vertices) != 2 * (len(self.faces) - 1):
            raise ValueError("vertex count must be twice the hop count")

    @property
    def start(self) -> Optional[int]:
        return self.faces[0] if self.faces else None

    @property
    def end(self) -> Optional[int]:
        return self.faces[-1] if self.faces else None

    def to_json(self) -> dict:
        return {"color": self.color.short, "faces": list(self.faces),
                "vertices": list(self.vertices), "closed": self.closed}


def null_string(color: Color = Color.RED) -> ColorString:
    return ColorString(color, (), (), False)


def torus_brick(lattice: ColoredLattice, i: int, j: int) -> tuple[int, int]:
    """Reduce unbounded brick coordinates to the fundamental domain."""
    geo = lattice.geometry
    if geo.kind != "torus":
        if not (0 <= i < geo.bricks_x and 0 <= j < geo.rows):
            raise KeyError((i, j))
        return (i, j)
    k = j // geo.rows
    return ((i - k * (geo.rows // 2)) % geo.bricks_x, j - k * geo.rows)


def expand_face_path(lattice: ColoredLattice, face_ids: list[int],
                     closed: bool = False) -> ColorString:
    """Turn a same-color face path into a ColorString with explicit support.

    Consecutive faces must be adjacent in the color's face graph; for each
    hop the smallest-id connecting edge is used, with the vertex on the
    earlier face listed first.
    """
    if not face_ids:
        return null_string()
    color = lattice.faces[face_ids[0]].color
    if any(lattice.faces[f].color != color for f in face_ids):
        raise ColorMismatch("face path mixes colors")
    path = list(face_ids) + [face_ids[0]] if closed else list(face_ids)
    graph = lattice.same_color_face_graph(color)
    vertices: list[int] = []
    for a, b in zip(path, path[1:]):
        eid = min(e for (nbr, e) in graph[a] if nbr == b)
        edge = lattice.edges[eid]
        if edge.connects == (a, b):
            vertices.extend((edge.v1, edge.v2))
        elif edge.connects == (b, a):
            vertices.extend((edge.v2, edge.v1))
        else:
            raise ValueError(f"edge {eid} does not join faces {a},{b}")
    return ColorString(color, tuple(path), tuple(vertices), closed)


def find_string(lattice: ColoredLattice, color: Color,
                f_start: int, f_end: int) -> ColorString:
    """Shortest same-color string between two faces (BFS, deterministic)."""
    for f in (f_start, f_end):
        if lattice.faces[f].color != color:
            raise ColorMismatch(
                f"face {f} has color {lattice.faces[f].color.name}, wanted {color.name}")
    if f_start == f_end:
        return ColorString(color, (f_start,), (), False)
    graph = lattice.same_color_face_graph(color)
    parent: dict[int, int] = {f_start: -1}
    frontier = [f_start]
    while frontier and f_end not in parent:
        nxt = []
        for f in frontier:
            for nbr, _ in graph[f]:
                if nbr not in parent:
                    parent[nbr] = f
                    nxt.append(nbr)
        frontier = nxt
    if f_end not in parent:
        raise NoPath(f"no {color.name} path from face {f_start} to {f_end}")
    path = [f_end]
    while path[-1] != f_start:
        path.append(parent[path[-1]])
    path.reverse()
    return expand_face_path(lattice, path)


def string_operator(lattice: ColoredLattice, s: ColorString, kind: str) -> PauliOperator:
    n = lattice.n_qubits
    if kind in ("X", "Z"):
        return from_support(n, s.vertices, kind)
    if kind == "Y":
        sx = from_support(n, s.vertices, "X")
        sz = from_support(n, s.vertices, "Z")
        return sx * sz
    raise ValueError(f"bad Pauli kind {kind!r}")


# -- deformation -----------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Stabilizer combination P with S1 == sign * P * S2 (exact)."""
    generators: tuple[int, ...]
    names: tuple[tuple[str, int], ...]
    sign: complex


def deformation_witness(group: StabilizerGroup, s1: ColorString, s2: ColorString,
                        kind: str) -> Optional[Witness]:
    """Witness deforming s2's operator into s1's, or None if not homotopic."""
    if s1.color != s2.color:
        raise ColorMismatch("strings of different colors cannot be deformed")
    lattice = group.lattice
    op1 = string_operator(lattice, s1, kind)
    op2 = string_operator(lattice, s2, kind)
    diff = op1 * op2.inverse()
    m = group.membership(diff)
    if m is None:
        return None
    combo = 0
    for idx in m.generators:
        combo |= 1 << idx
    combo = group.minimize_combo(combo)
    prod = group.combination_product(combo)
    sign = 1j ** ((diff.phase - prod.phase) % 4)
    indices = tuple(i for i in range(len(group.generators)) if (combo >> i) & 1)
    names = tuple(group.generator_names[i] for i in indices)
    return Witness(indices, names, sign)


# -- straight walks --------------------------------------------------------


def vertical_string(lattice: ColoredLattice, base_face: int, hops: int) -> ColorString:
    """Straight string climbing ``hops`` vertical edges from ``base_face``.

    The walk (i, j) -> (i+1, j+2) keeps the geometric column fixed; it is
    the finite truncation of the half-infinite vertical strings used for
    sector analysis.
    """
    i, j = lattice.faces[base_face].brick
    try:
        path = [lattice.face_at(torus_brick(lattice, i + t, j + 2 * t))
                for t in range(hops + 1)]
    except KeyError as exc:
        raise GeometryUnrealizable(f"vertical string leaves the patch: {exc}") from exc
    return expand_face_path(lattice, path)


def vertical_wrap_loop(lattice: ColoredLattice, base_face: int) -> ColorString:
    """Non-contractible loop winding the torus once vertically."""
    if lattice.geometry.kind != "torus":
        raise GeometryUnrealizable("wrap loops need a torus")
    i, j = lattice.faces[base_face].brick
    hops = lattice.geometry.rows // 2
    path = [lattice.face_at(torus_brick(lattice, i + t, j + 2 * t))
            for t in range(hops)]
    return expand_face_path(lattice, path, closed=True)


def horizontal_wrap_loop(lattice: ColoredLattice, base_face: int) -> ColorString:
    """Non-contractible loop winding the torus once horizontally."""
    if lattice.geometry.kind != "torus":
        raise GeometryUnrealizable("wrap loops need a torus")
    if lattice.geometry.bricks_x % 3:
        raise GeometryUnrealizable("horizontal wrap needs bricks_x % 3 == 0")
    i, j = lattice.faces[base_face].brick
    path = []
    for k in range(lattice.geometry.bricks_x // 3):
        di = 3 * k
        path.append(lattice.face_at(torus_brick(lattice, i + di, j)))
        path.append(lattice.face_at(torus_brick(lattice, i + di + 2, j + 1)))
    return expand_face_path(lattice, path, closed=True)


# -- winding loops ---------------------------------------------------------

_AXIAL_DIRS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))
_U = (1, 2)   # axial q step in brick coordinates
_V = (2, 1)   # axial r step


def _ring_bricks(center: tuple[int, int], radius: int) -> list[tuple[int, int]]:
    """Hexagonal ring of same-color bricks around a center brick."""
    ci, cj = center
    q, r = -radius, radius
    out = []
    for side in range(6):
        dq, dr = _AXIAL_DIRS[side]
        for _ in range(radius):
            out.append((ci + q * _U[0] + r * _V[0], cj + q * _U[1] + r * _V[1]))
            q += dq
            r += dr
    return out


def hex_ring(lattice: ColoredLattice, center_face: int, radius: int) -> ColorString:
    """Closed non-self-intersecting ring of same-color faces around a center.

    The ring is the hexagon of radius ``radius`` in the triangular lattice
    formed by faces of the center's color; it is contractible whenever it
    fits without wrapping.
    """
    bricks = _ring_bricks(lattice.faces[center_face].brick, radius)
    ring = [lattice.face_at(torus_brick(lattice, i, j)) for i, j in bricks]
    if len(set(ring)) != len(ring):
        raise GeometryUnrealizable(
            f"radius-{radius} ring wraps on this lattice")
    return expand_face_path(lattice, ring, closed=True)


def winding_loop(lattice: ColoredLattice, region: Region, color: Color,
                 separation: int = 1) -> ColorString:
    """Smallest closed non-self-intersecting ``color`` loop enclosing ``region``.

    The loop is a hexagonal ring in the color's (triangular) face lattice,
    kept small enough that it cannot wrap the torus, at face-graph distance
    >= ``separation`` from the region.  Enclosure is certified by crossing
    parity against far reference faces.
    """
    geo = lattice.geometry
    max_radius = (min(geo.bricks_x, geo.rows) - 1) // 4
    centroid = _region_centroid(lattice, region)
    candidates = sorted(
        lattice.faces_of_color(color),
        key=lambda f: (_brick_dist(lattice, lattice.faces[f].brick, centroid), f))
    region_dist = _distance_from(lattice, region.faces)
    for radius in range(1, max_radius + 1):
        for center in candidates[:8]:
            try:
                loop = hex_ring(lattice, center, radius)
            except (KeyError, GeometryUnrealizable):
                continue
            if any(region_dist.get(f, 0) <= separation for f in loop.faces):
                continue
            if _encloses(lattice, loop, region):
                return loop
    raise NotEnclosable(
        f"no {color.name} loop of radius <= {max_radius} encloses the region")


def _region_centroid(lattice: ColoredLattice, region: Region) -> tuple[int, int]:
    bricks = sorted(lattice.faces[f].brick for f in region.faces)
    return bricks[len(bricks) // 2]


def _brick_dist(lattice: ColoredLattice, a: tuple[int, int], b: tuple[int, int]) -> int:
    geo = lattice.geometry
    di = abs(a[0] - b[0])
    dj = abs(a[1] - b[1])
    if geo.kind == "torus":
        di = min(di, geo.bricks_x - di)
        dj = min(dj, geo.rows - dj)
    return di + dj


def _distance_from(lattice: ColoredLattice, sources: frozenset[int]) -> dict[int, int]:
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


def far_face(lattice: ColoredLattice, color: Color, anchor: tuple[int, int]) -> int:
    """Deterministic ``color`` face at maximal brick distance from ``anchor``."""
    return max(lattice.faces_of_color(color),
               key=lambda f: (_brick_dist(lattice, lattice.faces[f].brick, anchor), -f))


def crossing_parity_odd(lattice: ColoredLattice, loop: ColorString,
                        path: ColorString) -> bool:
    """Whether two different-colored strings share an odd number of vertices."""
    shared = set(loop.vertices) & set(path.vertices)
    return len(shared) % 2 == 1


def enclosed_faces(lattice: ColoredLattice, loop: ColorString) -> frozenset[int]:
    """All faces strictly inside a closed non-wrapping loop (loop faces excluded).

    Uses crossing parity against far reference faces; faces of the loop's own
    color are resolved through their differently colored neighbors.
    """
    ring = set(loop.faces)
    centroid = sorted(lattice.faces[f].brick for f in ring)[len(ring) // 2]
    inside: dict[int, bool] = {}
    fars = {c: far_face(lattice, c, centroid) for c in Color}
    for f in range(len(lattice.faces)):
        color = lattice.faces[f].color
        if f in ring or color == loop.color:
            continue
        if f == fars[color]:
            inside[f] = False
            continue
        probe = find_string(lattice, color, f, fars[color])
        inside[f] = crossing_parity_odd(lattice, loop, probe)
    for f in range(len(lattice.faces)):
        if f in ring or lattice.faces[f].color != loop.color:
            continue
        nbrs = [g for g in lattice.face_adjacency(f) if g not in ring]
        inside[f] = bool(nbrs) and all(inside.get(g, False) for g in nbrs)
    return frozenset(f for f, v in inside.items() if v)


def _encloses(lattice: ColoredLattice, loop: ColorString, region: Region) -> bool:
    """Crossing-parity containment: every region face lies inside the loop.

    A face not of the loop's color is inside iff a string from it to a far
    face crosses the loop an odd number of times; a face of the loop's color
    is tested through its (differently colored) neighbors.
    """
    centroid = _region_centroid(lattice, region)
    ring_faces = set(loop.faces)
    checked: dict[int, bool] = {}

    def inside(f: int) -> bool:
        if f in checked:
            return checked[f]
        color = lattice.faces[f].color
        anchor_far = far_face(lattice, color, centroid)
        if lattice.faces[anchor_far].brick == lattice.faces[f].brick:
            return False
        probe = find_string(lattice, color, f, anchor_far)
        checked[f] = crossing_parity_odd(lattice, loop, probe)
        return checked[f]

    for f in region.faces:
        if lattice.faces[f].color != loop.color:
            if not inside(f):
                return False
        else:
            nbrs = [g for g in lattice.face_adjacency(f) if g not in ring_faces]
            if not nbrs or not all(inside(g) for g in nbrs):
                return False
    return True
