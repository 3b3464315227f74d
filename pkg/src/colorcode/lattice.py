"""3-colored trivalent brick-wall lattices on the plane and the torus.

Brick-wall convention: row ``j`` holds ``bricks_x`` bricks of width 2 and
height 1; each row is shifted half a brick to the left of the row below, so
brick ``(i, j)`` spans ``x in [2i-j, 2i-j+2]``, ``y in [j, j+1]``.  Every
brick has exactly six lattice vertices (four corners plus one midpoint on the
top and bottom edges) and gets color index ``(i + j) mod 3``.  The formula is
never trusted on its own: ``validate`` re-checks every invariant on the built
object.

Vertices are indexed row-major (by ``y``, then ``x``) so that serialized
operators are bit-exact across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Optional

from .errors import SizeConstraintViolation


class Color(IntEnum):
    RED = 0
    GREEN = 1
    BLUE = 2

    @property
    def short(self) -> str:
        return "rgb"[self.value]

    @classmethod
    def from_short(cls, s: str) -> "Color":
        return cls("rgb".index(s))


def third_color(a: Color, b: Color) -> Color:
    if a == b:
        raise ValueError("no third color for equal colors")
    return Color(3 - a.value - b.value)


@dataclass(frozen=True, slots=True)
class Face:
    id: int
    brick: tuple[int, int]
    color: Color
    vertices: tuple[int, ...]  # boundary cycle, 6 entries


@dataclass(frozen=True, slots=True)
class Edge:
    id: int
    v1: int
    v2: int
    color: Optional[Color]
    separates: tuple[int, ...]  # faces having this edge on their boundary
    connects: tuple[int, ...]   # third faces at the endpoints (same color)


@dataclass(frozen=True, slots=True)
class Geometry:
    kind: str  # "torus" | "planar"
    bricks_x: int
    rows: int


class ColoredLattice:
    """Immutable lattice; all derived adjacency is precomputed."""

    def __init__(self, geometry: Geometry, vertex_coords: list[tuple[int, int]],
                 face_specs: list[tuple[tuple[int, int], int, list[tuple[int, int]]]],
                 edge_pairs: list[tuple[tuple[int, int], tuple[int, int]]],
                 edge_colors: Optional[list[Optional[int]]] = None):
        self.geometry = geometry
        self.vertex_coords = tuple(vertex_coords)
        self._vid = {c: i for i, c in enumerate(vertex_coords)}
        self.n_vertices = len(vertex_coords)

        faces = []
        self._face_by_brick = {}
        for fid, (brick, color, cycle) in enumerate(face_specs):
            vids = tuple(self._vid[c] for c in cycle)
            faces.append(Face(fid, brick, Color(color), vids))
            self._face_by_brick[brick] = fid
        self.faces = tuple(faces)

        # vertex -> faces containing it (sorted, deduplicated)
        vfaces: list[list[int]] = [[] for _ in range(self.n_vertices)]
        boundary_of: dict[frozenset[int], list[int]] = {}
        for f in self.faces:
            for v in set(f.vertices):
                vfaces[v].append(f.id)
            k = len(f.vertices)
            for a in range(k):
                pair = frozenset((f.vertices[a], f.vertices[(a + 1) % k]))
                boundary_of.setdefault(pair, []).append(f.id)
        self.vertex_faces = tuple(tuple(sorted(fs)) for fs in vfaces)

        edges = []
        self._edge_by_pair: dict[frozenset[int], int] = {}
        for eid, (ca, cb) in enumerate(edge_pairs):
            va, vb = self._vid[ca], self._vid[cb]
            pair = frozenset((va, vb))
            separates = tuple(sorted(boundary_of.get(pair, [])))
            connects = []
            for v in (va, vb):
                third = [f for f in self.vertex_faces[v] if f not in separates]
                connects.extend(third)
            connects = tuple(connects)
            if edge_colors is not None and edge_colors[eid] is not None:
                color: Optional[Color] = Color(edge_colors[eid])
            elif connects:
                color = self.faces[connects[0]].color
            elif len(separates) == 2:
                color = third_color(self.faces[separates[0]].color,
                                    self.faces[separates[1]].color)
            else:
                color = _infinite_edge_color(ca, cb)
            edges.append(Edge(eid, va, vb, color, separates, connects))
            self._edge_by_pair[pair] = eid
        self.edges = tuple(edges)

        vedges: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for e in self.edges:
            vedges[e.v1].append(e.id)
            vedges[e.v2].append(e.id)
        self.vertex_edges = tuple(tuple(sorted(es)) for es in vedges)
        # precomputed so instances are immutable after construction and safe
        # for unrestricted concurrent reads
        self._color_graphs = {c: self._build_color_graph(c) for c in Color}

    # -- basic queries -------------------------------------------------

    @property
    def n_qubits(self) -> int:
        return self.n_vertices

    def vertex_id(self, coord: tuple[int, int]) -> int:
        return self._vid[coord]

    def face_at(self, brick: tuple[int, int]) -> int:
        return self._face_by_brick[brick]

    def edge_between(self, v1: int, v2: int) -> Optional[int]:
        return self._edge_by_pair.get(frozenset((v1, v2)))

    def faces_of_color(self, color: Color) -> list[int]:
        return [f.id for f in self.faces if f.color == color]

    def face_adjacency(self, fid: int) -> list[int]:
        """Faces sharing a boundary edge with ``fid``."""
        out = set()
        f = self.faces[fid]
        k = len(f.vertices)
        for a in range(k):
            eid = self.edge_between(f.vertices[a], f.vertices[(a + 1) % k])
            if eid is None:
                continue
            for g in self.edges[eid].separates:
                if g != fid:
                    out.add(g)
        return sorted(out)

    def _build_color_graph(self, color: Color) -> dict[int, tuple[tuple[int, int], ...]]:
        adj: dict[int, list[tuple[int, int]]] = {
            f.id: [] for f in self.faces if f.color == color}
        for e in self.edges:
            if e.color != color or len(e.connects) != 2:
                continue
            fa, fb = e.connects
            if fa == fb:
                continue  # degenerate wrap on tiny tori
            if fa not in adj or fb not in adj:
                continue  # miscolored input; construction stays total, validate reports
            adj[fa].append((fb, e.id))
            adj[fb].append((fa, e.id))
        return {f: tuple(sorted(nbrs)) for f, nbrs in adj.items()}

    def same_color_face_graph(self, color: Color) -> dict[int, tuple[tuple[int, int], ...]]:
        """Adjacency over faces of one color: neighbors via same-color edges.

        Maps face id -> tuple of (neighbor face id, edge id), sorted.  Two
        faces are adjacent iff an edge of their color connects them.
        """
        return self._color_graphs[color]

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "geometry": {"type": self.geometry.kind,
                         "bricks_x": self.geometry.bricks_x,
                         "rows": self.geometry.rows},
            "vertices": [{"id": i, "x": c[0], "y": c[1]}
                         for i, c in enumerate(self.vertex_coords)],
            "edges": [{"id": e.id, "v1": e.v1, "v2": e.v2,
                       "color": e.color.short if e.color is not None else None}
                      for e in self.edges],
            "faces": [{"id": f.id, "vertices": list(f.vertices),
                       "color": f.color.short, "brick": list(f.brick)}
                      for f in self.faces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ColoredLattice":
        geo = Geometry(data["geometry"]["type"], data["geometry"]["bricks_x"],
                       data["geometry"]["rows"])
        coords = [(v["x"], v["y"]) for v in sorted(data["vertices"], key=lambda v: v["id"])]
        face_specs = [(tuple(f["brick"]), Color.from_short(f["color"]).value,
                       [coords[v] for v in f["vertices"]])
                      for f in sorted(data["faces"], key=lambda f: f["id"])]
        pairs = []
        colors = []
        for e in sorted(data["edges"], key=lambda e: e["id"]):
            pairs.append((coords[e["v1"]], coords[e["v2"]]))
            colors.append(Color.from_short(e["color"]).value if e["color"] else None)
        return cls(geo, coords, face_specs, pairs, colors)


# -- construction ---------------------------------------------------------


def _torus_face_cycle(i: int, j: int, W: int, R: int) -> list[tuple[int, int]]:
    L = (2 * i - j) % W
    jt = (j + 1) % R
    return [(L, j), ((L + 1) % W, j), ((L + 2) % W, j),
            ((L + 2) % W, jt), ((L + 1) % W, jt), (L, jt)]


def _build_torus(bricks_x: int, rows: int) -> ColoredLattice:
    W = 2 * bricks_x
    coords = [(x, y) for y in range(rows) for x in range(W)]
    face_specs = []
    for j in range(rows):
        for i in range(bricks_x):
            face_specs.append(((i, j), (i + j) % 3, _torus_face_cycle(i, j, W, rows)))
    pairs = []
    for y in range(rows):
        for x in range(W):
            pairs.append(((x, y), ((x + 1) % W, y)))
            if x % 2 == y % 2:
                pairs.append(((x, y), (x, (y + 1) % rows)))
    geo = Geometry("torus", bricks_x, rows)
    return ColoredLattice(geo, coords, face_specs, pairs)


def build_torus(bricks_x: int, rows: int) -> ColoredLattice:
    """Torus lattice; both dimensions must be positive multiples of 6."""
    if bricks_x <= 0 or rows <= 0 or bricks_x % 6 or rows % 6:
        raise SizeConstraintViolation(
            f"torus needs bricks_x and rows to be multiples of 6, got "
            f"({bricks_x}, {rows})")
    return _build_torus(bricks_x, rows)


def build_torus_relaxed(bricks_x: int, rows: int) -> ColoredLattice:
    """Torus with the weakest size rules under which the coloring closes.

    Intended for small dense-oracle fixtures; ``validate`` remains the
    authority on the result.
    """
    if bricks_x < 3 or bricks_x % 3 or rows < 2 or rows % 2:
        raise SizeConstraintViolation(
            f"relaxed torus needs bricks_x % 3 == 0 (>= 3) and even rows, got "
            f"({bricks_x}, {rows})")
    return _build_torus(bricks_x, rows)


def micro_torus() -> ColoredLattice:
    """Smallest properly colorable brick torus: 6 faces on 12 qubits."""
    return build_torus_relaxed(3, 2)


def build_planar(bricks_x: int, rows: int) -> ColoredLattice:
    """Open-boundary patch of full bricks; interior vertices are trivalent."""
    if bricks_x < 2 or rows < 2:
        raise SizeConstraintViolation(
            f"planar patch needs bricks_x >= 2 and rows >= 2, got "
            f"({bricks_x}, {rows})")
    coords_set = set()
    face_specs = []
    for j in range(rows):
        for i in range(bricks_x):
            L = 2 * i - j
            cycle = [(L, j), (L + 1, j), (L + 2, j),
                     (L + 2, j + 1), (L + 1, j + 1), (L, j + 1)]
            face_specs.append(((i, j), (i + j) % 3, cycle))
            coords_set.update(cycle)
    coords = sorted(coords_set, key=lambda c: (c[1], c[0]))
    pairs = []
    for (x, y) in coords:
        if (x + 1, y) in coords_set:
            pairs.append(((x, y), (x + 1, y)))
        if x % 2 == y % 2 and (x, y + 1) in coords_set:
            pairs.append(((x, y), (x, y + 1)))
    geo = Geometry("planar", bricks_x, rows)
    return ColoredLattice(geo, coords, face_specs, pairs)


def _infinite_edge_color(ca: tuple[int, int], cb: tuple[int, int]) -> Color:
    """Edge color from the infinite brick-wall embedding (planar fallback)."""
    (xa, ya), (xb, yb) = sorted((ca, cb))
    if xa == xb:  # vertical, rows ya -> ya+1
        i = (xa + ya) // 2
        return Color((i + ya + 1) % 3)
    if xa % 2 == ya % 2:
        i = (xa + ya) // 2
        return Color((i + ya + 2) % 3)
    i = (xa + ya - 1) // 2
    return Color((i + ya + 1) % 3)


# -- validation -----------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list[tuple[str, tuple]]
    notes: list[tuple[str, tuple]]

    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        lines = [f"violation {kind}: {info}" for kind, info in self.violations]
        lines += [f"note {kind}: {info}" for kind, info in self.notes]
        return "\n".join(lines) if lines else "ok"


def validate(lattice: ColoredLattice) -> ValidationReport:
    """Check every lattice invariant; empty report iff the lattice is legal."""
    violations: list[tuple[str, tuple]] = []
    notes: list[tuple[str, tuple]] = []
    planar = lattice.geometry.kind == "planar"

    for v in range(lattice.n_vertices):
        deg = len(lattice.vertex_edges[v])
        if deg == 3:
            continue
        if planar and deg < 3:
            notes.append(("boundary_vertex_degree", (v, deg)))
        else:
            violations.append(("vertex_degree", (v, deg)))

    for f in lattice.faces:
        if len(set(f.vertices)) != 6:
            violations.append(("face_size", (f.id, len(set(f.vertices)))))
        k = len(f.vertices)
        for a in range(k):
            if lattice.edge_between(f.vertices[a], f.vertices[(a + 1) % k]) is None:
                violations.append(("face_boundary_gap", (f.id, a)))

    for e in lattice.edges:
        if len(e.separates) == 2:
            ca = lattice.faces[e.separates[0]].color
            cb = lattice.faces[e.separates[1]].color
            if ca == cb:
                violations.append(("proper_coloring", (e.id,) + e.separates))
        connect_colors = {lattice.faces[f].color for f in e.connects}
        if len(connect_colors) > 1:
            violations.append(("edge_color_mismatch", (e.id,) + e.connects))
        elif connect_colors and e.color is not None and e.color not in connect_colors:
            violations.append(("edge_color_mismatch", (e.id, e.color)))
        if e.color is not None and len(e.separates) == 2:
            seen = {lattice.faces[f].color for f in e.separates}
            if e.color in seen:
                violations.append(("edge_color_equals_separated", (e.id,)))

    return ValidationReport(violations, notes)


# -- regions --------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    """An edge-connected set of faces used for detectors and winding loops."""
    lattice: ColoredLattice
    faces: frozenset[int]

    def __post_init__(self):
        if not self.faces:
            raise ValueError("empty region")
        seen = {min(self.faces)}
        stack = [min(self.faces)]
        while stack:
            f = stack.pop()
            for g in self.lattice.face_adjacency(f):
                if g in self.faces and g not in seen:
                    seen.add(g)
                    stack.append(g)
        if seen != self.faces:
            raise ValueError("region faces are not edge-connected")

    def interior_vertices(self) -> frozenset[int]:
        out = set()
        for v in range(self.lattice.n_vertices):
            fs = self.lattice.vertex_faces[v]
            if len(fs) == 3 and all(f in self.faces for f in fs):
                out.add(v)
        return frozenset(out)

    def boundary_faces(self) -> frozenset[int]:
        out = set()
        for f in self.faces:
            if any(g not in self.faces for g in self.lattice.face_adjacency(f)):
                out.add(f)
        return frozenset(out)


def disk_region(lattice: ColoredLattice, center_face: int, radius: int) -> Region:
    """Faces within ``radius`` steps of ``center_face`` in the face-adjacency graph."""
    dist = {center_face: 0}
    frontier = [center_face]
    while frontier:
        nxt = []
        for f in frontier:
            for g in lattice.face_adjacency(f):
                if g not in dist and dist[f] < radius:
                    dist[g] = dist[f] + 1
                    nxt.append(g)
        frontier = nxt
    return Region(lattice, frozenset(dist))
