"""Deterministic SVG rendering of lattices, strings and syndromes."""

from __future__ import annotations

from typing import Optional

from .lattice import Color, ColoredLattice
from .stabilizer import Syndrome
from .strings import ColorString

SCALE = 32
MARGIN = 24
FACE_FILL = {Color.RED: "#e2746a", Color.GREEN: "#76b36a", Color.BLUE: "#6a84d8"}
STRING_STROKE = {Color.RED: "#8c1d10", Color.GREEN: "#1d5c10", Color.BLUE: "#10308c"}


def render_svg(lattice: ColoredLattice,
               strings: Optional[list[ColorString]] = None,
               syndrome: Optional[Syndrome] = None) -> str:
    """SVG document with faces filled by color, strings as bold paths and
    violated faces outlined.  Byte-identical for identical input."""
    xs = [c[0] for c in lattice.vertex_coords]
    ys = [c[1] for c in lattice.vertex_coords]
    minx, maxx = min(xs), max(xs) + 1
    miny, maxy = min(ys), max(ys) + 1
    width = (maxx - minx) * SCALE + 2 * MARGIN
    height = (maxy - miny) * SCALE + 2 * MARGIN

    def pt(coord: tuple[float, float]) -> str:
        x = MARGIN + (coord[0] - minx) * SCALE
        y = MARGIN + (maxy - coord[1]) * SCALE
        return f"{x:.1f},{y:.1f}"

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="#fdfcf8"/>',
    ]

    wrap_x = maxx - minx
    wrap_y = maxy - miny
    torus = lattice.geometry.kind == "torus"

    def unwrap(cycle: list[tuple[int, int]]) -> list[tuple[float, float]]:
        # lift wrapped coordinates near the first vertex so polygons stay compact
        out = [cycle[0]]
        for (x, y) in cycle[1:]:
            px, py = out[0]
            if torus:
                if x - px > wrap_x / 2:
                    x -= wrap_x
                elif px - x > wrap_x / 2:
                    x += wrap_x
                if y - py > wrap_y / 2:
                    y -= wrap_y
                elif py - y > wrap_y / 2:
                    y += wrap_y
            out.append((x, y))
        return out

    violated = syndrome.violated if syndrome is not None else {}
    for f in lattice.faces:
        cycle = unwrap([lattice.vertex_coords[v] for v in f.vertices])
        points = " ".join(pt(c) for c in cycle)
        parts.append(f'<polygon points="{points}" fill="{FACE_FILL[f.color]}" '
                     f'stroke="#51504c" stroke-width="1.0"/>')
    for f in lattice.faces:
        if f.id in violated:
            cycle = unwrap([lattice.vertex_coords[v] for v in f.vertices])
            points = " ".join(pt(c) for c in cycle)
            k_bad, j_bad = violated[f.id]
            dash = ' stroke-dasharray="6,3"' if (j_bad and not k_bad) else ""
            parts.append(f'<polygon points="{points}" fill="none" '
                         f'stroke="#14110c" stroke-width="4.0"{dash}/>')
    for s in strings or []:
        coords = [lattice.vertex_coords[v] for v in s.vertices]
        for a, b in zip(coords, coords[1:]):
            lifted = unwrap([a, b])
            parts.append(f'<line x1="{pt(lifted[0]).split(",")[0]}" '
                         f'y1="{pt(lifted[0]).split(",")[1]}" '
                         f'x2="{pt(lifted[1]).split(",")[0]}" '
                         f'y2="{pt(lifted[1]).split(",")[1]}" '
                         f'stroke="{STRING_STROKE[s.color]}" stroke-width="5.0" '
                         f'stroke-linecap="round"/>')
    for i, coord in enumerate(lattice.vertex_coords):
        x, y = pt(coord).split(",")
        parts.append(f'<circle cx="{x}" cy="{y}" r="3.0" fill="#14110c"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
