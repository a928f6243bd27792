"""Deterministic SVG writers for layer diagrams and pictographs.

Output is plain text assembled from fixed-precision numbers, so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from .config import (
    LAYER_STROKE,
    OVERLAY_STROKE,
    PICTOGRAPH_KINDS,
    SVG_CELL,
    SVG_DOT_RADIUS,
    SVG_MARGIN,
    THICK_STROKE,
    THIN_STROKE,
    mult_color,
)

if TYPE_CHECKING:
    from .multiplicity import DecompositionTable
    from .pictographs import Pictograph
    from .polygon import LayerDiagram

SQRT3_2 = math.sqrt(3) / 2


def _num(x: float) -> str:
    text = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


class SvgCanvas:
    """Collects SVG elements and tracks their bounding box."""

    def __init__(self) -> None:
        self.min_x: float | None = None
        self.max_x: float | None = None
        self.min_y: float | None = None
        self.max_y: float | None = None
        self.commands: list[str] = []

    def require(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
            return
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, y)
        self.max_y = max(self.max_y, y)

    def line(
        self,
        a: tuple[float, float],
        b: tuple[float, float],
        stroke: str = "#000000",
        width: float = THIN_STROKE,
        dashed: bool = False,
    ) -> None:
        self.require(*a)
        self.require(*b)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.commands.append(
            f'<line x1="{_num(a[0])}" y1="{_num(a[1])}" x2="{_num(b[0])}" y2="{_num(b[1])}" '
            f'stroke="{stroke}" stroke-width="{_num(width)}"{dash}/>'
        )

    def polygon(
        self,
        points: list[tuple[float, float]],
        stroke: str = "#000000",
        width: float = THIN_STROKE,
        dashed: bool = False,
    ) -> None:
        for p in points:
            self.require(*p)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in points)
        self.commands.append(
            f'<polygon points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{_num(width)}"{dash}/>'
        )

    def circle(
        self,
        x: float,
        y: float,
        r: float,
        fill: str = "none",
        stroke: str = "none",
    ) -> None:
        self.require(x - r, y - r)
        self.require(x + r, y + r)
        self.commands.append(
            f'<circle cx="{_num(x)}" cy="{_num(y)}" r="{_num(r)}" fill="{fill}" stroke="{stroke}"/>'
        )

    def text(self, x: float, y: float, text: str, size: int = 10, anchor: str = "middle") -> None:
        self.require(x, y - size)
        self.require(x, y)
        escaped = text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        self.commands.append(
            f'<text x="{_num(x)}" y="{_num(y)}" font-size="{size}" font-family="monospace" '
            f'text-anchor="{anchor}">{escaped}</text>'
        )

    def render(self) -> str:
        if self.min_x is None:
            self.require(0, 0)
        x0 = self.min_x - SVG_MARGIN
        y0 = self.min_y - SVG_MARGIN
        width = self.max_x - self.min_x + 2 * SVG_MARGIN
        height = self.max_y - self.min_y + 2 * SVG_MARGIN
        head = (
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(width)}" height="{_num(height)}" '
            f'viewBox="{_num(x0)} {_num(y0)} {_num(width)} {_num(height)}">'
        )
        background = (
            f'<rect x="{_num(x0)}" y="{_num(y0)}" width="{_num(width)}" '
            f'height="{_num(height)}" fill="#ffffff"/>'
        )
        return "\n".join([head, background, *self.commands, "</svg>"]) + "\n"


# ---------------------------------------------------------------------------
# Layer diagrams
# ---------------------------------------------------------------------------


def _project(nu: tuple[int, int], axes: str) -> tuple[float, float]:
    """Weight plane to screen; "root" puts ω₂ at 60° from ω₁."""
    x, y = nu
    if axes == "root":
        return ((x + y / 2) * SVG_CELL, -y * SQRT3_2 * SVG_CELL)
    return (x * SVG_CELL, -y * SVG_CELL)


def _draw_layers(
    canvas: SvgCanvas, diagram: LayerDiagram, axes: str, stroke: str, dashed: bool
) -> None:
    for poly in diagram.layers:
        pts = [_project(v, axes) for v in poly.vertices]
        if len(pts) == 1:
            canvas.circle(*pts[0], SVG_DOT_RADIUS + 2, stroke=stroke)
        elif len(pts) == 2:
            canvas.line(pts[0], pts[1], stroke=stroke, dashed=dashed)
        else:
            canvas.polygon(pts, stroke=stroke, dashed=dashed)


def _draw_axes(canvas: SvgCanvas, extent: int, axes: str) -> None:
    origin = _project((0, 0), axes)
    canvas.line(origin, _project((extent, 0), axes), stroke="#bbbbbb")
    canvas.line(origin, _project((0, extent), axes), stroke="#bbbbbb")
    x, y = _project((extent, 0), axes)
    canvas.text(x + 8, y + 4, "ν₁", anchor="start")
    x, y = _project((0, extent), axes)
    canvas.text(x, y - 6, "ν₂")


def layer_diagram_svg(
    diagram: LayerDiagram,
    table: DecompositionTable | None = None,
    *,
    axes: str = "orthogonal",
    overlay: LayerDiagram | None = None,
    overlay_table: DecompositionTable | None = None,
) -> str:
    """Nested layers as polygons, weights as dots coloured by multiplicity."""
    if axes not in ("orthogonal", "root"):
        raise ValueError(f"axes must be 'orthogonal' or 'root', got {axes!r}")
    canvas = SvgCanvas()
    extent = sum(diagram.lam.labels) + sum(diagram.mu.labels) + 1
    _draw_axes(canvas, extent, axes)
    _draw_layers(canvas, diagram, axes, LAYER_STROKE, dashed=False)
    if overlay is not None:
        _draw_layers(canvas, overlay, axes, OVERLAY_STROKE, dashed=True)
    if overlay_table is not None:
        for nu, _ in overlay_table.entries:
            x, y = _project(tuple(nu.labels), axes)
            canvas.circle(x, y, SVG_DOT_RADIUS + 1.5, stroke=OVERLAY_STROKE)
    if table is not None:
        for nu, m in table.entries:
            canvas.circle(*_project(tuple(nu.labels), axes), SVG_DOT_RADIUS, fill=mult_color(m))
    x, y = _project((0, extent), axes)
    canvas.text(x, y - 22, f"{diagram.lam}⊗{diagram.mu}", size=12, anchor="start")
    return canvas.render()


# ---------------------------------------------------------------------------
# Pictographs
# ---------------------------------------------------------------------------

# (row, column) on a side-4 triangular grid, apex at row 0.
_BZ_POSITIONS: dict[str, tuple[int, int]] = {
    "n13": (0, 0),
    "n12": (1, 0),
    "n23": (1, 1),
    "m23": (3, 0),
    "m13": (4, 0),
    "m12": (4, 1),
    "l12": (3, 3),
    "l23": (4, 3),
    "l13": (4, 4),
}

_BZ_EDGES: tuple[tuple[str, str], ...] = (
    ("n13", "n12"), ("n12", "n23"), ("n23", "n13"),
    ("m23", "m13"), ("m13", "m12"), ("m12", "m23"),
    ("l12", "l23"), ("l23", "l13"), ("l13", "l12"),
    ("n12", "m23"), ("m12", "l23"), ("l12", "n23"),
)  # fmt: skip

# Hexagon sides walked clockwise from the top vertex, and the three legs.
_HEX_SIDES: tuple[str, ...] = ("l12", "n23", "m12", "l23", "n12", "m23")
_HEX_ANGLES: tuple[int, ...] = (-30, -90, -150, 150, 90, 30)
_LEGS: tuple[tuple[str, int, int], ...] = (("n13", 0, 90), ("l13", 2, -30), ("m13", 4, 210))


def _grid(r: int, c: int, step: float) -> tuple[float, float]:
    return ((c - r / 2) * step, r * step * SQRT3_2)


def _unit(angle: int) -> tuple[float, float]:
    rad = math.radians(angle)
    # Screen y grows downward.
    return (math.cos(rad), -math.sin(rad))


def _bz_svg(canvas: SvgCanvas, labels: dict[str, int]) -> None:
    step = 3 * SVG_CELL
    for a, b in _BZ_EDGES:
        start, end = _grid(*_BZ_POSITIONS[a], step), _grid(*_BZ_POSITIONS[b], step)
        canvas.line(start, end, stroke=LAYER_STROKE)
    for name, (r, c) in _BZ_POSITIONS.items():
        x, y = _grid(r, c, step)
        canvas.circle(x, y, 9, fill="#ffffff", stroke="#000000")
        canvas.text(x, y + 3.5, str(labels[name]))


def _hexagon_svg(canvas: SvgCanvas, labels: dict[str, int], metric: bool) -> None:
    step = 2 * SVG_CELL
    # Skeleton first, so a zero pictograph still shows its shape.
    corners = [(0.0, -step)]
    for angle in _HEX_ANGLES[:-1]:
        dx, dy = _unit(angle)
        x, y = corners[-1]
        corners.append((x + dx * step, y + dy * step))
    canvas.polygon(corners, stroke="#cccccc", dashed=True)

    if metric:
        # Side lengths equal labels; closure is the hexagon constraint.
        corners = [(0.0, -step)]
        for name, angle in zip(_HEX_SIDES[:-1], _HEX_ANGLES[:-1], strict=True):
            dx, dy = _unit(angle)
            x, y = corners[-1]
            k = labels[name] * SVG_CELL / 2
            corners.append((x + dx * k, y + dy * k))

    for i, name in enumerate(_HEX_SIDES):
        a, b = corners[i], corners[(i + 1) % 6]
        value = labels[name]
        width = THICK_STROKE if value == 1 and not metric else THIN_STROKE
        if value:
            canvas.line(a, b, width=width)
        mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
        canvas.text(mx, my - 4, f"{name}={value}", size=8)

    for name, corner, angle in _LEGS:
        value = labels[name]
        dx, dy = _unit(angle)
        length = value * SVG_CELL / 2 if metric else step * 0.8
        x, y = corners[corner]
        end = (x + dx * length, y + dy * length)
        if value:
            width = THICK_STROKE if value == 1 and not metric else THIN_STROKE
            canvas.line((x, y), end, width=width)
        canvas.text(end[0] + dx * 10, end[1] + dy * 10 + 3, f"{name}={value}", size=8)


def pictograph_svg(p: Pictograph) -> str:
    from .pictographs import external_weights

    canvas = SvgCanvas()
    labels = p.labels.to_json()
    if p.kind == "bz":
        _bz_svg(canvas, labels)
    else:
        _hexagon_svg(canvas, labels, metric=p.kind == "su3honey")
    lam, mu, nu = external_weights(p)
    top = canvas.min_y if canvas.min_y is not None else 0.0
    canvas.text(0, top - 10, f"{PICTOGRAPH_KINDS[p.kind]} {lam}⊗{mu} → {nu}", size=11)
    return canvas.render()
