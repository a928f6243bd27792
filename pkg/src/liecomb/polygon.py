"""Tensor polygons in the (ν₁, ν₂) plane and their nested multiplicity layers.

All geometry is exact integer arithmetic, except :func:`hull_vertices`, which calls
scipy's Qhull for the non-degenerate case and then only uses the returned indices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull

from .multiplicity import DecompositionTable, mult_max
from .weights import Weight, conjugate, require_rank

logger = logging.getLogger(__name__)

Point = tuple[int, int]

RHO: Point = (1, 1)

# Edge directions of the outer polygon, walked clockwise from the h.h.w.
EDGE_DIRECTIONS: tuple[Point, ...] = (
    (1, -2),
    (-1, -1),
    (-3, 0),
    (-2, 1),
    (-1, 2),
    (0, 3),
    (1, 1),
    (2, -1),
)

# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Normalization:
    """(λ, μ) rewritten so that λ₁ is the largest of the four labels.

    ``swapped`` exchanges λ and μ and leaves weights unchanged; ``conjugated`` replaces
    both by their conjugates and therefore conjugates every resulting ν.
    """

    lam: Weight
    mu: Weight
    swapped: bool
    conjugated: bool

    def to_caller(self, nu: Point) -> Point:
        return (nu[1], nu[0]) if self.conjugated else nu


def normalize(lam: Weight, mu: Weight) -> Normalization:
    require_rank(3, lam, mu)
    labels = [lam[0], lam[1], mu[0], mu[1]]
    where = labels.index(max(labels))
    swapped = where in (2, 3)
    conjugated = where in (1, 3)
    a, b = (mu, lam) if swapped else (lam, mu)
    if conjugated:
        a, b = conjugate(a), conjugate(b)
    if swapped or conjugated:
        logger.debug("normalized %s⊗%s → %s⊗%s", lam, mu, a, b)
    return Normalization(a, b, swapped, conjugated)


# ---------------------------------------------------------------------------
# Exact planar helpers
# ---------------------------------------------------------------------------


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(
        a[1], b[1]
    )


def _signed_area2(vertices: list[Point]) -> int:
    n = len(vertices)
    return sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )


def _clean_cycle(points: list[Point]) -> list[Point]:
    """Drop repeated points and straight-through vertices from a closed walk."""
    cycle: list[Point] = []
    for p in points:
        if not cycle or cycle[-1] != p:
            cycle.append(p)
    while len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle.pop()
    changed = True
    while changed and len(cycle) > 2:
        changed = False
        for i in range(len(cycle)):
            prev, cur, nxt = cycle[i - 1], cycle[i], cycle[(i + 1) % len(cycle)]
            d1 = (cur[0] - prev[0], cur[1] - prev[1])
            d2 = (nxt[0] - cur[0], nxt[1] - cur[1])
            if d1[0] * d2[1] - d1[1] * d2[0] == 0 and d1[0] * d2[0] + d1[1] * d2[1] > 0:
                del cycle[i]
                changed = True
                break
    # A segment walked out and back reduces to its two ends.
    if len(cycle) > 2 and _signed_area2(cycle) == 0:
        cycle = [min(cycle), max(cycle)]
    return cycle


def hull_vertices(points: list[Point]) -> list[Point]:
    """Vertices of the convex hull, counter-clockwise; a segment gives its two ends."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    if all(_cross(pts[0], pts[1], p) == 0 for p in pts[2:]):
        return [pts[0], pts[-1]]
    hull = ConvexHull(np.array(pts, dtype=float))
    return [pts[i] for i in hull.vertices]


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TensorPolygon:
    """One multiplicity layer: a convex lattice polygon, counter-clockwise, possibly degenerate."""

    layer: int
    vertices: tuple[Point, ...]
    lam: Weight
    mu: Weight
    edge_lengths: tuple[int, ...] = field(default=(), compare=False)

    def contains(self, nu: Point) -> bool:
        """Inside or on the boundary."""
        vs = self.vertices
        if len(vs) == 1:
            return nu == vs[0]
        if len(vs) == 2:
            return _on_segment(nu, vs[0], vs[1])
        return all(_cross(vs[i], vs[(i + 1) % len(vs)], nu) >= 0 for i in range(len(vs)))

    def on_boundary(self, nu: Point) -> bool:
        vs = self.vertices
        if len(vs) == 1:
            return nu == vs[0]
        return any(_on_segment(nu, vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def lattice_points(self) -> list[Point]:
        """Points inside-or-on with the triality of λ⊗μ, sorted."""
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        tau = (self.lam[0] + 2 * self.lam[1] + self.mu[0] + 2 * self.mu[1]) % 3
        return [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if (x + 2 * y) % 3 == tau and self.contains((x, y))
        ]

    def boundary_points(self) -> list[Point]:
        return [p for p in self.lattice_points() if self.on_boundary(p)]

    def mirror(self) -> TensorPolygon:
        """Reflection across ν₁ = ν₂, the polygon of λ̄⊗μ̄."""
        flipped = [(y, x) for x, y in reversed(self.vertices)]
        return TensorPolygon(
            self.layer,
            tuple(flipped),
            conjugate(self.lam),
            conjugate(self.mu),
            self.edge_lengths,
        )

    def to_json(self) -> dict:
        return {"layer": self.layer, "vertices": [list(v) for v in self.vertices]}


@dataclass(frozen=True)
class LayerDiagram:
    lam: Weight
    mu: Weight
    layers: tuple[TensorPolygon, ...]

    def __len__(self) -> int:
        return len(self.layers)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "layers": [p.to_json() for p in self.layers],
        }


def hhw(lam: Weight, mu: Weight) -> Weight:
    """The highest highest weight λ + μ."""
    require_rank(3, lam, mu)
    return Weight((lam[0] + mu[0], lam[1] + mu[1]))


def _lhw_normalized(lam: Weight, mu: Weight) -> Point:
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    if 0 <= l1 - m2 <= m1 - l2:
        return (m1 + m2 - l1 - l2, l1 - m2)
    if 0 <= m1 - l2 <= l1 - m2:
        return (l1 + l2 - m1 - m2, m1 - l2)
    return (l1 - m2, l2 - m1)


def lhw(lam: Weight, mu: Weight) -> Weight:
    """The lowest highest weight h of λ⊗μ."""
    norm = normalize(lam, mu)
    return Weight(norm.to_caller(_lhw_normalized(norm.lam, norm.mu)))


def _edge_lengths(lam: Weight, mu: Weight) -> tuple[int, ...]:
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    k4 = min(l1 - m2, m1 - l2) if m1 > l2 else abs(min(l2 - m1, m2))
    return (
        min(l2, m2),
        abs(min(l2 - m2, m1)),
        max(min(l1, l2, m1, m2, m1 + m2 - l2), 0),
        k4,
        abs(min(l1 - m1 - m2, 0) + min(l2, m1)),
        max(min(l2, m1 + m2 - l1), 0),
        abs(min(l1 - m1, m2)),
        m1,
    )


def outer_polygon(lam: Weight, mu: Weight) -> TensorPolygon:
    """The outermost layer, built edge by edge from H = λ + μ."""
    norm = normalize(lam, mu)
    lengths = _edge_lengths(norm.lam, norm.mu)
    x, y = norm.lam[0] + norm.mu[0], norm.lam[1] + norm.mu[1]
    walk = [(x, y)]
    for k, (dx, dy) in zip(lengths, EDGE_DIRECTIONS, strict=True):
        x, y = x + k * dx, y + k * dy
        walk.append((x, y))
    if walk[-1] != walk[0]:
        raise AssertionError(f"open polygon for {lam}⊗{mu}: {walk}")
    vertices = [norm.to_caller(p) for p in _clean_cycle(walk)]
    if len(vertices) > 2 and _signed_area2(vertices) < 0:
        vertices.reverse()
    return TensorPolygon(1, tuple(vertices), lam, mu, lengths)


def layers(lam: Weight, mu: Weight) -> LayerDiagram:
    """P⁽ᵐ⁺¹⁾(λ, μ) = P⁽¹⁾(λ − mρ, μ − mρ) + mρ for m = 0 … mult_max − 1."""
    top = mult_max(lam, mu)
    out = []
    for m in range(top):
        inner = outer_polygon(
            Weight((lam[0] - m, lam[1] - m)),
            Weight((mu[0] - m, mu[1] - m)),
        )
        shifted = tuple((x + m, y + m) for x, y in inner.vertices)
        out.append(TensorPolygon(m + 1, shifted, lam, mu, inner.edge_lengths))
    return LayerDiagram(lam, mu, tuple(out))


def direct_layers(table: DecompositionTable) -> list[list[Point]]:
    """Hull vertices of {ν : mult(ν) ≥ m} for each m, straight from a decomposition."""
    top = table.max_mult()
    return [
        hull_vertices([tuple(nu.labels) for nu, k in table.entries if k >= m])
        for m in range(1, top + 1)
    ]


def render_svg(
    diagram: LayerDiagram,
    table: DecompositionTable | None = None,
    *,
    axes: str = "orthogonal",
    overlay: LayerDiagram | None = None,
    overlay_table: DecompositionTable | None = None,
) -> str:
    """Self-contained SVG of the layers, with one coloured dot per weight."""
    from .svg import layer_diagram_svg

    return layer_diagram_svg(
        diagram, table, axes=axes, overlay=overlay, overlay_table=overlay_table
    )
