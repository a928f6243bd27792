"""Tests for the SVG writers."""

from __future__ import annotations

import pytest

from liecomb.config import mult_color
from liecomb.multiplicity import decompose
from liecomb.pictographs import enumerate as enumerate_pictographs
from liecomb.pictographs import fundamentals
from liecomb.polygon import layers, render_svg
from liecomb.svg import SvgCanvas, _num, layer_diagram_svg, pictograph_svg
from liecomb.weights import Weight, conjugate


def W(*labels: int) -> Weight:
    return Weight(labels)


class TestNumbers:
    @pytest.mark.parametrize(
        ("value", "text"),
        [(1.0, "1"), (2.5, "2.5"), (0.125, "0.12"), (-0.001, "0"), (-3.14159, "-3.14")],
    )
    def test_fixed_precision(self, value: float, text: str) -> None:
        assert _num(value) == text


class TestCanvas:
    def test_empty_canvas(self) -> None:
        svg = SvgCanvas().render()
        assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg"')
        assert svg.endswith("</svg>\n")

    def test_bounding_box(self) -> None:
        canvas = SvgCanvas()
        canvas.line((0, 0), (10, 20))
        canvas.circle(30, 5, 2)
        assert (canvas.min_x, canvas.max_x) == (0, 32)
        assert (canvas.min_y, canvas.max_y) == (0, 20)

    def test_text_escaped(self) -> None:
        canvas = SvgCanvas()
        canvas.text(0, 0, "a<b & c")
        assert "a&lt;b &amp; c" in canvas.commands[0]


class TestLayerDiagram:
    def test_one_polygon_per_layer(self) -> None:
        diagram = layers(W(9, 5), W(6, 2))
        svg = layer_diagram_svg(diagram)
        assert svg.count("<polygon") == sum(len(p.vertices) >= 3 for p in diagram.layers)
        assert svg.count("<polygon") >= 2

    def test_dots_coloured_by_multiplicity(self) -> None:
        table = decompose(W(9, 5), W(6, 2))
        svg = render_svg(layers(W(9, 5), W(6, 2)), table)
        assert svg.count(f'fill="{mult_color(3)}"') == 14
        assert svg.count(f'fill="{mult_color(2)}"') == 16

    def test_overlay_dashed(self) -> None:
        lam, mu = W(10, 4), W(7, 3)
        svg = render_svg(layers(lam, mu), overlay=layers(lam, conjugate(mu)))
        assert 'stroke-dasharray="4 3"' in svg

    def test_root_axes_differ(self) -> None:
        diagram = layers(W(2, 1), W(1, 1))
        assert layer_diagram_svg(diagram, axes="root") != layer_diagram_svg(diagram)

    def test_bad_axes(self) -> None:
        with pytest.raises(ValueError):
            layer_diagram_svg(layers(W(1, 0), W(1, 0)), axes="polar")

    def test_deterministic(self) -> None:
        table = decompose(W(4, 2), W(3, 3))
        diagram = layers(W(4, 2), W(3, 3))
        assert render_svg(diagram, table) == render_svg(diagram, table)


class TestPictographs:
    def test_bz_has_nine_nodes(self) -> None:
        svg = pictograph_svg(fundamentals()[0])
        assert svg.count("<circle") == 9
        assert "BZ-triangle (0,1)⊗(1,0) → (0,0)" in svg

    def test_oblade_thick_edges(self) -> None:
        svg = pictograph_svg(fundamentals("oblade")[6])
        assert 'stroke-width="3"' in svg

    def test_honeycomb_skeleton(self, anchor) -> None:
        p = enumerate_pictographs(*anchor, kind="su3honey")[0]
        svg = pictograph_svg(p)
        assert svg.count("<polygon") == 1
        assert "SU(3)-honeycomb (21,6)⊗(17,16) → (12,8)" in svg
