"""Tests for tensor polygons, normalization and the nested layers."""

from __future__ import annotations

import numpy as np
from hypothesis import given, settings

from liecomb.multiplicity import decompose, mult_max
from liecomb.polygon import (
    direct_layers,
    hhw,
    hull_vertices,
    layers,
    lhw,
    normalize,
    outer_polygon,
)
from liecomb.weights import Weight, conjugate

from .conftest import su3_weights


def W(*labels: int) -> Weight:
    return Weight(labels)


class TestNormalize:
    def test_already_normal(self) -> None:
        norm = normalize(W(9, 5), W(6, 2))
        assert (norm.lam, norm.mu) == (W(9, 5), W(6, 2))
        assert not norm.swapped
        assert not norm.conjugated

    def test_swap(self) -> None:
        norm = normalize(W(6, 2), W(9, 5))
        assert norm.swapped and not norm.conjugated
        assert norm.lam == W(9, 5)

    def test_conjugate(self) -> None:
        norm = normalize(W(5, 9), W(2, 6))
        assert norm.conjugated and not norm.swapped
        assert (norm.lam, norm.mu) == (W(9, 5), W(6, 2))
        assert norm.to_caller((3, 1)) == (1, 3)

    @given(su3_weights(), su3_weights())
    def test_lambda1_is_largest(self, lam: Weight, mu: Weight) -> None:
        norm = normalize(lam, mu)
        assert norm.lam[0] == max(*lam.labels, *mu.labels)


class TestWeights:
    def test_hhw(self) -> None:
        assert hhw(W(9, 5), W(6, 2)) == W(15, 7)

    def test_lhw_worked_example(self) -> None:
        assert lhw(W(9, 5), W(6, 2)) == W(6, 1)

    @given(su3_weights(5), su3_weights(5))
    @settings(max_examples=80)
    def test_lhw_occurs_once(self, lam: Weight, mu: Weight) -> None:
        table = decompose(lam, mu)
        assert table.get(lhw(lam, mu)) == 1
        assert table.get(hhw(lam, mu)) == 1


class TestHull:
    def test_point(self) -> None:
        assert hull_vertices([(2, 2), (2, 2)]) == [(2, 2)]

    def test_segment(self) -> None:
        assert set(hull_vertices([(0, 0), (1, 1), (3, 3)])) == {(0, 0), (3, 3)}

    def test_square_drops_interior(self) -> None:
        pts = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)]
        assert set(hull_vertices(pts)) == {(0, 0), (2, 0), (2, 2), (0, 2)}


class TestOuterPolygon:
    def test_segment_product(self) -> None:
        poly = outer_polygon(W(1, 0), W(1, 0))
        assert set(poly.vertices) == {(2, 0), (0, 1)}

    def test_contains_every_constituent(self) -> None:
        poly = outer_polygon(W(9, 5), W(6, 2))
        for nu, _ in decompose(W(9, 5), W(6, 2)).entries:
            assert poly.contains(tuple(nu.labels))
        assert not poly.contains((20, 20))

    def test_lattice_points_are_constituents(self, table_95_62) -> None:
        poly = outer_polygon(W(9, 5), W(6, 2))
        assert {W(*p) for p in poly.lattice_points()} == set(table_95_62)

    def test_mirror_is_conjugate_product(self) -> None:
        mirrored = outer_polygon(W(9, 5), W(6, 2)).mirror()
        direct = outer_polygon(W(5, 9), W(2, 6))
        assert set(mirrored.vertices) == set(direct.vertices)
        assert mirrored.lam == W(5, 9)

    def test_to_json(self) -> None:
        payload = outer_polygon(W(1, 0), W(1, 0)).to_json()
        assert payload["layer"] == 1


class TestLayers:
    def test_worked_example_has_three_layers(self) -> None:
        diagram = layers(W(9, 5), W(6, 2))
        assert len(diagram) == 3
        assert [p.layer for p in diagram.layers] == [1, 2, 3]

    def test_layers_are_multiplicity_sets(self, table_95_62) -> None:
        diagram = layers(W(9, 5), W(6, 2))
        for poly in diagram.layers:
            at_least = {nu for nu, m in table_95_62.items() if m >= poly.layer}
            assert {W(*p) for p in poly.lattice_points()} == at_least

    @given(su3_weights(6), su3_weights(6))
    @settings(max_examples=100)
    def test_recursion_matches_direct_hulls(self, lam: Weight, mu: Weight) -> None:
        diagram = layers(lam, mu)
        direct = direct_layers(decompose(lam, mu))
        assert len(diagram) == len(direct) == mult_max(lam, mu)
        for poly, hull in zip(diagram.layers, direct, strict=True):
            assert set(poly.vertices) == set(hull)

    @given(su3_weights(6), su3_weights(6))
    @settings(max_examples=100)
    def test_low_multiplicities_on_boundary(self, lam: Weight, mu: Weight) -> None:
        diagram = layers(lam, mu)
        top = mult_max(lam, mu)
        for nu, m in decompose(lam, mu).entries:
            if m < top:
                assert diagram.layers[m - 1].on_boundary(tuple(nu.labels))

    def test_conjugate_layers_same_count(self) -> None:
        assert len(layers(W(10, 4), W(7, 3))) == len(layers(W(10, 4), conjugate(W(7, 3))))

    def test_diagram_json(self) -> None:
        payload = layers(W(2, 1), W(1, 1)).to_json()
        assert payload["lambda"] == [2, 1]
        assert len(payload["layers"]) == 2
        assert np.array(payload["layers"][0]["vertices"]).shape[1] == 2
