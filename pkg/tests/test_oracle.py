"""Tests for the brute-force SU(2), SU(3) and SU(4) decomposition."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecomb.config import SU4_THEOREM2_WITNESS
from liecomb.errors import RankError
from liecomb.multiplicity import decompose
from liecomb.oracle import (
    SU4_POLYTOPE_SPECIAL,
    SU4_POLYTOPE_VERTICES,
    decompose_oracle,
    height,
    mult_oracle,
    su4_polytope_check,
    weight_system,
    weyl_dimension,
)
from liecomb.weights import Weight, conjugate, dim

from .conftest import su3_weights


def W(*labels: int) -> Weight:
    return Weight(labels)


def su4_weights(max_label: int = 2) -> st.SearchStrategy[Weight]:
    label = st.integers(min_value=0, max_value=max_label)
    return st.tuples(label, label, label).map(Weight)


class TestWeightSystems:
    def test_fundamental(self) -> None:
        ws = weight_system(W(1, 0))
        assert ws.mults == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}

    def test_adjoint(self) -> None:
        ws = weight_system(W(1, 1))
        assert len(ws) == 7
        assert ws.get((0, 0)) == 2
        assert ws.total() == 8
        assert ws.dominant() == {(1, 1): 1, (0, 0): 2}

    def test_su2(self) -> None:
        assert weight_system(W(3)).mults == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}

    @given(su3_weights(6))
    @settings(max_examples=60)
    def test_total_is_dimension(self, lam: Weight) -> None:
        assert weight_system(lam).total() == weyl_dimension(lam) == dim(lam)

    @given(su4_weights())
    @settings(max_examples=30)
    def test_su4_total_is_dimension(self, lam: Weight) -> None:
        assert weight_system(lam).total() == dim(lam)

    def test_to_json(self) -> None:
        payload = weight_system(W(1, 0)).to_json()
        assert payload["highest"] == [1, 0]
        assert len(payload["weights"]) == 3


class TestHeight:
    def test_values(self) -> None:
        assert height((1, 1)) == 4
        assert height((2,)) == 2
        assert height((1, 0, 1)) == 6

    def test_simple_roots_have_height_two(self) -> None:
        assert height((2, -1)) == height((-1, 2)) == 2
        assert height((2, -1, 0)) == height((0, -1, 2)) == 2


class TestSmallProducts:
    def test_su2(self) -> None:
        assert decompose_oracle(W(1), W(1)).as_dict() == {W(0): 1, W(2): 1}
        assert decompose_oracle(W(2), W(1)).as_dict() == {W(1): 1, W(3): 1}

    def test_quark_antiquark(self) -> None:
        assert decompose_oracle(W(1, 0), W(0, 1)).as_dict() == {W(0, 0): 1, W(1, 1): 1}

    def test_fifteen_squared(self) -> None:
        table = decompose_oracle(W(1, 0, 1), W(1, 0, 1))
        assert table.dimension() == 225
        assert len(table) == 6
        assert table.total() == 7
        assert table.get(W(1, 0, 1)) == 2
        assert table.get(W(2, 0, 2)) == 1

    def test_mult_oracle(self) -> None:
        assert mult_oracle(W(1, 1), W(1, 1), W(1, 1)) == 2


class TestAgainstClosedForms:
    def test_worked_example(self, table_95_62) -> None:
        assert decompose_oracle(W(9, 5), W(6, 2)).as_dict() == table_95_62

    @given(su3_weights(4), su3_weights(4))
    @settings(max_examples=60, deadline=None)
    def test_klimyk_matches_closed_form(self, lam: Weight, mu: Weight) -> None:
        assert decompose_oracle(lam, mu) == decompose(lam, mu)

    @given(su3_weights(3), su3_weights(3))
    @settings(max_examples=40, deadline=None)
    def test_peel_matches_klimyk(self, lam: Weight, mu: Weight) -> None:
        assert decompose_oracle(lam, mu, "peel") == decompose_oracle(lam, mu, "klimyk")

    @given(su4_weights(), su4_weights())
    @settings(max_examples=20, deadline=None)
    def test_su4_dimension_sum_rule(self, lam: Weight, mu: Weight) -> None:
        assert decompose_oracle(lam, mu).dimension() == dim(lam) * dim(mu)


class TestErrors:
    def test_rank_too_large(self) -> None:
        with pytest.raises(RankError):
            decompose_oracle(W(1, 0, 0, 0), W(0, 0, 0, 1))

    def test_mixed_ranks(self) -> None:
        with pytest.raises(RankError):
            decompose_oracle(W(1, 0), W(1, 0, 0))

    def test_unknown_method(self) -> None:
        with pytest.raises(ValueError):
            decompose_oracle(W(1, 0), W(1, 0), method="guess")


class TestSU4:
    def test_theorem2_witness(self) -> None:
        lam, mu = (Weight(x) for x in SU4_THEOREM2_WITNESS)
        direct = decompose_oracle(lam, mu)
        conj = decompose_oracle(lam, conjugate(mu))
        assert direct.max_mult() == 8
        assert conj.max_mult() <= 7

    def test_polytope_vertices(self) -> None:
        report = su4_polytope_check()
        assert len(SU4_POLYTOPE_VERTICES) == 16
        assert report.vertices_ok
        assert not report.outside_hull

    def test_polytope_special_weights(self) -> None:
        report = su4_polytope_check()
        assert report.special_mults == SU4_POLYTOPE_SPECIAL
        assert report.special_on_plane

    def test_polytope_totals(self) -> None:
        report = su4_polytope_check()
        assert report.total == report.total_conj
        assert report.ok
        assert report.to_json()["ok"] is True
