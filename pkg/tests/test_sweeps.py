"""Tests for the exhaustive and sampled verification sweeps."""

from __future__ import annotations

import logging
from math import comb

import pytest

from liecomb.config import (
    SU3_SAMPLE_MAX_LABEL,
    SU3_SAMPLE_PAIRS,
    SU4_DEFAULT_LEVEL,
    SU4_THEOREM2_WITNESS,
)
from liecomb.errors import RankError
from liecomb.oracle import decompose_oracle
from liecomb.sweeps import (
    sample_pairs,
    su3_pairs,
    su4_pairs,
    su4_weights,
    sweep_su3,
    sweep_su4,
    theorem2_witness,
    verify_sweep,
)
from liecomb.weights import Weight, conjugate


class TestPairs:
    def test_su3_count(self) -> None:
        assert len(su3_pairs(6)) == 49 * 49
        assert su3_pairs(0) == [((0, 0), (0, 0))]

    def test_su4_weights(self) -> None:
        assert len(su4_weights(2)) == comb(5, 3)
        assert all(sum(w) <= 2 for w in su4_weights(2))

    @pytest.mark.parametrize("level", [0, 1, 3, 5])
    def test_su4_pairs_bound_combined_level(self, level: int) -> None:
        pairs = su4_pairs(level)
        assert len(pairs) == comb(level + 6, 6)
        assert all(sum(lam) + sum(mu) <= level for lam, mu in pairs)

    def test_witness_outside_default_sweep(self) -> None:
        lam, mu = SU4_THEOREM2_WITNESS
        assert sum(lam) + sum(mu) > SU4_DEFAULT_LEVEL
        assert (lam, mu) not in su4_pairs(SU4_DEFAULT_LEVEL)


class TestSampling:
    def test_deterministic(self) -> None:
        assert sample_pairs(3, 20, 10, seed=7) == sample_pairs(3, 20, 10, seed=7)

    def test_seed_matters(self) -> None:
        assert sample_pairs(3, 20, 10, seed=1) != sample_pairs(3, 20, 10, seed=2)

    def test_su3_labels_bounded(self) -> None:
        pairs = sample_pairs(3, 50, 4, seed=0)
        assert len(pairs) == 50
        assert all(0 <= x <= 4 for lam, mu in pairs for x in (*lam, *mu))

    def test_su4_levels_bounded(self) -> None:
        pairs = sample_pairs(4, 30, 3, seed=0)
        assert all(len(lam) == len(mu) == 3 for lam, mu in pairs)
        assert all(sum(lam) <= 3 and sum(mu) <= 3 for lam, mu in pairs)


class TestSU3Sweeps:
    def test_all_checks_small(self) -> None:
        summary = sweep_su3(2, ("theorem1", "theorem2", "bijection", "oracle"))
        assert summary.pairs == 81
        assert summary.passed
        assert summary.first_failure is None

    def test_sampled(self) -> None:
        summary = sweep_su3(1, sample=10, seed=3)
        assert summary.sampled == 10
        assert summary.passed
        assert summary.to_json()["seed"] == 3

    def test_parallel_matches_serial(self) -> None:
        serial = sweep_su3(2, ("theorem2", "bijection"))
        parallel = sweep_su3(2, ("theorem2", "bijection"), workers=2)
        assert serial.to_json() == parallel.to_json()

    def test_unknown_check(self) -> None:
        with pytest.raises(ValueError):
            sweep_su3(1, ("theorem3",))

    @pytest.mark.slow
    def test_labels_up_to_eight(self) -> None:
        summary = sweep_su3(8, ("theorem1", "theorem2", "bijection"), workers=2)
        assert summary.pairs == 81 * 81
        assert summary.passed

    @pytest.mark.slow
    def test_oracle_agreement(self) -> None:
        summary = sweep_su3(8, ("oracle",), workers=2, sample=SU3_SAMPLE_PAIRS, seed=11)
        assert summary.pairs == 81 * 81
        assert summary.sampled == SU3_SAMPLE_PAIRS == 500
        assert SU3_SAMPLE_MAX_LABEL == 20
        assert summary.failures == []

    def test_oracle_sweep_logs_cache(self, caplog) -> None:
        caplog.set_level(logging.DEBUG, logger="liecomb.sweeps")
        sweep_su3(1, ("oracle",))
        assert any("weight-system cache" in r.getMessage() for r in caplog.records)


class TestSU4Sweeps:
    def test_small_levels(self) -> None:
        summary = sweep_su4(3)
        assert summary.pairs == comb(9, 6)
        assert summary.passed
        assert summary.witness is not None

    def test_witness(self) -> None:
        report = theorem2_witness()
        assert not report.equal
        assert max(report.multiset) == 8
        assert max(report.multiset_conj) <= 7

    def test_witness_in_json(self) -> None:
        payload = sweep_su4(1).to_json()
        assert payload["witness"]["lambda"] == [1, 2, 2]
        assert payload["witness"]["equal"] is False

    def test_theorem1_only_has_no_witness(self) -> None:
        assert sweep_su4(1, ("theorem1",)).witness is None

    def test_rejects_su3_checks(self) -> None:
        with pytest.raises(ValueError):
            sweep_su4(1, ("bijection",))

    @pytest.mark.slow
    def test_default_level(self) -> None:
        summary = sweep_su4(workers=2)
        assert summary.bound == SU4_DEFAULT_LEVEL
        assert summary.passed

    @pytest.mark.parametrize(
        ("lam", "mu"),
        [
            ((1, 2, 2), (1, 2, 2)),
            ((1, 2, 2), (2, 2, 1)),
            ((2, 2, 1), (1, 2, 2)),
            ((2, 2, 1), (2, 2, 1)),
        ],
    )
    def test_level_five_factors_break_multisets(
        self, lam: tuple[int, ...], mu: tuple[int, ...]
    ) -> None:
        a = decompose_oracle(Weight(lam), Weight(mu))
        b = decompose_oracle(Weight(lam), conjugate(Weight(mu)))
        assert sum(lam) + sum(mu) > SU4_DEFAULT_LEVEL
        assert a.multiplicities() != b.multiplicities()


class TestVerifySweep:
    def test_dispatch(self) -> None:
        assert verify_sweep(1).rank == 3
        assert verify_sweep(1, rank=4).rank == 4

    def test_negative_bound(self) -> None:
        with pytest.raises(ValueError):
            verify_sweep(-1)

    def test_rank(self) -> None:
        with pytest.raises(RankError):
            verify_sweep(1, rank=5)
