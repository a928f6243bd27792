"""Exhaustive and sampled verification sweeps over pairs of weights."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .config import (
    SU3_SAMPLE_MAX_LABEL,
    SU4_DEFAULT_LEVEL,
    SU4_THEOREM2_WITNESS,
    SWEEP_CHECKS,
)
from .conjmap import verify_bijection
from .errors import RankError
from .multiplicity import Theorem2Report, decompose
from .oracle import cache_info, decompose_oracle
from .parallel import pmap
from .weights import Weight, conjugate

logger = logging.getLogger(__name__)

Pair = tuple[tuple[int, ...], tuple[int, ...]]

# ---------------------------------------------------------------------------
# Result type
# ---------------------------------------------------------------------------


@dataclass
class SweepSummary:
    rank: int
    checks: tuple[str, ...]
    bound: int
    pairs: int = 0
    sampled: int = 0
    seed: int | None = None
    failures: list[tuple[Pair, tuple[str, ...]]] = field(default_factory=list)
    witness: Theorem2Report | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> tuple[Pair, tuple[str, ...]] | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        out: dict = {
            "rank": self.rank,
            "checks": list(self.checks),
            "bound": self.bound,
            "pairs": self.pairs,
            "sampled": self.sampled,
            "seed": self.seed,
            "passed": self.passed,
            "failures": [
                {"lambda": list(lam), "mu": list(mu), "checks": list(names)}
                for (lam, mu), names in self.failures
            ],
        }
        if self.witness is not None:
            lam, mu = SU4_THEOREM2_WITNESS
            out["witness"] = {"lambda": list(lam), "mu": list(mu), **self.witness.to_json()}
        return out


# ---------------------------------------------------------------------------
# Per-pair checks (module level so the process pool can pickle them)
# ---------------------------------------------------------------------------


def _theorem_checks(lam: Weight, mu: Weight, checks: tuple[str, ...], oracle: bool) -> list[str]:
    if oracle:
        a = decompose_oracle(lam, mu)
        b = decompose_oracle(lam, conjugate(mu))
    else:
        a = decompose(lam, mu)
        b = decompose(lam, conjugate(mu))
    failed = []
    if "theorem1" in checks and (
        a.total() != b.total() or a.sum_of_squares() != b.sum_of_squares()
    ):
        failed.append("theorem1")
    if "theorem2" in checks and a.multiplicities() != b.multiplicities():
        failed.append("theorem2")
    return failed


def _check_su3(task: tuple[Pair, tuple[str, ...]]) -> tuple[str, ...]:
    (lam_labels, mu_labels), checks = task
    lam, mu = Weight(lam_labels), Weight(mu_labels)
    failed = _theorem_checks(lam, mu, checks, oracle=False)
    if "bijection" in checks and not verify_bijection(lam, mu).ok:
        failed.append("bijection")
    if "oracle" in checks and decompose(lam, mu) != decompose_oracle(lam, mu):
        failed.append("oracle")
    return tuple(failed)


def _check_su4(task: tuple[Pair, tuple[str, ...]]) -> tuple[str, ...]:
    (lam_labels, mu_labels), checks = task
    return tuple(_theorem_checks(Weight(lam_labels), Weight(mu_labels), checks, oracle=True))


# ---------------------------------------------------------------------------
# Pair generators
# ---------------------------------------------------------------------------


def su3_pairs(max_label: int) -> list[Pair]:
    """Every (λ, μ) with all four labels ≤ max_label."""
    weights = list(itertools.product(range(max_label + 1), repeat=2))
    return [(lam, mu) for lam in weights for mu in weights]


def su4_weights(max_level: int) -> list[tuple[int, int, int]]:
    return [w for w in itertools.product(range(max_level + 1), repeat=3) if sum(w) <= max_level]


def su4_pairs(max_level: int) -> list[Pair]:
    """Every (λ, μ) with level(λ) + level(μ) ≤ max_level."""
    weights = su4_weights(max_level)
    return [(lam, mu) for lam in weights for mu in weights if sum(lam) + sum(mu) <= max_level]


def sample_pairs(rank: int, count: int, max_label: int, seed: int) -> list[Pair]:
    """``count`` random pairs with labels ≤ max_label (SU(3)) or levels ≤ max_label (SU(4))."""
    rng = np.random.default_rng(seed)
    out: list[Pair] = []
    while len(out) < count:
        draw = rng.integers(0, max_label + 1, size=2 * (rank - 1))
        lam, mu = tuple(int(x) for x in draw[: rank - 1]), tuple(int(x) for x in draw[rank - 1 :])
        if rank == 4 and (sum(lam) > max_label or sum(mu) > max_label):
            continue
        out.append((lam, mu))
    return out


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def _run(
    fn,
    pairs: list[Pair],
    checks: tuple[str, ...],
    workers: int,
) -> list[tuple[Pair, tuple[str, ...]]]:
    results = pmap(fn, [(p, checks) for p in pairs], workers=workers)
    return [(p, r) for p, r in zip(pairs, results, strict=True) if r]


def theorem2_witness() -> Theorem2Report:
    """Multisets of (1,2,2)⊗(2,1,3) and (1,2,2)⊗(3,1,2) from the oracle; they differ."""
    lam, mu = (Weight(x) for x in SU4_THEOREM2_WITNESS)
    a = decompose_oracle(lam, mu)
    b = decompose_oracle(lam, conjugate(mu))
    return Theorem2Report(tuple(a.multiplicities()), tuple(b.multiplicities()))


def sweep_su3(
    max_label: int,
    checks: tuple[str, ...] = ("theorem1", "theorem2"),
    *,
    workers: int = 1,
    sample: int = 0,
    seed: int = 0,
) -> SweepSummary:
    unknown = set(checks) - set(SWEEP_CHECKS)
    if unknown:
        raise ValueError(f"unknown sweep checks: {sorted(unknown)}")
    pairs = su3_pairs(max_label)
    summary = SweepSummary(rank=3, checks=tuple(checks), bound=max_label, seed=seed)
    logger.info("SU(3) sweep over %d pairs, checks %s", len(pairs), ",".join(checks))
    summary.failures = _run(_check_su3, pairs, summary.checks, workers)
    summary.pairs = len(pairs)
    if sample:
        extra = sample_pairs(3, sample, SU3_SAMPLE_MAX_LABEL, seed)
        summary.failures += _run(_check_su3, extra, summary.checks, workers)
        summary.sampled = len(extra)
    if "oracle" in checks:
        logger.debug("weight-system cache: %s", cache_info())
    logger.info("SU(3) sweep: %d failures", len(summary.failures))
    return summary


def sweep_su4(
    max_level: int = SU4_DEFAULT_LEVEL,
    checks: tuple[str, ...] = ("theorem1", "theorem2"),
    *,
    workers: int = 1,
    sample: int = 0,
    sample_level: int | None = None,
    seed: int = 0,
) -> SweepSummary:
    """Exhaustive over level(λ)+level(μ) ≤ max_level, then ``sample`` random pairs.

    Sampled pairs only bound each level by ``sample_level`` (default ``max_level``), so they
    can reach products where Theorem 2 is known to fail; those are reported, not raised.
    """
    unknown = set(checks) - {"theorem1", "theorem2"}
    if unknown:
        raise ValueError(f"SU(4) sweeps only support theorem1/theorem2, got {sorted(unknown)}")
    pairs = su4_pairs(max_level)
    summary = SweepSummary(rank=4, checks=tuple(checks), bound=max_level, seed=seed)
    logger.info("SU(4) sweep over %d pairs, checks %s", len(pairs), ",".join(checks))
    summary.failures = _run(_check_su4, pairs, summary.checks, workers)
    summary.pairs = len(pairs)
    if sample:
        extra = sample_pairs(4, sample, sample_level or max_level, seed)
        summary.failures += _run(_check_su4, extra, summary.checks, workers)
        summary.sampled = len(extra)
    if "theorem2" in checks:
        summary.witness = theorem2_witness()
    logger.debug("weight-system cache: %s", cache_info())
    logger.info("SU(4) sweep: %d failures", len(summary.failures))
    return summary


def verify_sweep(
    max_label: int,
    which: tuple[str, ...] = ("theorem1", "theorem2"),
    rank: int = 3,
    *,
    workers: int = 1,
    sample: int = 0,
    seed: int = 0,
) -> SweepSummary:
    """SU(3): all pairs with labels ≤ max_label. SU(4): all pairs with total level ≤ max_label."""
    if max_label < 0:
        raise ValueError(f"sweep bound must be non-negative, got {max_label}")
    if rank not in (3, 4):
        raise RankError(f"sweeps run over SU(3) or SU(4), got SU({rank})")
    if rank == 4:
        return sweep_su4(max_label, which, workers=workers, sample=sample, seed=seed)
    return sweep_su3(max_label, which, workers=workers, sample=sample, seed=seed)
