"""Piecewise-linear bijection between the honeycomb points of λ⊗μ and of λ⊗μ̄.

A point is a pair (ν, α) with α in the α-interval of ν. In the frame where λ₁ is the
largest label, a point of multiplicity index m is translated by (μ₂−μ₁)(1,−1) when it sits
above either of two m-dependent thresholds, and reflected by :func:`t1` otherwise. The
image keeps its multiplicity index.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .config import CASE_LABELS
from .errors import InvalidPoint, OracleInconsistency
from .honeycomb import alpha_bounds, within_wesslen
from .multiplicity import decompose
from .polygon import Normalization, Point, normalize
from .weights import Weight, conjugate, require_rank

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MappedPoint:
    nu: Point
    alpha: int
    m: int
    nu_image: Point
    alpha_image: int
    m_image: int
    regime: str
    case: int

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "alpha": self.alpha,
            "m": self.m,
            "nu_image": list(self.nu_image),
            "alpha_image": self.alpha_image,
            "m_image": self.m_image,
            "regime": self.regime,
            "case": CASE_LABELS[self.case],
        }


@dataclass
class BijectionReport:
    """Outcome of mapping every point of λ⊗μ; failures are listed, never raised."""

    lam: Weight
    mu: Weight
    case: int
    swapped: bool
    conjugated: bool
    points: int = 0
    targets: int = 0
    regimes: Counter = field(default_factory=Counter)
    collisions: list[tuple[Point, int]] = field(default_factory=list)
    missing: list[tuple[Point, int]] = field(default_factory=list)
    outside: list[tuple[Point, int]] = field(default_factory=list)
    index_changes: list[tuple[Point, int]] = field(default_factory=list)
    triality_errors: list[Point] = field(default_factory=list)
    wesslen_errors: list[Point] = field(default_factory=list)
    multisets_equal: bool = True
    split_weights: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.points == self.targets
            and not self.collisions
            and not self.missing
            and not self.outside
            and not self.index_changes
            and not self.triality_errors
            and not self.wesslen_errors
            and self.multisets_equal
        )

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "case": CASE_LABELS[self.case],
            "normalization": {"swapped": self.swapped, "conjugated": self.conjugated},
            "points": self.points,
            "targets": self.targets,
            "regimes": dict(sorted(self.regimes.items())),
            "split_weights": self.split_weights,
            "collisions": [[list(nu), a] for nu, a in self.collisions],
            "missing": [[list(nu), a] for nu, a in self.missing],
            "outside": [[list(nu), a] for nu, a in self.outside],
            "multisets_equal": self.multisets_equal,
            "ok": self.ok,
        }


# ---------------------------------------------------------------------------
# Pieces of the map
# ---------------------------------------------------------------------------


def _classify_normalized(lam: Weight, mu: Weight) -> int:
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    if l1 >= m1 + m2:
        return 1
    if m1 + m2 - l2 <= l1:
        return 2
    return 3


def classify(lam: Weight, mu: Weight) -> int:
    """Which of the three regimes (1, 2, 3) the pair falls into once λ₁ is maximal."""
    norm = normalize(lam, mu)
    return _classify_normalized(norm.lam, norm.mu)


def t1(lam: Weight, nu: Point) -> Point:
    """Reflection (ν₁, ν₂) ↦ (2λ₁+λ₂−ν₁−ν₂, ν₂); an involution."""
    require_rank(3, lam)
    return (2 * lam[0] + lam[1] - nu[0] - nu[1], nu[1])


def _translates(lam: Weight, mu: Weight, nu: Point, m: int) -> bool:
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    return (
        2 * nu[0] + nu[1] > 5 * l1 + 4 * l2 - m1 - 2 * m2 - 3 * (m - 1)
        or nu[0] + nu[1] > 2 * l1 + l2 - (m - 1)
    )


def _map_normalized(lam: Weight, mu: Weight, nu: Point, m: int) -> tuple[Point, str]:
    if _translates(lam, mu, nu, m):
        shift = mu[1] - mu[0]
        return (nu[0] + shift, nu[1] - shift), "translation"
    return t1(lam, nu), "reflection"


def _image(norm: Normalization, nu: Point, m: int) -> tuple[Point, str]:
    """Map ν (caller frame) to ν′ (caller frame of λ⊗μ̄)."""
    nu_n = (nu[1], nu[0]) if norm.conjugated else nu
    image, regime = _map_normalized(norm.lam, norm.mu, nu_n, m)
    if norm.swapped != norm.conjugated:
        image = (image[1], image[0])
    return image, regime


def _triality(nu: Point) -> int:
    return (nu[0] + 2 * nu[1]) % 3


def map_point(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> MappedPoint:
    """Send a valid (ν, α) of λ⊗μ to the matching (ν′, α′) of λ⊗μ̄."""
    require_rank(3, lam, mu, nu)
    interval = alpha_bounds(lam, mu, nu)
    if alpha not in interval:
        raise InvalidPoint(f"(ν={nu}, α={alpha}) is not a honeycomb point of {lam}⊗{mu}")
    m = alpha - interval.lo + 1
    norm = normalize(lam, mu)
    case = _classify_normalized(norm.lam, norm.mu)
    image, regime = _image(norm, tuple(nu.labels), m)

    mu_bar = conjugate(mu)
    if min(image) < 0 or not within_wesslen(lam, mu_bar, Weight(image)):
        raise OracleInconsistency(f"image {image} of {nu} lies outside {lam}⊗{mu_bar}")
    target = alpha_bounds(lam, mu_bar, Weight(image))
    if m > len(target):
        raise OracleInconsistency(
            f"image {image} of ({nu}, m={m}) has only multiplicity {len(target)} in {lam}⊗{mu_bar}"
        )
    return MappedPoint(
        nu=tuple(nu.labels),
        alpha=alpha,
        m=m,
        nu_image=image,
        alpha_image=target.lo + m - 1,
        m_image=m,
        regime=regime,
        case=case,
    )


def map_all(lam: Weight, mu: Weight) -> list[MappedPoint]:
    """Every point of λ⊗μ mapped, ordered by (ν, α)."""
    out = []
    for nu, _ in decompose(lam, mu).entries:
        for alpha in alpha_bounds(lam, mu, nu):
            out.append(map_point(lam, mu, nu, alpha))
    return out


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_bijection(lam: Weight, mu: Weight) -> BijectionReport:
    """Map every (ν, α) of λ⊗μ and compare the image with the points of λ⊗μ̄."""
    require_rank(3, lam, mu)
    norm = normalize(lam, mu)
    mu_bar = conjugate(mu)
    report = BijectionReport(
        lam=lam,
        mu=mu,
        case=_classify_normalized(norm.lam, norm.mu),
        swapped=norm.swapped,
        conjugated=norm.conjugated,
    )
    logger.debug(
        "bijection %s⊗%s: case %d, swapped=%s conjugated=%s",
        lam,
        mu,
        report.case,
        norm.swapped,
        norm.conjugated,
    )

    source = decompose(lam, mu)
    target = decompose(lam, mu_bar).as_dict()
    report.targets = sum(target.values())
    report.multisets_equal = source.multiplicities() == sorted(target.values())
    tau = (lam[0] + 2 * lam[1] + mu_bar[0] + 2 * mu_bar[1]) % 3

    seen: dict[tuple[Point, int], Point] = {}
    for nu, k in source.entries:
        images = set()
        for m in range(1, k + 1):
            report.points += 1
            image, regime = _image(norm, tuple(nu.labels), m)
            report.regimes[regime] += 1
            images.add(image)
            if _triality(image) != tau:
                report.triality_errors.append(image)
            if min(image) < 0 or not within_wesslen(lam, mu_bar, Weight(image)):
                report.wesslen_errors.append(image)
                continue
            if m > target.get(Weight(image), 0):
                # The image exists only if its multiplicity reaches index m.
                report.outside.append((image, m))
                continue
            key = (image, m)
            if key in seen:
                report.collisions.append(key)
            seen[key] = tuple(nu.labels)
        if len(images) > 1:
            report.split_weights += 1

    for nu, k in target.items():
        for m in range(1, k + 1):
            if (tuple(nu.labels), m) not in seen:
                report.missing.append((tuple(nu.labels), m))

    logger.debug("bijection %s⊗%s: %d points, ok=%s", lam, mu, report.points, report.ok)
    return report
