"""Dominant SU(N) weights in Dynkin labels: triality, conjugation, ε-pairings, GL(3) partitions.

Everything here is integer-valued. The ε-pairings are rational with denominator 3, so they
are stored scaled by 3 and only turned into :class:`~fractions.Fraction` at the accessor.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_RANK
from .errors import InvalidWeight, NotInProduct, RankError

# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Weight:
    """An SU(N) highest weight, N = len(labels) + 1."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        labels = tuple(int(x) for x in self.labels)
        if not labels:
            raise InvalidWeight("a weight needs at least one Dynkin label")
        if any(x < 0 for x in labels):
            raise InvalidWeight(f"Dynkin labels must be non-negative, got {list(labels)}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, *labels: int) -> Weight:
        return cls(tuple(labels))

    @property
    def rank(self) -> int:
        return len(self.labels) + 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __getitem__(self, i: int) -> int:
        return self.labels[i]

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.labels) + ")"

    def to_json(self) -> list[int]:
        return list(self.labels)


@dataclass(frozen=True)
class GlPartition:
    """A GL(3) highest weight in brace notation, weakly decreasing, entries may be negative."""

    parts: tuple[int, int, int]

    def __post_init__(self) -> None:
        p = tuple(int(x) for x in self.parts)
        if len(p) != 3:
            raise InvalidWeight(f"GL(3) partitions have three parts, got {list(p)}")
        if not p[0] >= p[1] >= p[2]:
            raise InvalidWeight(f"GL(3) partition must be weakly decreasing, got {list(p)}")
        object.__setattr__(self, "parts", p)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.parts) + "}"

    def to_json(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True)
class EpsWeight:
    """The pairings (ε₁·λ, ε₂·λ, ε₃·λ), each multiplied by 3."""

    scaled: tuple[int, int, int]

    def __getitem__(self, i: int) -> Fraction:
        """1-based access to the exact pairing εᵢ·λ."""
        return Fraction(self.scaled[i - 1], 3)

    def as_fractions(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self[1], self[2], self[3])


# ---------------------------------------------------------------------------
# Parsing and validation
# ---------------------------------------------------------------------------


def parse_weight(text: str, rank: int = DEFAULT_RANK) -> Weight:
    """Parse ``"9,5"`` into a weight of the given rank."""
    parts = [p.strip() for p in text.replace(" ", "").split(",") if p.strip()]
    try:
        labels = tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidWeight(f"not a comma-separated list of integers: {text!r}") from None
    if len(labels) != rank - 1:
        raise InvalidWeight(f"SU({rank}) weights have {rank - 1} labels, got {text!r}")
    return Weight(labels)


def require_rank(rank: int, *weights: Weight) -> None:
    """Raise :class:`RankError` unless every weight has the given rank."""
    for w in weights:
        if w.rank != rank:
            raise RankError(f"expected an SU({rank}) weight, got {w} of SU({w.rank})")


def same_rank(*weights: Weight) -> int:
    """Return the common rank of the weights, or raise :class:`RankError`."""
    ranks = {w.rank for w in weights}
    if len(ranks) != 1:
        raise RankError(f"weights of different ranks: {', '.join(str(w) for w in weights)}")
    return ranks.pop()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def level(lam: Weight) -> int:
    return sum(lam.labels)


def triality(lam: Weight) -> int:
    """τ(λ) = λ₁ + 2λ₂ mod 3."""
    require_rank(3, lam)
    return (lam[0] + 2 * lam[1]) % 3


def conjugate(lam: Weight) -> Weight:
    """Highest weight of the conjugate representation (label reversal)."""
    return Weight(tuple(reversed(lam.labels)))


def eps_pairings(lam: Weight) -> EpsWeight:
    require_rank(3, lam)
    a, b = lam.labels
    return EpsWeight((2 * a + b, b - a, -a - 2 * b))


def eps_dot(i: int, lam: Weight) -> Fraction:
    """εᵢ·λ for i ∈ {1, 2, 3}, an exact third."""
    if i not in (1, 2, 3):
        raise ValueError(f"ε index must be 1, 2 or 3, got {i}")
    return eps_pairings(lam)[i]


def to_gl3(lam: Weight, lam3: int = 0) -> GlPartition:
    """{λ₁+λ₂+λ₃, λ₂+λ₃, λ₃}; λ₃ = 0 is the SU(3) embedding."""
    require_rank(3, lam)
    a, b = lam.labels
    return GlPartition((a + b + lam3, b + lam3, lam3))


def from_gl3(part: GlPartition) -> tuple[Weight, int]:
    """Inverse of :func:`to_gl3`: the Dynkin labels and the λ₃ shift."""
    p1, p2, p3 = part.parts
    return Weight((p1 - p2, p2 - p3)), p3


def dual_partition(nu: Weight, nu3: int) -> GlPartition:
    """ν* = {−ν₃, −ν₂−ν₃, −ν₁−ν₂−ν₃}, the bottom boundary of a KT honeycomb."""
    require_rank(3, nu)
    n1, n2 = nu.labels
    return GlPartition((-nu3, -n2 - nu3, -n1 - n2 - nu3))


def triality_conserved(lam: Weight, mu: Weight, nu: Weight) -> bool:
    return (triality(lam) + triality(mu) - triality(nu)) % 3 == 0


def nu3(lam: Weight, mu: Weight, nu: Weight) -> int:
    """ν₃ = ⅓(λ₁+2λ₂+μ₁+2μ₂−ν₁−2ν₂), the U(1) charge balance of a honeycomb."""
    require_rank(3, lam, mu, nu)
    charge = lam[0] + 2 * lam[1] + mu[0] + 2 * mu[1] - nu[0] - 2 * nu[1]
    if charge % 3:
        raise NotInProduct(f"triality is not conserved in {lam}⊗{mu} → {nu}")
    return charge // 3


def dim(lam: Weight) -> int:
    """Weyl dimension of the SU(N) irrep with highest weight λ."""
    n = lam.rank
    num = 1
    den = 1
    for i in range(n - 1):
        for j in range(i + 1, n):
            num *= sum(lam.labels[i:j]) + (j - i)
            den *= j - i
    return num // den


def weyl_dimension_su3(a: int, b: int) -> int:
    """(a+1)(b+1)(a+b+2)/2; kept separate as an independent check of :func:`dim`."""
    return math.prod((a + 1, b + 1, a + b + 2)) // 2
