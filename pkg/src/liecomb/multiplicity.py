"""Closed-form SU(3) tensor-product multiplicities and multiplicity censuses.

Three independent routes to N_{λμ}^ν live here:

* :func:`mult` — the S₃-symmetric ``max(0, 1 + min(18 arguments))`` formula, twelve of whose
  arguments are thirds; they are compared after scaling everything by 3.
* :func:`mult_eps` — the same count phrased with ε-pairings of (λ, μ, ν̄).
* :func:`mult_reduced` — reduce to the S₁ = S₂ case by shifting three labels, then take
  ``1 + min`` of nine integers.
* :func:`census` — counts of distinct irreps per multiplicity, without decomposing.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .parallel import pmap
from .weights import Weight, conjugate, dim, eps_pairings, require_rank, triality_conserved

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Result types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionTable:
    """The constituents ν of λ⊗μ with their multiplicities, sorted by ν."""

    lam: Weight
    mu: Weight
    entries: tuple[tuple[Weight, int], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def get(self, nu: Weight) -> int:
        return self.as_dict().get(nu, 0)

    def multiplicities(self) -> list[int]:
        """Sorted multiplicity list, the multiset compared by Theorem 2."""
        return sorted(m for _, m in self.entries)

    def histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(m for _, m in self.entries).items()))

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def sum_of_squares(self) -> int:
        return sum(m * m for _, m in self.entries)

    def dimension(self) -> int:
        return sum(m * dim(nu) for nu, m in self.entries)

    def max_mult(self) -> int:
        return max((m for _, m in self.entries), default=0)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "entries": [{"nu": nu.to_json(), "mult": m} for nu, m in self.entries],
        }


@dataclass(frozen=True)
class MultiplicityCensus:
    """σ(s) for s = 1..mult_max, plus M and the total multiplicity."""

    by_mult: dict[int, int]
    distinct: int
    mult_max: int

    @property
    def total(self) -> int:
        return sum(s * n for s, n in self.by_mult.items())

    def sigma(self) -> tuple[int, ...]:
        return tuple(self.by_mult[s] for s in range(1, self.mult_max + 1))

    def to_json(self) -> dict:
        return {
            "sigma": {str(s): n for s, n in sorted(self.by_mult.items())},
            "M": self.distinct,
            "max": self.mult_max,
            "total": self.total,
        }


@dataclass(frozen=True)
class Theorem1Report:
    """Totals (and sums of squares) of λ⊗μ against λ⊗μ̄."""

    total: int
    total_conj: int
    squares: int
    squares_conj: int

    @property
    def equal(self) -> bool:
        return self.total == self.total_conj and self.squares == self.squares_conj

    def to_json(self) -> dict:
        return {
            "total": self.total,
            "total_conj": self.total_conj,
            "squares": self.squares,
            "squares_conj": self.squares_conj,
            "equal": self.equal,
        }


@dataclass(frozen=True)
class Theorem2Report:
    """Sorted multiplicity lists of λ⊗μ and λ⊗μ̄."""

    multiset: tuple[int, ...]
    multiset_conj: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.multiset == self.multiset_conj

    def to_json(self) -> dict:
        return {
            "multiset": dict(sorted(Counter(self.multiset).items())),
            "multiset_conj": dict(sorted(Counter(self.multiset_conj).items())),
            "equal": self.equal,
        }


# ---------------------------------------------------------------------------
# Single multiplicities
# ---------------------------------------------------------------------------


def _scaled_arguments(lam: Weight, mu: Weight, nu: Weight) -> list[int]:
    """The 18 min-arguments of the symmetric formula, each multiplied by 3."""
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    n1, n2 = nu.labels
    labels = [3 * x for x in (l1, l2, m1, m2, n1, n2)]
    thirds = [
        2 * l1 + l2 + 2 * m1 + m2 - 2 * n1 - n2,
        l1 - l2 + m1 + 2 * m2 - n1 + n2,
        l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2,
        2 * l1 + l2 - m1 + m2 + n1 - n2,
        l1 + 2 * l2 + m1 - m2 - n1 + n2,
        2 * l1 + l2 - m1 - 2 * m2 + n1 + 2 * n2,
        l1 + 2 * l2 - 2 * m1 - m2 + 2 * n1 + n2,
        -l1 + l2 - m1 + m2 + n1 + 2 * n2,
        l1 - l2 + m1 - m2 + 2 * n1 + n2,
        -l1 - 2 * l2 + 2 * m1 + m2 + n1 + 2 * n2,
        -l1 + l2 + 2 * m1 + m2 + n1 - n2,
        -2 * l1 - l2 + m1 + 2 * m2 + 2 * n1 + n2,
    ]
    return labels + thirds


def mult(lam: Weight, mu: Weight, nu: Weight) -> int:
    """N_{λμ}^ν from the S₃-symmetric 18-argument formula; 0 when triality fails."""
    require_rank(3, lam, mu, nu)
    if not triality_conserved(lam, mu, nu):
        return 0
    # With triality conserved every scaled argument is a multiple of 3.
    return max(0, 1 + min(_scaled_arguments(lam, mu, nu)) // 3)


def mult_reduced(lam: Weight, mu: Weight, nu: Weight) -> int:
    """N_{λμ}^ν via the S₁/S₂ reduction to the balanced case."""
    require_rank(3, lam, mu, nu)
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    n1, n2 = nu.labels
    s1 = l1 + m1 + n2
    s2 = l2 + m2 + n1
    if (s1 - s2) % 3:
        return 0
    s = abs(s1 - s2) // 3
    if s1 > s2:
        l1, m1, n2 = l1 - s, m1 - s, n2 - s
    else:
        l2, m2, n1 = l2 - s, m2 - s, n1 - s
    total = l1 + m1 + n2
    big_l = total - (l1 + l2)
    big_m = total - (m1 + m2)
    big_n = total - (n1 + n2)
    return max(0, 1 + min(l1, l2, m1, m2, n1, n2, big_l, big_m, big_n))


def _eps_terms(w: Weight, rest: tuple[int, int]) -> list[int]:
    e1, e2, e3 = eps_pairings(w).scaled
    s1, s2, s3 = eps_pairings(Weight(rest)).scaled
    return [e1 + s2, e3 + s1, -e1 - s3, -e3 - s2]


def mult_eps(lam: Weight, mu: Weight, nu: Weight) -> int:
    """N_{λμ}^ν written through ε-pairings of the invariant triple (λ, μ, ν̄)."""
    require_rank(3, lam, mu, nu)
    if not triality_conserved(lam, mu, nu):
        return 0
    triple = (lam, mu, conjugate(nu))
    args = [3 * x for w in triple for x in (*w.labels, sum(w.labels))]
    for i, w in enumerate(triple):
        others = [triple[j] for j in range(3) if j != i]
        rest = (others[0][0] + others[1][0], others[0][1] + others[1][1])
        args.extend(_eps_terms(w, rest))
    return max(0, 1 + min(args) // 3)


def mult_max(lam: Weight, mu: Weight) -> int:
    """Largest multiplicity occurring in λ⊗μ."""
    require_rank(3, lam, mu)
    return min(*lam.labels, *mu.labels) + 1


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


def _ordered(lam: Weight, mu: Weight) -> tuple[Weight, Weight]:
    """Swap so that max(λ) ≥ max(μ); λ⊗μ ≅ μ⊗λ so nothing else changes."""
    if max(lam.labels) >= max(mu.labels):
        return lam, mu
    return mu, lam


def _n(lam: Weight, mu: Weight, ell: int) -> int:
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    if ell >= 0:
        return min(l1 - ell, m2) + min(m1 - ell, l2)
    return min(l1, m2 + ell) + min(m1, l2 + ell)


def distinct_count(lam: Weight, mu: Weight) -> int:
    """M, the number of inequivalent irreps in λ⊗μ."""
    require_rank(3, lam, mu)
    lam, mu = _ordered(lam, mu)
    lo = -min(lam[1], mu[1])
    hi = min(lam[0], mu[0])
    return sum(_n(lam, mu, ell) + 1 for ell in range(lo, hi + 1))


def _sigma_below_max(lam: Weight, mu: Weight, s: int) -> int:
    dl1, dl2 = (x - (s - 1) for x in lam.labels)
    dm1, dm2 = (x - (s - 1) for x in mu.labels)
    dm = dm1 + dm2
    return min(dl1, dm) + min(dl2, dm) + dm


def census(lam: Weight, mu: Weight) -> MultiplicityCensus:
    """σ(λ,μ;s) for every s; the top multiplicity is M minus the others."""
    require_rank(3, lam, mu)
    lam, mu = _ordered(lam, mu)
    top = mult_max(lam, mu)
    distinct = distinct_count(lam, mu)
    by_mult = {s: _sigma_below_max(lam, mu, s) for s in range(1, top)}
    by_mult[top] = distinct - sum(by_mult.values())
    return MultiplicityCensus(by_mult=by_mult, distinct=distinct, mult_max=top)


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def _row(task: tuple[tuple[int, int], tuple[int, int], int]) -> list[tuple[Weight, int]]:
    lam_labels, mu_labels, n1 = task
    lam, mu = Weight(lam_labels), Weight(mu_labels)
    bound = sum(lam_labels) + sum(mu_labels)
    row: list[tuple[Weight, int]] = []
    for n2 in range(bound - n1 + 1):
        nu = Weight((n1, n2))
        m = mult(lam, mu, nu)
        if m:
            row.append((nu, m))
    return row


def decompose(lam: Weight, mu: Weight, workers: int = 1) -> DecompositionTable:
    """All ν with N_{λμ}^ν > 0.

    ν ranges over the box ν₁ + ν₂ ≤ level(λ) + level(μ); rows of constant ν₁ are
    independent and may be spread over ``workers`` processes.
    """
    require_rank(3, lam, mu)
    bound = sum(lam.labels) + sum(mu.labels)
    tasks = [(lam.labels, mu.labels, n1) for n1 in range(bound + 1)]
    rows = pmap(_row, tasks, workers=workers)
    return DecompositionTable(lam, mu, tuple(e for row in rows for e in row))


def verify_theorem1(lam: Weight, mu: Weight) -> Theorem1Report:
    """Compare total multiplicities and sums of squares of λ⊗μ and λ⊗μ̄."""
    a = decompose(lam, mu)
    b = decompose(lam, conjugate(mu))
    return Theorem1Report(a.total(), b.total(), a.sum_of_squares(), b.sum_of_squares())


def verify_theorem2(lam: Weight, mu: Weight) -> Theorem2Report:
    """Compare the sorted multiplicity lists of λ⊗μ and λ⊗μ̄."""
    a = decompose(lam, mu)
    b = decompose(lam, conjugate(mu))
    return Theorem2Report(tuple(a.multiplicities()), tuple(b.multiplicities()))
