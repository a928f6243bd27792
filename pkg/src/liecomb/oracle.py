"""Brute-force SU(N) tensor decomposition, N ∈ {2, 3, 4}, from weight multiplicities.

Nothing here uses the SU(3) closed forms: weight systems come from the Freudenthal
recursion, and products are split either by peeling off highest weights of the convolved
character or by the Klimyk (Racah–Speiser) reflection formula. Weights are Dynkin-label
tuples; intermediate weights may have negative entries.

The Killing form is kept integral by scaling it by N: ⟨ωᵢ, ωⱼ⟩ = min(i,j)·(N − max(i,j)).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

import numpy as np
from scipy.spatial import ConvexHull

from .config import SUPPORTED_ORACLE_RANKS
from .errors import OracleInconsistency, RankError
from .multiplicity import DecompositionTable
from .weights import Weight, conjugate, same_rank

logger = logging.getLogger(__name__)

Vec = tuple[int, ...]

# ---------------------------------------------------------------------------
# Root data for A_{N-1}
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cartan(n: int) -> tuple[Vec, ...]:
    """Rows are the simple roots in Dynkin coordinates."""
    r = n - 1
    return tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)) for i in range(r)
    )


@lru_cache(maxsize=None)
def _gram(n: int) -> tuple[Vec, ...]:
    r = n - 1
    return tuple(
        tuple(min(i, j) * (n - max(i, j)) for j in range(1, r + 1)) for i in range(1, r + 1)
    )


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[Vec, ...]:
    """αᵢ + … + αⱼ for i ≤ j, in Dynkin coordinates."""
    simple = _cartan(n)
    roots = []
    for i in range(n - 1):
        acc = [0] * (n - 1)
        for j in range(i, n - 1):
            acc = [x + y for x, y in zip(acc, simple[j], strict=True)]
            roots.append(tuple(acc))
    return tuple(roots)


def _dot(n: int, u: Vec, v: Vec) -> int:
    """N times the Killing form."""
    g = _gram(n)
    return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def _add(u: Vec, v: Vec, k: int = 1) -> Vec:
    return tuple(x + k * y for x, y in zip(u, v, strict=True))


def _check_rank(*weights: Weight) -> int:
    n = same_rank(*weights)
    if n not in SUPPORTED_ORACLE_RANKS:
        raise RankError(f"the oracle handles SU(N) for N in {SUPPORTED_ORACLE_RANKS}, got SU({n})")
    return n


def height(nu: Vec) -> int:
    """Σ i(N−i)·νᵢ; strictly increases along the dominance order."""
    n = len(nu) + 1
    return sum(i * (n - i) * x for i, x in enumerate(nu, start=1))


def weyl_dimension(lam: Weight) -> int:
    """Π over positive roots of ⟨λ+ρ, α⟩ / ⟨ρ, α⟩."""
    n = _check_rank(lam)
    rho = (1,) * (n - 1)
    shifted = _add(lam.labels, rho)
    num = prod(_dot(n, shifted, a) for a in _positive_roots(n))
    den = prod(_dot(n, rho, a) for a in _positive_roots(n))
    return num // den


# ---------------------------------------------------------------------------
# Weight systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSystem:
    """All weights of the irrep with highest weight ``highest`` and their multiplicities."""

    highest: Weight
    mults: dict[Vec, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.mults)

    def get(self, w: Vec) -> int:
        return self.mults.get(tuple(w), 0)

    def total(self) -> int:
        return sum(self.mults.values())

    def dominant(self) -> dict[Vec, int]:
        return {w: m for w, m in self.mults.items() if all(x >= 0 for x in w)}

    def to_json(self) -> dict:
        return {
            "highest": self.highest.to_json(),
            "weights": [{"weight": list(w), "mult": m} for w, m in sorted(self.mults.items())],
        }


@lru_cache(maxsize=4096)
def _freudenthal(labels: Vec) -> tuple[tuple[Vec, int], ...]:
    n = len(labels) + 1
    simple = _cartan(n)
    roots = _positive_roots(n)
    rho = (1,) * (n - 1)
    top = _add(labels, rho)
    top_norm = _dot(n, top, top)
    top_height = height(labels)

    mults: dict[Vec, int] = {labels: 1}
    layer = [labels]
    while layer:
        candidates = sorted({_add(w, a, -1) for w in layer for a in simple})
        layer = []
        for mu in candidates:
            if mu in mults:
                continue
            shifted = _add(mu, rho)
            den = top_norm - _dot(n, shifted, shifted)
            if den <= 0:
                continue
            num = 0
            for a in roots:
                k = 1
                up = _add(mu, a)
                while height(up) <= top_height:
                    num += mults.get(up, 0) * _dot(n, up, a)
                    k += 1
                    up = _add(mu, a, k)
            if (2 * num) % den:
                raise OracleInconsistency(f"non-integral Freudenthal quotient at {mu} in {labels}")
            m = 2 * num // den
            if m > 0:
                mults[mu] = m
                layer.append(mu)
    return tuple(sorted(mults.items()))


def weight_system(lam: Weight) -> WeightSystem:
    """Freudenthal recursion downward from λ; memoized per highest weight."""
    _check_rank(lam)
    return WeightSystem(lam, dict(_freudenthal(lam.labels)))


def cache_info() -> str:
    """Hit/miss counts of the weight-system memo in this process."""
    return str(_freudenthal.cache_info())


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def _klimyk(lam: Weight, mu: Weight) -> Counter:
    n = lam.rank
    simple = _cartan(n)
    rho = (1,) * (n - 1)
    # Reflect the weights of the smaller factor.
    if weyl_dimension(mu) > weyl_dimension(lam):
        lam, mu = mu, lam
    base = _add(lam.labels, rho)
    out: Counter = Counter()
    for w, m in weight_system(mu).mults.items():
        v = _add(base, w)
        sign = 1
        while True:
            if any(x == 0 for x in v):
                sign = 0
                break
            neg = next((i for i, x in enumerate(v) if x < 0), None)
            if neg is None:
                break
            v = _add(v, simple[neg], -v[neg])
            sign = -sign
        if sign:
            out[_add(v, rho, -1)] += sign * m
    return out


def _convolve(lam: Weight, mu: Weight) -> Counter:
    a = weight_system(lam).mults
    b = weight_system(mu).mults
    out: Counter = Counter()
    for w, m in a.items():
        for v, k in b.items():
            out[_add(w, v)] += m * k
    return out


def _peel(lam: Weight, mu: Weight) -> Counter:
    remaining = _convolve(lam, mu)
    found: Counter = Counter()
    while True:
        dominant = [w for w, m in remaining.items() if m and all(x >= 0 for x in w)]
        if not dominant:
            break
        top = max(dominant, key=lambda w: (height(w), w))
        c = remaining[top]
        if c < 0:
            raise OracleInconsistency(f"negative remainder {c} at {top} in {lam}⊗{mu}")
        found[top] = c
        for w, m in weight_system(Weight(top)).mults.items():
            remaining[w] -= c * m
            if remaining[w] < 0:
                raise OracleInconsistency(f"peel-off of {top} drove {w} negative in {lam}⊗{mu}")
    leftover = [w for w, m in remaining.items() if m]
    if leftover:
        raise OracleInconsistency(f"{len(leftover)} weights left after peel-off of {lam}⊗{mu}")
    return found


def decompose_oracle(lam: Weight, mu: Weight, method: str = "klimyk") -> DecompositionTable:
    """λ⊗μ for SU(2), SU(3) or SU(4); ``method`` is ``"klimyk"`` or ``"peel"``."""
    _check_rank(lam, mu)
    if method == "klimyk":
        raw = _klimyk(lam, mu)
    elif method == "peel":
        raw = _peel(lam, mu)
    else:
        raise ValueError(f"unknown oracle method {method!r}")
    negative = {w: m for w, m in raw.items() if m < 0}
    if negative:
        raise OracleInconsistency(f"negative multiplicities {negative} in {lam}⊗{mu}")
    entries = tuple((Weight(w), m) for w, m in raw.items() if m > 0)
    logger.debug("oracle %s⊗%s via %s: %d irreps", lam, mu, method, len(entries))
    return DecompositionTable(lam, mu, entries)


def mult_oracle(lam: Weight, mu: Weight, nu: Weight) -> int:
    return decompose_oracle(lam, mu).get(nu)


# ---------------------------------------------------------------------------
# The SU(4) polytope of (1,2,2)⊗(2,2,1)
# ---------------------------------------------------------------------------

SU4_POLYTOPE_PAIR: tuple[Vec, Vec] = ((1, 2, 2), (2, 2, 1))

SU4_POLYTOPE_VERTICES: tuple[Vec, ...] = (
    (0, 0, 0), (0, 0, 4), (4, 0, 0), (6, 1, 0),
    (0, 1, 6), (0, 6, 0), (2, 0, 6), (6, 0, 2),
    (4, 4, 0), (0, 4, 4), (5, 0, 5), (3, 4, 3),
    (1, 5, 3), (3, 5, 1), (1, 6, 1), (4, 2, 4),
)  # fmt: skip

SU4_POLYTOPE_SPECIAL: dict[Vec, int] = {(5, 0, 1): 2, (1, 0, 5): 2, (2, 0, 2): 5}

HULL_TOLERANCE: float = 1e-9


@dataclass
class PolytopeReport:
    vertex_mults: dict[Vec, int]
    special_mults: dict[Vec, int]
    special_on_plane: bool
    outside_hull: list[Vec]
    total: int
    total_conj: int

    @property
    def vertices_ok(self) -> bool:
        return all(m == 1 for m in self.vertex_mults.values())

    @property
    def special_ok(self) -> bool:
        return self.special_mults == SU4_POLYTOPE_SPECIAL

    @property
    def ok(self) -> bool:
        return (
            self.vertices_ok
            and self.special_ok
            and self.special_on_plane
            and not self.outside_hull
            and self.total == self.total_conj
        )

    def to_json(self) -> dict:
        return {
            "vertices": {",".join(map(str, v)): m for v, m in self.vertex_mults.items()},
            "special": {",".join(map(str, v)): m for v, m in self.special_mults.items()},
            "special_on_plane": self.special_on_plane,
            "outside_hull": [list(v) for v in self.outside_hull],
            "theorem1": {"total": self.total, "total_conj": self.total_conj},
            "ok": self.ok,
        }


def su4_polytope_check() -> PolytopeReport:
    lam, mu = (Weight(x) for x in SU4_POLYTOPE_PAIR)
    table = decompose_oracle(lam, mu).as_dict()
    hull = ConvexHull(np.array(SU4_POLYTOPE_VERTICES, dtype=float))
    normals, offsets = hull.equations[:, :-1], hull.equations[:, -1]
    outside = [
        nu.labels
        for nu in table
        if np.any(normals @ np.array(nu.labels, dtype=float) + offsets > HULL_TOLERANCE)
    ]
    conj_total = decompose_oracle(lam, conjugate(mu)).total()
    return PolytopeReport(
        vertex_mults={v: table.get(Weight(v), 0) for v in SU4_POLYTOPE_VERTICES},
        special_mults={v: table.get(Weight(v), 0) for v in SU4_POLYTOPE_SPECIAL},
        special_on_plane=all(v[1] == 0 for v in SU4_POLYTOPE_SPECIAL),
        outside_hull=sorted(outside),
        total=sum(table.values()),
        total_conj=conj_total,
    )
