"""SU(3) KT-honeycombs, their dual hives, and the inequality systems that bound them.

For fixed (λ, μ, ν) an SU(3) honeycomb has a single free parameter α. Vertices are
numbered top to bottom:

    V0             top vertex, carries the μ₁+μ₂ and 0 boundary edges
    V1             top of the hexagon
    V2  V3         upper-left / upper-right of the hexagon
    V4  V5         lower-left / lower-right of the hexagon
    V6  V7  V8     bottom-left / bottom-middle / bottom-right

Inner edges e1..e9 are listed in the reading order top to bottom, left to right; that
order is also the order of the (a,b,c,d,e,f;g) edge dictionary in :mod:`liecomb.pictographs`.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from .errors import InequalityViolation, InvalidPoint, NotInProduct
from .multiplicity import mult
from .weights import GlPartition, Weight, dual_partition, nu3, require_rank, to_gl3

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Symbolic tables
# ---------------------------------------------------------------------------

# Coefficient order for every affine form in this module.
SYMBOLS: tuple[str, ...] = ("l1", "l2", "m1", "m2", "n1", "n2", "n3", "alpha", "1")

# (name, endpoints, coefficients over SYMBOLS); Σ = n1 + n2 + n3 is expanded.
EDGE_TABLE: list[tuple[str, tuple[str, str], tuple[int, ...]]] = [
    ("e1", ("V0", "V1"), (0, 0, -1, -1, 0, 0, 0, 0, 0)),
    ("e2", ("V1", "V2"), (-1, -2, 0, 0, 0, 0, 0, 1, 0)),
    ("e3", ("V1", "V3"), (1, 2, 1, 1, 0, 0, 0, -1, 0)),
    ("e4", ("V2", "V4"), (1, 1, 0, 0, 0, 0, 0, -1, 0)),
    ("e5", ("V3", "V5"), (-1, -2, -1, -2, 0, 0, 0, 1, 0)),
    ("e6", ("V4", "V6"), (-1, -1, 0, 0, 1, 1, 1, 0, 0)),
    ("e7", ("V4", "V7"), (0, 0, 0, 0, -1, -1, -1, 1, 0)),
    ("e8", ("V5", "V7"), (0, 0, 0, 0, 1, 2, 2, -1, 0)),
    ("e9", ("V5", "V8"), (0, 0, 0, 0, 0, 0, 1, 0, 0)),
]

# Outer edges, listed clockwise starting at the lower-left λ₁+λ₂ edge.
BOUNDARY_TABLE: list[tuple[str, tuple[int, ...]]] = [
    ("V6", (1, 1, 0, 0, 0, 0, 0, 0, 0)),
    ("V2", (0, 1, 0, 0, 0, 0, 0, 0, 0)),
    ("V0", (0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("V0", (0, 0, 1, 1, 0, 0, 0, 0, 0)),
    ("V3", (0, 0, 0, 1, 0, 0, 0, 0, 0)),
    ("V8", (0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ("V8", (0, 0, 0, 0, 0, 0, -1, 0, 0)),
    ("V7", (0, 0, 0, 0, 0, -1, -1, 0, 0)),
    ("V6", (0, 0, 0, 0, -1, -1, -1, 0, 0)),
]

VERTICES: tuple[str, ...] = ("V0", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8")

# The nine edge-orientation inequalities, grouped in rows by the direction of the short
# diagonal of the matching hive rhombus: row 1 "-", row 2 "\", row 3 "/".
# (row, position, sense, bound) meaning alpha >= bound or alpha <= bound.
INEQUALITY_TABLE: list[tuple[int, int, str, tuple[int, ...]]] = [
    (1, 1, ">=", (0, 1, 0, 0, 1, 1, 1, 0, 0)),
    (1, 2, "<=", (1, 2, 1, 1, 0, 0, 0, 0, 0)),
    (1, 3, ">=", (0, 0, 0, -1, 1, 2, 2, 0, 0)),
    (2, 1, ">=", (0, 0, 0, 0, 1, 1, 2, 0, 0)),
    (2, 2, "<=", (1, 1, 0, 0, 1, 1, 1, 0, 0)),
    (2, 3, ">=", (1, 1, 1, 1, 0, 0, 0, 0, 0)),
    (3, 1, "<=", (1, 2, 1, 2, 0, 0, -1, 0, 0)),
    (3, 2, ">=", (1, 2, 0, 1, 0, 0, 0, 0, 0)),
    (3, 3, ">=", (1, 1, 0, 0, 0, 1, 1, 0, 0)),
]

# Hive vertices are (row, column) with row 0 at the top apex; row r holds r+1 vertices.
# (row, position, orientation, obtuse corners, acute corners)
Corners = tuple[tuple[int, int], ...]
RHOMBUS_TABLE: list[tuple[int, int, str, Corners, Corners]] = [
    (1, 1, "-", ((2, 0), (2, 1)), ((1, 0), (3, 1))),
    (1, 2, "-", ((1, 0), (1, 1)), ((0, 0), (2, 1))),
    (1, 3, "-", ((2, 1), (2, 2)), ((1, 1), (3, 2))),
    (2, 1, "\\", ((2, 1), (3, 2)), ((3, 1), (2, 2))),
    (2, 2, "\\", ((2, 0), (3, 1)), ((3, 0), (2, 1))),
    (2, 3, "\\", ((1, 0), (2, 1)), ((2, 0), (1, 1))),
    (3, 1, "/", ((2, 2), (3, 2)), ((2, 1), (3, 3))),
    (3, 2, "/", ((1, 1), (2, 1)), ((1, 0), (2, 2))),
    (3, 3, "/", ((2, 1), (3, 1)), ((2, 0), (3, 2))),
]


def _values(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> tuple[int, ...]:
    """Values of SYMBOLS; raises NotInProduct when ν₃ is not an integer."""
    return (*lam.labels, *mu.labels, *nu.labels, nu3(lam, mu, nu), alpha, 1)


def evaluate(coeffs: tuple[int, ...], values: tuple[int, ...]) -> int:
    return sum(c * v for c, v in zip(coeffs, values, strict=True))


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlphaInterval:
    """Integer interval [lo, hi] of admissible hive parameters; empty when lo > hi."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    @property
    def width(self) -> int:
        return self.hi - self.lo

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, alpha: object) -> bool:
        return isinstance(alpha, int) and self.lo <= alpha <= self.hi

    def to_json(self) -> dict:
        return {"alpha_min": self.lo, "alpha_max": self.hi, "count": len(self)}


@dataclass(frozen=True)
class Honeycomb:
    """An SU(3) KT-honeycomb. Use :func:`build` to get a validated one."""

    lam: Weight
    mu: Weight
    nu: Weight
    alpha: int

    @property
    def nu3(self) -> int:
        return nu3(self.lam, self.mu, self.nu)

    @property
    def sigma(self) -> int:
        return sum(self.nu.labels) + self.nu3

    def _values(self) -> tuple[int, ...]:
        return _values(self.lam, self.mu, self.nu, self.alpha)

    @property
    def edges(self) -> dict[str, int]:
        vals = self._values()
        return {name: evaluate(coeffs, vals) for name, _, coeffs in EDGE_TABLE}

    def boundary(self) -> list[int]:
        """Clockwise outer labels (λ₁+λ₂, λ₂, 0, μ₁+μ₂, μ₂, 0, −ν₃, −ν₂−ν₃, −Σ)."""
        vals = self._values()
        return [evaluate(coeffs, vals) for _, coeffs in BOUNDARY_TABLE]

    def vertex_sums(self) -> dict[str, int]:
        """Sum of the three labels at each vertex; all zero for a honeycomb."""
        vals = self._values()
        sums = dict.fromkeys(VERTICES, 0)
        for _, (a, b), coeffs in EDGE_TABLE:
            value = evaluate(coeffs, vals)
            sums[a] += value
            sums[b] += value
        for vertex, coeffs in BOUNDARY_TABLE:
            sums[vertex] += evaluate(coeffs, vals)
        return sums

    def gl_externals(self) -> tuple[GlPartition, GlPartition, GlPartition]:
        """The GL(3) partitions λ, μ and ν* carried by the three sides."""
        return to_gl3(self.lam), to_gl3(self.mu), dual_partition(self.nu, self.nu3)

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
            "alpha": self.alpha,
            "nu3": self.nu3,
            "edges": self.edges,
            "boundary": self.boundary(),
        }


@dataclass(frozen=True)
class Hive:
    """Ten integers on the size-3 triangular grid; rows[r] has r+1 entries, apex first."""

    rows: tuple[tuple[int, ...], ...]

    def vertex(self, r: int, c: int) -> int:
        return self.rows[r][c]

    @property
    def interior(self) -> int:
        return self.rows[2][1]

    def boundary(self) -> list[int]:
        """Clockwise from the lower-left corner back to it (ten values, first ≡ last)."""
        v = self.vertex
        return [
            v(3, 0), v(2, 0), v(1, 0), v(0, 0),
            v(1, 1), v(2, 2), v(3, 3),
            v(3, 2), v(3, 1), v(3, 0),
        ]  # fmt: skip

    def rhombi(self) -> list[tuple[int, int, str, int, int]]:
        """(row, position, orientation, obtuse sum, acute sum) for the nine rhombi."""
        out = []
        for row, pos, orient, obtuse, acute in RHOMBUS_TABLE:
            big = sum(self.vertex(r, c) for r, c in obtuse)
            small = sum(self.vertex(r, c) for r, c in acute)
            out.append((row, pos, orient, big, small))
        return out

    def check_rhombi(self) -> list[bool]:
        """Rhombus inequalities, in the same (row, position) order as the α inequalities."""
        return [big >= small for _, _, _, big, small in self.rhombi()]

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "boundary": self.boundary()}


# ---------------------------------------------------------------------------
# Inequalities and α bounds
# ---------------------------------------------------------------------------


def alpha_limits(lam: Weight, mu: Weight, nu: Weight) -> tuple[list[int], list[int]]:
    """The six lower and three upper bounds on α, in table order."""
    vals = _values(lam, mu, nu, 0)
    lower = [evaluate(b, vals) for _, _, sense, b in INEQUALITY_TABLE if sense == ">="]
    upper = [evaluate(b, vals) for _, _, sense, b in INEQUALITY_TABLE if sense == "<="]
    return lower, upper


def check_inequalities(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> list[bool]:
    """Evaluate the nine inequalities; all False when triality is not conserved."""
    require_rank(3, lam, mu, nu)
    try:
        vals = _values(lam, mu, nu, alpha)
    except NotInProduct:
        return [False] * len(INEQUALITY_TABLE)
    out = []
    for _, _, sense, bound in INEQUALITY_TABLE:
        b = evaluate(bound, vals)
        out.append(alpha >= b if sense == ">=" else alpha <= b)
    return out


def consistency_relations(lam: Weight, mu: Weight, nu: Weight) -> list[bool]:
    """The 18 relations a_i ≤ b_j between lower and upper α bounds; all hold iff mult > 0."""
    require_rank(3, lam, mu, nu)
    try:
        lower, upper = alpha_limits(lam, mu, nu)
    except NotInProduct:
        return [False] * 18
    return [a <= b for a in lower for b in upper]


def alpha_bounds(lam: Weight, mu: Weight, nu: Weight) -> AlphaInterval:
    """[α_min, α_max] with α_max − α_min = mult − 1; empty when ν ∉ λ⊗μ."""
    require_rank(3, lam, mu, nu)
    try:
        _, upper = alpha_limits(lam, mu, nu)
    except NotInProduct:
        return AlphaInterval(1, 0)
    hi = min(upper)
    return AlphaInterval(hi - mult(lam, mu, nu) + 1, hi)


def count_by_alpha(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Number of integer α passing all nine inequalities, found by direct scan."""
    require_rank(3, lam, mu, nu)
    try:
        lower, upper = alpha_limits(lam, mu, nu)
    except NotInProduct:
        return 0
    scan = range(min(lower + upper), max(lower + upper) + 1)
    return sum(1 for a in scan if all(check_inequalities(lam, mu, nu, a)))


def mult_index(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> int:
    """1-based position of α inside its interval."""
    interval = alpha_bounds(lam, mu, nu)
    if alpha not in interval:
        raise InvalidPoint(
            f"α={alpha} outside [{interval.lo}, {interval.hi}] for {lam}⊗{mu} → {nu}"
        )
    return alpha - interval.lo + 1


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> Honeycomb:
    """Validated honeycomb; raises InequalityViolation naming the failing inequalities."""
    require_rank(3, lam, mu, nu)
    nu3(lam, mu, nu)
    checks = check_inequalities(lam, mu, nu, alpha)
    violations = [
        (row, pos) for (row, pos, _, _), ok in zip(INEQUALITY_TABLE, checks, strict=True) if not ok
    ]
    if violations:
        raise InequalityViolation(
            f"α={alpha} violates {len(violations)} inequalities for {lam}⊗{mu} → {nu}",
            violations,
        )
    return Honeycomb(lam, mu, nu, alpha)


def enumerate_honeycombs(lam: Weight, mu: Weight, nu: Weight) -> list[Honeycomb]:
    """One honeycomb per admissible α, in increasing α."""
    return [Honeycomb(lam, mu, nu, a) for a in alpha_bounds(lam, mu, nu)]


def hive_of(lam: Weight, mu: Weight, nu: Weight, alpha: int) -> Hive:
    """Hive with the given boundary and interior α, without checking any inequality."""
    n3 = nu3(lam, mu, nu)
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    _, n2 = nu.labels
    top = l1 + 2 * l2
    right = top + m1 + 2 * m2
    return Hive(
        (
            (top,),
            (top, top + m1 + m2),
            (l1 + l2, alpha, right),
            (0, right - n2 - 2 * n3, right - n3, right),
        )
    )


def to_hive(h: Honeycomb) -> Hive:
    """Dual hive: boundary partial sums of the honeycomb's outer edges, interior α."""
    return hive_of(h.lam, h.mu, h.nu, h.alpha)


# ---------------------------------------------------------------------------
# Wesslen bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearBound:
    """lower ≤ c₁ν₁ + c₂ν₂ ≤ upper; either side may be absent."""

    name: str
    c1: int
    c2: int
    lower: int | None
    upper: int | None

    def value(self, nu: Weight) -> int:
        return self.c1 * nu[0] + self.c2 * nu[1]

    def holds(self, nu: Weight) -> bool:
        v = self.value(nu)
        if self.lower is not None and v < self.lower:
            return False
        return self.upper is None or v <= self.upper


def wesslen_bounds(lam: Weight, mu: Weight) -> list[LinearBound]:
    """Inequalities on (ν₁, ν₂) satisfied by every ν in λ⊗μ.

    ν₁, ν₂ ≥ 0 plus lower and upper bounds on 2ν₁+ν₂, ν₁+2ν₂ and ν₁−ν₂.
    """
    require_rank(3, lam, mu)
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    return [
        LinearBound("nu1", 1, 0, 0, None),
        LinearBound("nu2", 0, 1, 0, None),
        LinearBound(
            "2nu1+nu2",
            2,
            1,
            max(2 * m1 + m2 - l1 - 2 * l2, 2 * l1 + l2 - m1 - 2 * m2, l2 - l1 + m2 - m1),
            2 * l1 + l2 + 2 * m1 + m2,
        ),
        LinearBound(
            "nu1+2nu2",
            1,
            2,
            max(l1 + 2 * l2 - 2 * m1 - m2, m1 + 2 * m2 - 2 * l1 - l2, l1 - l2 + m1 - m2),
            l1 + 2 * l2 + m1 + 2 * m2,
        ),
        LinearBound(
            "nu1-nu2",
            1,
            -1,
            max(m1 - m2 - 2 * l1 - l2, l1 - l2 - 2 * m1 - m2),
            min(l1 - l2 + m1 + 2 * m2, l1 + 2 * l2 + m1 - m2),
        ),
    ]


def within_wesslen(lam: Weight, mu: Weight, nu: Weight) -> bool:
    return all(b.holds(nu) for b in wesslen_bounds(lam, mu))
