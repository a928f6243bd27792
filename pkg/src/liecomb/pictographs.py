"""BZ-triangles, O-blades and SU(3)-honeycombs: three drawings of the same nine labels.

Labels are named after the three positive-root triples they decompose:

    σ₁ = λ + μ − ν   along (n₁₂, n₂₃, n₁₃)
    σ₂ = λ − μ̄ + ν̄   along (m₁₂, m₂₃, m₁₃)
    σ₃ = −λ̄ + μ + ν̄  along (l₁₂, l₂₃, l₁₃)

The seven components (a,b,c,d,e,f;g) are coordinates on the six non-primitive fundamental
pictographs plus the left primitive one. The right primitive is b + d + f − left, so its
g-component is −1.
"""

from __future__ import annotations

import logging
from dataclasses import astuple, dataclass, fields

import numpy as np

from .config import PICTOGRAPH_KINDS
from .errors import InvalidPictograph, NotInProduct, StepOutOfFiber
from .honeycomb import Honeycomb, build
from .weights import Weight, conjugate, nu3, require_rank

logger = logging.getLogger(__name__)

LABEL_NAMES: tuple[str, ...] = ("m12", "m23", "m13", "n12", "n23", "n13", "l12", "l23", "l13")

FUNDAMENTAL_NAMES: tuple[str, ...] = ("a", "b", "c", "d", "e", "f", "left", "right")

# Positive roots α₁₂, α₂₃, α₁₃ in Dynkin coordinates.
POSITIVE_ROOTS: tuple[tuple[int, int], ...] = ((2, -1), (-1, 2), (1, 1))

# ---------------------------------------------------------------------------
# Label types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NineLabels:
    """Nine integer labels; negative entries are allowed only for virtual pictographs."""

    m12: int = 0
    m23: int = 0
    m13: int = 0
    n12: int = 0
    n23: int = 0
    n13: int = 0
    l12: int = 0
    l23: int = 0
    l13: int = 0

    @classmethod
    def from_tuple(cls, values: tuple[int, ...] | list[int]) -> NineLabels:
        if len(values) != 9:
            raise InvalidPictograph(f"expected 9 labels, got {len(values)}")
        return cls(*(int(v) for v in values))

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def __add__(self, other: NineLabels) -> NineLabels:
        return NineLabels(*(x + y for x, y in zip(self.as_tuple(), other.as_tuple(), strict=True)))

    def scaled(self, k: int) -> NineLabels:
        return NineLabels(*(k * x for x in self.as_tuple()))

    def hexagon_ok(self) -> bool:
        """Opposite sides of the inner hexagon balance."""
        return (
            self.l12 + self.n23 == self.l23 + self.n12
            and self.m12 + self.l23 == self.m23 + self.l12
            and self.n12 + self.m23 == self.n23 + self.m12
        )

    def nonnegative(self) -> bool:
        return all(x >= 0 for x in self.as_tuple())

    def to_json(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


# Virtual step pictograph: trivial externals, not itself non-negative.
DELTA = NineLabels(-1, -1, 1, -1, -1, 1, -1, -1, 1)


@dataclass(frozen=True)
class Components7:
    """Coordinates in the left basis; ``g`` may be negative."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def to_json(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Pictograph:
    """A valid pictograph: non-negative labels satisfying the hexagon constraint."""

    labels: NineLabels
    kind: str = "bz"

    def __post_init__(self) -> None:
        if self.kind not in PICTOGRAPH_KINDS:
            raise InvalidPictograph(
                f"unknown pictograph kind {self.kind!r}; expected one of {sorted(PICTOGRAPH_KINDS)}"
            )
        if not self.labels.nonnegative():
            raise InvalidPictograph(f"negative label in {self.labels.as_tuple()}")
        if not self.labels.hexagon_ok():
            raise InvalidPictograph(f"hexagon constraint fails for {self.labels.as_tuple()}")

    def as_kind(self, kind: str) -> Pictograph:
        return Pictograph(self.labels, kind)

    def to_json(self) -> dict:
        lam, mu, nu = external_weights(self)
        return {
            "kind": self.kind,
            "labels": self.labels.to_json(),
            "components": to_components(self).to_json(),
            "lambda": lam.to_json(),
            "mu": mu.to_json(),
            "nu": nu.to_json(),
        }


# ---------------------------------------------------------------------------
# Externals and coordinates
# ---------------------------------------------------------------------------


def _externals(x: NineLabels) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    return (
        (x.m13 + x.n12, x.n13 + x.m23),
        (x.n13 + x.l12, x.n23 + x.l13),
        (x.m13 + x.l23, x.m12 + x.l13),
    )


def external_weights(p: Pictograph) -> tuple[Weight, Weight, Weight]:
    """(λ, μ, ν) read off the labels."""
    lam, mu, nu = _externals(p.labels)
    return Weight(lam), Weight(mu), Weight(nu)


def to_components(p: Pictograph | NineLabels) -> Components7:
    x = p.labels if isinstance(p, Pictograph) else p
    return Components7(
        a=x.n13, b=x.n23, c=x.l13, d=x.l23, e=x.m13, f=x.m23, g=x.m12 - x.m23
    )


def from_components(c: Components7) -> NineLabels:
    """Labels of a·A + b·B + … + g·Left; the hexagon constraint holds for any integers."""
    return NineLabels(
        m12=c.f + c.g,
        m23=c.f,
        m13=c.e,
        n12=c.b + c.g,
        n23=c.b,
        n13=c.a,
        l12=c.d + c.g,
        l23=c.d,
        l13=c.c,
    )


def sigma_vectors(p: Pictograph | NineLabels) -> tuple[tuple[int, int], ...]:
    """(σ₁, σ₂, σ₃) in Dynkin coordinates, summed along the positive roots from the labels."""
    x = p.labels if isinstance(p, Pictograph) else p

    def along(c12: int, c23: int, c13: int) -> tuple[int, int]:
        return (
            sum(k * r[0] for k, r in zip((c12, c23, c13), POSITIVE_ROOTS, strict=True)),
            sum(k * r[1] for k, r in zip((c12, c23, c13), POSITIVE_ROOTS, strict=True)),
        )

    return (
        along(x.n12, x.n23, x.n13),
        along(x.m12, x.m23, x.m13),
        along(x.l12, x.l23, x.l13),
    )


def sigma_from_weights(lam: Weight, mu: Weight, nu: Weight) -> tuple[tuple[int, int], ...]:
    """σ₁ = λ+μ−ν, σ₂ = λ−μ̄+ν̄, σ₃ = −λ̄+μ+ν̄ straight from the external weights."""
    lb, mb, nb = conjugate(lam), conjugate(mu), conjugate(nu)
    return (
        (lam[0] + mu[0] - nu[0], lam[1] + mu[1] - nu[1]),
        (lam[0] - mb[0] + nb[0], lam[1] - mb[1] + nb[1]),
        (-lb[0] + mu[0] + nb[0], -lb[1] + mu[1] + nb[1]),
    )


def kt_edges(p: Pictograph) -> tuple[int, ...]:
    """The nine inner KT-honeycomb edges e1..e9 from the components."""
    a, b, c, d, _, f, g = to_components(p).as_tuple()
    return (
        -a - b - c - d - g,
        b + c + d + g,
        a,
        -a - b - c - d - f - g,
        -a - b - c,
        c + d,
        a + b + f + g,
        c,
        a + b,
    )


def to_kt(p: Pictograph) -> Honeycomb:
    """The KT-honeycomb with the same externals; its hive parameter is λ₁+2λ₂+μ₁+μ₂ − a."""
    lam, mu, nu = external_weights(p)
    alpha = lam[0] + 2 * lam[1] + mu[0] + mu[1] - p.labels.n13
    return build(lam, mu, nu, alpha)


# ---------------------------------------------------------------------------
# Fundamentals
# ---------------------------------------------------------------------------


def fundamentals(kind: str = "bz") -> list[Pictograph]:
    """The six non-primitive pictographs a..f, then the left and right primitives."""
    basis = []
    for i in range(6):
        comps = [0] * 7
        comps[i] = 1
        basis.append(Pictograph(from_components(Components7(*comps)), kind))
    basis.append(Pictograph(NineLabels(m12=1, n12=1, l12=1), kind))
    basis.append(Pictograph(NineLabels(m23=1, n23=1, l23=1), kind))
    return basis


def relation() -> tuple[int, ...]:
    """Coefficients over :func:`fundamentals` of b + d + f = left + right."""
    return (0, 1, 0, 1, 0, 1, -1, -1)


def fundamental_matrix() -> np.ndarray:
    return np.array([p.labels.as_tuple() for p in fundamentals()], dtype=np.int64)


def fundamental_rank() -> int:
    return int(np.linalg.matrix_rank(fundamental_matrix()))


# ---------------------------------------------------------------------------
# Enumeration and the step operator
# ---------------------------------------------------------------------------


def _a_range(lam: Weight, mu: Weight, nu: Weight) -> tuple[int, int, int, int]:
    """(ν₃, g, a_lo, a_hi) for the fiber of (λ, μ, ν); empty when a_lo > a_hi."""
    n3 = nu3(lam, mu, nu)
    g = nu[1] - mu[1] + n3 - lam[1]
    lo = max(0, n3 - mu[1], n3 + g - lam[0])
    hi = min(lam[1], n3, mu[0] - g, lam[1] + g, n3 + g, mu[0])
    return n3, g, lo, hi


def _from_a(lam: Weight, mu: Weight, n3: int, g: int, a: int) -> NineLabels:
    b = n3 - a
    return from_components(
        Components7(
            a=a,
            b=b,
            c=mu[1] - n3 + a,
            d=mu[0] - a - g,
            e=lam[0] - b - g,
            f=lam[1] - a,
            g=g,
        )
    )


def extremal(lam: Weight, mu: Weight, nu: Weight, kind: str = "bz") -> Pictograph | None:
    """The pictograph with the smallest top label a, or None when ν ∉ λ⊗μ."""
    require_rank(3, lam, mu, nu)
    try:
        n3, g, lo, hi = _a_range(lam, mu, nu)
    except NotInProduct:
        return None
    if lo > hi:
        return None
    return Pictograph(_from_a(lam, mu, n3, g, lo), kind)


def step_delta(p: Pictograph, k: int) -> Pictograph:
    """p + kΔ; raises StepOutOfFiber when a label would go negative."""
    moved = p.labels + DELTA.scaled(k)
    if not moved.nonnegative():
        raise StepOutOfFiber(f"{k} steps leave the fiber of {p.labels.as_tuple()}", k)
    return Pictograph(moved, p.kind)


def enumerate(lam: Weight, mu: Weight, nu: Weight, kind: str = "bz") -> list[Pictograph]:
    """All pictographs with externals (λ, μ, ν), walking Δ from the extremal one."""
    start = extremal(lam, mu, nu, kind)
    if start is None:
        return []
    out = [start]
    while True:
        try:
            out.append(step_delta(start, len(out)))
        except StepOutOfFiber:
            break
    logger.debug("%s⊗%s → %s: %d pictographs", lam, mu, nu, len(out))
    return out


def enumerate_bruteforce(lam: Weight, mu: Weight, nu: Weight, kind: str = "bz") -> list[Pictograph]:
    """Same set as :func:`enumerate`, by scanning the three corner labels m₁₃, n₁₃, l₁₃."""
    require_rank(3, lam, mu, nu)
    out = []
    for m13 in range(min(lam[0], nu[0]) + 1):
        for n13 in range(min(lam[1], mu[0]) + 1):
            for l13 in range(min(mu[1], nu[1]) + 1):
                x = NineLabels(
                    m12=nu[1] - l13,
                    m23=lam[1] - n13,
                    m13=m13,
                    n12=lam[0] - m13,
                    n23=mu[1] - l13,
                    n13=n13,
                    l12=mu[0] - n13,
                    l23=nu[0] - m13,
                    l13=l13,
                )
                if x.nonnegative() and x.hexagon_ok():
                    out.append(Pictograph(x, kind))
    return sorted(out, key=lambda p: p.labels.n13)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

_BZ_TEMPLATE = """\
              {n13:>3}
          {n12:>3}     {n23:>3}

     {m23:>3}                {l12:>3}
 {m13:>3}     {m12:>3}      {l23:>3}     {l13:>3}"""


def _render_bz(x: NineLabels) -> str:
    return _BZ_TEMPLATE.format(**x.to_json())


def _render_hexagon(x: NineLabels, mark_ones: bool) -> str:
    # Sides of the inner hexagon, walked clockwise from the top vertex.
    sides = (
        ("l12", x.l12),
        ("n23", x.n23),
        ("m12", x.m12),
        ("l23", x.l23),
        ("n12", x.n12),
        ("m23", x.m23),
    )
    legs = (("n13", x.n13), ("l13", x.l13), ("m13", x.m13))

    def cell(name: str, value: int) -> str:
        bold = "*" if mark_ones and value == 1 else " "
        return f"{name}={value}{bold}"

    return "\n".join(
        [
            "legs:    " + "  ".join(cell(n, v) for n, v in legs),
            "hexagon: " + "  ".join(cell(n, v) for n, v in sides),
        ]
    )


def render_text(p: Pictograph, kind: str | None = None) -> str:
    kind = kind or p.kind
    lam, mu, nu = external_weights(p)
    head = f"{PICTOGRAPH_KINDS[kind]} {lam}⊗{mu} → {nu}"
    if kind == "bz":
        body = _render_bz(p.labels)
    else:
        # O-blade edges carrying a 1 are marked, as they are drawn thick.
        body = _render_hexagon(p.labels, mark_ones=kind == "oblade")
    return f"{head}\n{body}"


def render(p: Pictograph, kind: str | None = None, fmt: str = "text") -> str:
    """Deterministic text or SVG drawing of a pictograph."""
    kind = kind or p.kind
    if kind not in PICTOGRAPH_KINDS:
        raise InvalidPictograph(f"unknown pictograph kind {kind!r}")
    if fmt == "svg":
        from .svg import pictograph_svg

        return pictograph_svg(p.as_kind(kind))
    return render_text(p, kind)
