"""Output formatting — text tables, ASCII honeycombs and hives, reports, JSON."""

from __future__ import annotations

import json
from typing import Any

from .conjmap import BijectionReport, MappedPoint
from .honeycomb import Hive, Honeycomb
from .multiplicity import (
    DecompositionTable,
    MultiplicityCensus,
    Theorem1Report,
    Theorem2Report,
)
from .oracle import PolytopeReport
from .polygon import LayerDiagram
from .sweeps import SweepSummary
from .weights import Weight, conjugate


def format_json(payload: Any) -> str:
    """Stable JSON: sorted keys, two-space indent, so reruns are byte-identical."""
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def format_table(table: DecompositionTable) -> str:
    """One constituent per line, grouped by multiplicity, then a summary line."""
    lines = [f"{table.lam}⊗{table.mu}"]
    for s, count in table.histogram().items():
        members = [str(nu) for nu, m in table.entries if m == s]
        lines.append(f"  mult {s} ({count}): {' '.join(members)}")
    lines.append(
        f"M={len(table)} total={table.total()} dim={table.dimension()} max={table.max_mult()}"
    )
    return "\n".join(lines)


def format_census(lam: Weight, mu: Weight, census: MultiplicityCensus) -> str:
    sigma = ", ".join(f"σ({s})={n}" for s, n in sorted(census.by_mult.items()))
    return (
        f"{lam}⊗{mu}: M={census.distinct} max={census.mult_max} total={census.total}\n"
        f"  {sigma}"
    )


def format_multiplicities(lam: Weight, mu: Weight, nu: Weight, routes: dict[str, int]) -> str:
    """Every route to a single N_{λμ}^ν, flagged when they disagree."""
    agree = len(set(routes.values())) <= 1
    lines = [f"N({lam}⊗{mu} → {nu})"]
    width = max(len(k) for k in routes)
    lines.extend(f"  {name:<{width}}  {value}" for name, value in routes.items())
    lines.append("agree" if agree else "DISAGREE")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Honeycombs and hives
# ---------------------------------------------------------------------------

# Boundary labels b0..b8 hang off V6, V2, V0, V0, V3, V8, V8, V7, V6 (clockwise order).
_HONEYCOMB_TEMPLATE = """\
               {b2:>5} \\   / {b3}
                       V0
                       │ {e1}
                       V1
                  {e2:>4} /  \\ {e3}
      {b1:>5} ───── V2      V3 ───── {b4}
                    │ {e4:<5}│ {e5}
                    V4      V5
             {e6:>4} /  \\ {e7:<5} {e8:>5} /  \\ {e9}
  {b0:>5} ───── V6      V7            V8 ───── {b5}
                │ {b8:<6}│ {b7:<12}│ {b6}"""


def format_honeycomb(h: Honeycomb) -> str:
    """ASCII honeycomb with inner edges e1..e9 and the nine boundary labels."""
    b = h.boundary()
    head = f"honeycomb {h.lam}⊗{h.mu} → {h.nu}  α={h.alpha}  ν₃={h.nu3}"
    edges = {name: f"{name}={value}" for name, value in h.edges.items()}
    body = _HONEYCOMB_TEMPLATE.format(**edges, **{f"b{i}": v for i, v in enumerate(b)})
    sums = h.vertex_sums()
    closing = "vertex sums: all zero" if not any(sums.values()) else f"vertex sums: {sums}"
    return "\n".join([head, body, closing])


def format_hive(hive: Hive) -> str:
    """Rows of the triangular grid, apex on top, followed by the rhombus checks."""
    width = max(len(str(x)) for row in hive.rows for x in row) + 2
    depth = len(hive.rows)
    lines = []
    for r, row in enumerate(hive.rows):
        pad = " " * ((depth - 1 - r) * width // 2)
        lines.append(pad + "".join(f"{x:^{width}}" for x in row).rstrip())
    for (row, pos, orient, big, small), ok in zip(hive.rhombi(), hive.check_rhombi(), strict=True):
        mark = "ok" if ok else "VIOLATED"
        lines.append(f"  rhombus {row}.{pos} {orient}  {big} ≥ {small}  {mark}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------


def format_layers(diagram: LayerDiagram) -> str:
    lines = [f"{diagram.lam}⊗{diagram.mu}: {len(diagram)} layers"]
    for poly in diagram.layers:
        verts = " ".join(f"({x},{y})" for x, y in poly.vertices)
        lines.append(f"  P{poly.layer}: {verts}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Conjugation map
# ---------------------------------------------------------------------------


def format_mapped(p: MappedPoint) -> str:
    return (
        f"({p.nu[0]},{p.nu[1]}) α={p.alpha} m={p.m} → "
        f"({p.nu_image[0]},{p.nu_image[1]}) α={p.alpha_image} m={p.m_image}  [{p.regime}]"
    )


def format_bijection(report: BijectionReport, points: list[MappedPoint] | None = None) -> str:
    lines = [
        f"{report.lam}⊗{report.mu} → {report.lam}⊗{conjugate(report.mu)}"
        f"  case {report.case}"
        f"  (swapped={report.swapped}, conjugated={report.conjugated})",
        f"  points: {report.points} → {report.targets}",
        "  regimes: " + ", ".join(f"{k}={v}" for k, v in sorted(report.regimes.items())),
        f"  split weights: {report.split_weights}",
    ]
    for name in ("collisions", "missing", "outside", "index_changes"):
        bad = getattr(report, name)
        if bad:
            lines.append(f"  {name}: " + " ".join(f"({nu[0]},{nu[1]})@{a}" for nu, a in bad))
    for name in ("triality_errors", "wesslen_errors"):
        bad = getattr(report, name)
        if bad:
            lines.append(f"  {name}: " + " ".join(f"({x},{y})" for x, y in bad))
    if not report.multisets_equal:
        lines.append("  multiplicity multisets differ")
    if points:
        lines.extend("    " + format_mapped(p) for p in points)
    lines.append(_verdict(report.ok))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def format_theorem1(lam: Weight, mu: Weight, report: Theorem1Report) -> str:
    return (
        f"Theorem 1 {lam}⊗{mu} vs {lam}⊗{conjugate(mu)}\n"
        f"  total {report.total} vs {report.total_conj}\n"
        f"  Σ mult² {report.squares} vs {report.squares_conj}\n"
        f"{_verdict(report.equal)}"
    )


def _multiset(values: tuple[int, ...]) -> str:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return " ".join(f"{m}×{n}" for m, n in sorted(counts.items()))


def format_theorem2(lam: Weight, mu: Weight, report: Theorem2Report) -> str:
    return (
        f"Theorem 2 {lam}⊗{mu} vs {lam}⊗{conjugate(mu)}\n"
        f"  multiset      {_multiset(report.multiset)}\n"
        f"  multiset conj {_multiset(report.multiset_conj)}\n"
        f"{_verdict(report.equal)}"
    )


def format_sweep(summary: SweepSummary) -> str:
    bound = "labels" if summary.rank == 3 else "level(λ)+level(μ)"
    lines = [
        f"SU({summary.rank}) sweep [{', '.join(summary.checks)}] {bound} ≤ {summary.bound}",
        f"  pairs: {summary.pairs}",
    ]
    if summary.sampled:
        lines.append(f"  sampled: {summary.sampled} (seed {summary.seed})")
    first = summary.first_failure
    if first is not None:
        (lam, mu), names = first
        lines.append(f"  failures: {len(summary.failures)}")
        lines.append(f"  first counterexample: {Weight(lam)}⊗{Weight(mu)} [{', '.join(names)}]")
    if summary.witness is not None:
        w = summary.witness
        lines.append(
            f"  witness: max {max(w.multiset)} vs {max(w.multiset_conj)} on conjugation, "
            f"multisets {'equal' if w.equal else 'differ'}"
        )
    lines.append(_verdict(summary.passed))
    return "\n".join(lines)


def format_oracle_diff(closed: DecompositionTable, oracle: DecompositionTable) -> str:
    """Weights whose multiplicities differ between the closed form and the oracle."""
    a, b = closed.as_dict(), oracle.as_dict()
    diffs = [
        (nu, a.get(nu, 0), b.get(nu, 0))
        for nu in sorted(set(a) | set(b))
        if a.get(nu, 0) != b.get(nu, 0)
    ]
    lines = [f"{closed.lam}⊗{closed.mu}: closed form vs oracle, {len(a)} vs {len(b)} irreps"]
    lines.extend(f"  {nu}: {x} vs {y}" for nu, x, y in diffs)
    lines.append(_verdict(not diffs))
    return "\n".join(lines)


def format_polytope(report: PolytopeReport) -> str:
    ones = sum(1 for m in report.vertex_mults.values() if m == 1)
    special = ", ".join(f"{Weight(v)}={m}" for v, m in report.special_mults.items())
    lines = [
        "SU(4) (1,2,2)⊗(2,2,1)",
        f"  vertices with mult 1: {ones}/{len(report.vertex_mults)}",
        f"  special weights: {special}",
        f"  weights outside hull: {len(report.outside_hull)}",
        f"  total {report.total} vs conjugate pairing {report.total_conj}",
        _verdict(report.ok),
    ]
    return "\n".join(lines)
