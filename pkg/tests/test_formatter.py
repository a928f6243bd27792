"""Tests for output formatters."""

from __future__ import annotations

from liecomb.conjmap import map_all, map_point, verify_bijection
from liecomb.formatter import (
    format_bijection,
    format_census,
    format_hive,
    format_honeycomb,
    format_json,
    format_layers,
    format_mapped,
    format_multiplicities,
    format_oracle_diff,
    format_polytope,
    format_sweep,
    format_table,
    format_theorem1,
    format_theorem2,
)
from liecomb.honeycomb import alpha_bounds, build, to_hive
from liecomb.multiplicity import (
    DecompositionTable,
    census,
    decompose,
    verify_theorem1,
    verify_theorem2,
)
from liecomb.oracle import su4_polytope_check
from liecomb.polygon import layers
from liecomb.sweeps import SweepSummary
from liecomb.weights import Weight


def W(*labels: int) -> Weight:
    return Weight(labels)


class TestFormatJson:
    def test_sorted_and_indented(self) -> None:
        assert format_json({"b": 1, "a": "λ"}) == '{\n  "a": "λ",\n  "b": 1\n}'


class TestFormatTable:
    def test_small_table(self) -> None:
        text = format_table(decompose(W(1, 0), W(0, 1)))
        assert text.splitlines() == [
            "(1,0)⊗(0,1)",
            "  mult 1 (2): (0,0) (1,1)",
            "M=2 total=2 dim=9 max=1",
        ]

    def test_grouped_by_multiplicity(self) -> None:
        text = format_table(decompose(W(9, 5), W(6, 2)))
        assert "  mult 3 (14):" in text
        assert text.endswith("M=51 total=95 dim=50400 max=3")

    def test_census(self) -> None:
        text = format_census(W(9, 5), W(6, 2), census(W(9, 5), W(6, 2)))
        assert text == "(9,5)⊗(6,2): M=51 max=3 total=95\n  σ(1)=21, σ(2)=16, σ(3)=14"


class TestFormatMultiplicities:
    def test_agree(self) -> None:
        text = format_multiplicities(W(1, 1), W(1, 1), W(1, 1), {"formula": 2, "oracle": 2})
        assert text.splitlines()[0] == "N((1,1)⊗(1,1) → (1,1))"
        assert text.endswith("agree")

    def test_disagree(self) -> None:
        text = format_multiplicities(W(1, 1), W(1, 1), W(1, 1), {"formula": 2, "oracle": 1})
        assert text.endswith("DISAGREE")


class TestFormatHoneycomb:
    def test_anchor(self, anchor) -> None:
        text = format_honeycomb(build(*anchor, 62))
        lines = text.splitlines()
        assert lines[0] == "honeycomb (21,6)⊗(17,16) → (12,8)  α=62  ν₃=18"
        assert "e1=-33" in text
        assert "e9=18" in text
        assert lines[-1] == "vertex sums: all zero"

    def test_hive(self, anchor) -> None:
        text = format_hive(to_hive(build(*anchor, 60)))
        rhombi = [line for line in text.splitlines() if "rhombus" in line]
        assert len(rhombi) == 9
        assert all(line.endswith("ok") for line in rhombi)


class TestFormatLayers:
    def test_header(self) -> None:
        text = format_layers(layers(W(9, 5), W(6, 2)))
        assert text.splitlines()[0] == "(9,5)⊗(6,2): 3 layers"
        assert "  P3:" in text


class TestFormatMapping:
    def test_mapped_point(self) -> None:
        lam, mu = W(2, 0), W(1, 0)
        alpha = alpha_bounds(lam, mu, W(3, 0)).lo
        text = format_mapped(map_point(lam, mu, W(3, 0), alpha))
        assert text.startswith("(3,0) ")
        assert "→ (1,0)" in text
        assert text.endswith("[reflection]")

    def test_bijection(self) -> None:
        lam, mu = W(2, 1), W(2, 1)
        text = format_bijection(verify_bijection(lam, mu), map_all(lam, mu))
        lines = text.splitlines()
        assert lines[0].startswith("(2,1)⊗(2,1) → (2,1)⊗(1,2)  case 2")
        assert "  points: 10 → 10" in lines
        assert sum("[translation]" in line for line in lines) == 1
        assert lines[-1] == "PASS"


class TestFormatVerification:
    def test_theorem1(self) -> None:
        text = format_theorem1(W(9, 5), W(6, 2), verify_theorem1(W(9, 5), W(6, 2)))
        assert "  total 95 vs 95" in text
        assert text.endswith("PASS")

    def test_theorem2(self) -> None:
        text = format_theorem2(W(9, 5), W(6, 2), verify_theorem2(W(9, 5), W(6, 2)))
        assert "  multiset      1×21 2×16 3×14" in text
        assert text.endswith("PASS")

    def test_sweep_with_failure(self) -> None:
        summary = SweepSummary(rank=3, checks=("theorem2",), bound=2, pairs=81)
        summary.failures = [(((1, 0), (0, 1)), ("theorem2",))]
        text = format_sweep(summary)
        assert "  first counterexample: (1,0)⊗(0,1) [theorem2]" in text
        assert text.endswith("FAIL")

    def test_sweep_passed(self) -> None:
        text = format_sweep(SweepSummary(rank=4, checks=("theorem1",), bound=3, pairs=84))
        assert text.splitlines()[0] == "SU(4) sweep [theorem1] level(λ)+level(μ) ≤ 3"
        assert text.endswith("PASS")

    def test_oracle_diff(self) -> None:
        closed = decompose(W(1, 0), W(0, 1))
        broken = DecompositionTable(W(1, 0), W(0, 1), ((W(0, 0), 1),))
        text = format_oracle_diff(closed, broken)
        assert "  (1,1): 1 vs 0" in text
        assert text.endswith("FAIL")
        assert format_oracle_diff(closed, closed).endswith("PASS")

    def test_polytope(self) -> None:
        text = format_polytope(su4_polytope_check())
        assert "  vertices with mult 1: 16/16" in text
        assert text.endswith("PASS")
