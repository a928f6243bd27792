"""Tests for the CLI commands, driven in-process through ``run``."""

from __future__ import annotations

import argparse
import json

import pytest

from liecomb import __version__
from liecomb.cli import build_parser, non_negative, run, weight_arg
from liecomb.weights import Weight

ANCHOR = ["--lambda", "21,6", "--mu", "17,16"]


def run_json(capsys, argv: list[str]) -> tuple[int, dict]:
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


class TestArgumentTypes:
    def test_weight_rank_from_commas(self) -> None:
        assert weight_arg("9,5") == Weight((9, 5))
        assert weight_arg("1,2,2").rank == 4

    def test_bad_weight(self) -> None:
        with pytest.raises(argparse.ArgumentTypeError):
            weight_arg("a,b")

    def test_non_negative(self) -> None:
        assert non_negative("3") == 3
        with pytest.raises(argparse.ArgumentTypeError):
            non_negative("-1")

    def test_parser_commands(self) -> None:
        parser = build_parser()
        args = parser.parse_args(["decompose", "--lambda", "9,5", "--mu", "6,2"])
        assert args.command == "decompose"
        assert args.lam == Weight((9, 5))


class TestUsage:
    def test_version(self, capsys) -> None:
        assert run(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_missing_command(self) -> None:
        assert run([]) == 2

    def test_bad_weight_text(self, capsys) -> None:
        assert run(["decompose", "--lambda", "a,b", "--mu", "1,0"]) == 2
        assert "--lambda" in capsys.readouterr().err

    def test_rank_mismatch(self, capsys) -> None:
        assert run(["decompose", "--lambda", "1,0,0", "--mu", "1,0"]) == 2
        assert "SU(4) weight" in capsys.readouterr().err

    def test_svg_needs_output(self) -> None:
        assert run(["decompose", "--lambda", "1,0", "--mu", "1,0", "-f", "svg"]) == 2


class TestDecompose:
    def test_text(self, capsys) -> None:
        assert run(["decompose", "--lambda", "9,5", "--mu", "6,2"]) == 0
        assert capsys.readouterr().out.endswith("M=51 total=95 dim=50400 max=3\n")

    def test_json(self, capsys) -> None:
        argv = ["decompose", "--lambda", "1,0", "--mu", "0,1", "-f", "json"]
        code, payload = run_json(capsys, argv)
        assert code == 0
        assert payload["entries"] == [{"nu": [0, 0], "mult": 1}, {"nu": [1, 1], "mult": 1}]

    def test_every_route_agrees(self, capsys) -> None:
        code, payload = run_json(capsys, ["decompose", *ANCHOR, "--nu", "12,8", "-f", "json"])
        assert code == 0
        assert payload["agree"] is True
        assert set(payload["routes"].values()) == {5}

    def test_svg_file(self, tmp_path) -> None:
        out = tmp_path / "layers.svg"
        argv = ["decompose", "--lambda", "4,2", "--mu", "3,1", "-f", "svg", "-o", str(out)]
        assert run(argv) == 0
        assert out.read_text(encoding="utf-8").startswith("<svg")

    def test_threads(self, capsys) -> None:
        assert run(["decompose", "--lambda", "6,3", "--mu", "4,5", "--threads", "2"]) == 0
        assert "M=" in capsys.readouterr().out


class TestCensus:
    def test_anchor_pair(self, capsys) -> None:
        code, payload = run_json(capsys, ["census", *ANCHOR, "-f", "json"])
        assert code == 0
        assert payload["M"] == 411
        assert payload["max"] == 7
        assert payload["sigma"]["7"] == 111


class TestPolygon:
    def test_text_with_overlay(self, capsys) -> None:
        assert run(["polygon", "--lambda", "10,4", "--mu", "7,3", "--conjugate-mu"]) == 0
        out = capsys.readouterr().out
        assert "(10,4)⊗(7,3):" in out
        assert "(10,4)⊗(3,7):" in out

    def test_svg_root_axes(self, tmp_path) -> None:
        out = tmp_path / "p.svg"
        argv = ["polygon", "--lambda", "10,4", "--mu", "7,3", "--conjugate-mu", "--axes", "root"]
        assert run([*argv, "-f", "svg", "-o", str(out)]) == 0
        assert 'stroke-dasharray="4 3"' in out.read_text(encoding="utf-8")


class TestHoneycomb:
    def test_anchor_json(self, capsys) -> None:
        code, payload = run_json(capsys, ["honeycomb", *ANCHOR, "--nu", "12,8", "-f", "json"])
        assert code == 0
        assert [h["alpha"] for h in payload["honeycombs"]] == [60, 61, 62, 63, 64]

    def test_single_alpha_text(self, capsys) -> None:
        assert run(["honeycomb", *ANCHOR, "--nu", "12,8", "--alpha", "62"]) == 0
        assert "e1=-33" in capsys.readouterr().out

    def test_hive(self, capsys) -> None:
        assert run(["honeycomb", *ANCHOR, "--nu", "12,8", "--hive", "--alpha", "60"]) == 0
        assert "rhombus" in capsys.readouterr().out

    def test_alpha_outside(self, capsys) -> None:
        assert run(["honeycomb", *ANCHOR, "--nu", "12,8", "--alpha", "59"]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_triality_violation_json_error(self, capsys) -> None:
        argv = ["honeycomb", "--lambda", "1,0", "--mu", "1,0", "--nu", "1,0", "-f", "json"]
        assert run(argv) == 1
        err = json.loads(capsys.readouterr().err)
        assert err["error"] == "NotInProduct"


class TestPictograph:
    def test_text(self, capsys) -> None:
        assert run(["pictograph", *ANCHOR, "--nu", "12,8"]) == 0
        assert capsys.readouterr().out.count("BZ-triangle") == 5

    def test_json_kind(self, capsys) -> None:
        code, payload = run_json(
            capsys, ["pictograph", *ANCHOR, "--nu", "12,8", "--kind", "oblade", "-f", "json"]
        )
        assert code == 0
        assert [p["labels"]["n13"] for p in payload] == [2, 3, 4, 5, 6]
        assert {p["kind"] for p in payload} == {"oblade"}

    def test_svg_index(self, tmp_path) -> None:
        out = tmp_path / "bz.svg"
        argv = ["pictograph", *ANCHOR, "--nu", "12,8", "-f", "svg", "-o", str(out)]
        assert run([*argv, "--index", "3"]) == 0
        assert out.read_text(encoding="utf-8").startswith("<svg")
        assert run([*argv, "--index", "6"]) == 2


class TestMap:
    def test_bijection(self, capsys) -> None:
        assert run(["map", "--lambda", "2,1", "--mu", "2,1", "--all"]) == 0
        assert capsys.readouterr().out.endswith("PASS\n")

    def test_json(self, capsys) -> None:
        code, payload = run_json(capsys, ["map", "--lambda", "10,4", "--mu", "7,3", "-f", "json"])
        assert code == 0
        assert payload["ok"] is True
        assert payload["points"] == payload["targets"]

    def test_nu_needs_alpha(self) -> None:
        assert run(["map", "--lambda", "2,1", "--mu", "2,1", "--nu", "0,1"]) == 2

    def test_invalid_point(self, capsys) -> None:
        assert run(["map", "--lambda", "2,1", "--mu", "2,1", "--nu", "0,1", "--alpha", "999"]) == 1


class TestOracle:
    def test_su4(self, capsys) -> None:
        argv = ["oracle", "--rank", "4", "--lambda", "1,0,1", "--mu", "1,0,1", "-f", "json"]
        code, payload = run_json(capsys, argv)
        assert code == 0
        assert sum(e["mult"] for e in payload["entries"]) == 7

    def test_compare(self, capsys) -> None:
        argv = ["oracle", "--lambda", "9,5", "--mu", "6,2", "--compare", "--method", "peel"]
        assert run(argv) == 0
        assert capsys.readouterr().out.endswith("PASS\n")

    def test_polytope(self, capsys) -> None:
        code, payload = run_json(capsys, ["oracle", "--polytope", "-f", "json"])
        assert code == 0
        assert payload["ok"] is True

    def test_needs_pair(self) -> None:
        assert run(["oracle"]) == 2


class TestVerify:
    def test_pair(self, capsys) -> None:
        code, payload = run_json(capsys, ["verify", *ANCHOR, "-f", "json"])
        assert code == 0
        assert payload["passed"] is True
        assert payload["theorem2"]["equal"] is True

    def test_modes(self, capsys) -> None:
        argv = ["verify", "--lambda", "5,3", "--mu", "4,2"]
        assert run([*argv, "--mode", "bijection", "--mode", "oracle"]) == 0
        assert capsys.readouterr().out.endswith("PASS\n")

    def test_sweep(self, capsys) -> None:
        code, payload = run_json(capsys, ["verify", "--sweep", "2", "--theorem", "1", "-f", "json"])
        assert code == 0
        assert payload["pairs"] == 81

    def test_su4_witness_fails_theorem2(self, capsys) -> None:
        argv = ["verify", "--rank", "4", "--lambda", "1,2,2", "--mu", "2,1,3", "--theorem", "2"]
        assert run(argv) == 1
        assert capsys.readouterr().out.endswith("FAIL\n")

    def test_needs_pair_or_sweep(self) -> None:
        assert run(["verify"]) == 2

    def test_negative_sweep(self) -> None:
        assert run(["verify", "--sweep", "-1"]) == 2

    def test_bare_sample_uses_default(self, capsys, monkeypatch) -> None:
        monkeypatch.setattr("liecomb.cli.default_sample_pairs", lambda rank: 2 + rank)
        argv = ["verify", "--sweep", "0", "--sample", "--theorem", "1", "-f", "json"]
        code, payload = run_json(capsys, argv)
        assert code == 0
        assert payload["sampled"] == 5

    def test_seed_from_env(self, capsys, monkeypatch) -> None:
        monkeypatch.setenv("LIECOMB_SEED", "5")
        code, payload = run_json(capsys, ["verify", "--sweep", "0", "--sample", "3", "-f", "json"])
        assert code == 0
        assert payload["seed"] == 5
        assert payload["sampled"] == 3
