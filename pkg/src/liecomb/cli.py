"""liecomb — CLI entry point.

Installed as ``liecomb`` command via pyproject.toml entry point.

Commands:
    liecomb decompose --lambda L --mu M [--nu N]    Decomposition table, or one multiplicity
    liecomb census --lambda L --mu M                σ(s), M and the largest multiplicity
    liecomb polygon --lambda L --mu M               Nested multiplicity layers
    liecomb honeycomb --lambda L --mu M --nu N      KT-honeycombs (or hives) of one triple
    liecomb pictograph --lambda L --mu M --nu N     BZ triangles, O-blades, SU(3) honeycombs
    liecomb map --lambda L --mu M                   Conjugation bijection λ⊗μ → λ⊗μ̄
    liecomb oracle --lambda L --mu M --rank N       Brute-force SU(2)/SU(3)/SU(4) products
    liecomb verify --lambda L --mu M | --sweep N    Check the conjugation theorems
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import textwrap
from pathlib import Path

from . import __version__
from .config import (
    DEFAULT_RANK,
    PICTOGRAPH_KINDS,
    SUPPORTED_ORACLE_RANKS,
    SWEEP_CHECKS,
    THEOREM_CHOICES,
    default_sample_pairs,
    resolve_seed,
    resolve_workers,
)
from .conjmap import map_all, map_point, verify_bijection
from .errors import InvalidWeight, LiecombError
from .formatter import (
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
from .honeycomb import alpha_bounds, build, count_by_alpha, enumerate_honeycombs, to_hive
from .multiplicity import (
    Theorem1Report,
    Theorem2Report,
    census,
    decompose,
    mult,
    mult_eps,
    mult_reduced,
)
from .oracle import decompose_oracle, mult_oracle, su4_polytope_check
from .pictographs import enumerate as enumerate_pictographs
from .pictographs import render
from .polygon import layers, render_svg
from .sweeps import verify_sweep
from .weights import Weight, conjugate, nu3, parse_weight

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad flag combination found after parsing; reported like an argparse error."""


# ---------------------------------------------------------------------------
# Argument types
# ---------------------------------------------------------------------------


def weight_arg(text: str) -> Weight:
    """argparse type for ``"9,5"``; the rank follows from the number of labels."""
    try:
        return parse_weight(text, rank=text.count(",") + 2)
    except InvalidWeight as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_decompose(args: argparse.Namespace) -> int:
    """Decompose λ⊗μ, or compare every route to a single multiplicity."""
    lam, mu = args.lam, args.mu
    if args.nu is not None:
        nu = args.nu
        routes = {
            "formula": mult(lam, mu, nu),
            "eps": mult_eps(lam, mu, nu),
            "reduced": mult_reduced(lam, mu, nu),
            "alpha-scan": count_by_alpha(lam, mu, nu),
            "pictographs": len(enumerate_pictographs(lam, mu, nu)),
            "oracle": mult_oracle(lam, mu, nu),
        }
        if args.format == "json":
            payload = {
                "lambda": lam.to_json(),
                "mu": mu.to_json(),
                "nu": nu.to_json(),
                "routes": routes,
                "agree": len(set(routes.values())) == 1,
            }
            _emit(args, format_json(payload))
        else:
            _emit(args, format_multiplicities(lam, mu, nu, routes))
        return 0 if len(set(routes.values())) == 1 else 1

    table = decompose(lam, mu, workers=args.workers)
    if args.format == "json":
        _emit(args, format_json(table.to_json()))
    elif args.format == "svg":
        _emit(args, render_svg(layers(lam, mu), table))
    else:
        _emit(args, format_table(table))
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    """Multiplicity census without decomposing."""
    result = census(args.lam, args.mu)
    if args.format == "json":
        payload = {"lambda": args.lam.to_json(), "mu": args.mu.to_json(), **result.to_json()}
        _emit(args, format_json(payload))
    else:
        _emit(args, format_census(args.lam, args.mu, result))
    return 0


def cmd_polygon(args: argparse.Namespace) -> int:
    """Layer diagram of λ⊗μ, optionally overlaid with λ⊗μ̄."""
    lam, mu = args.lam, args.mu
    diagram = layers(lam, mu)
    overlay = layers(lam, conjugate(mu)) if args.conjugate_mu else None
    if args.format == "json":
        payload = diagram.to_json()
        if overlay is not None:
            payload["overlay"] = overlay.to_json()
        _emit(args, format_json(payload))
    elif args.format == "svg":
        table = decompose(lam, mu, workers=args.workers)
        overlay_table = (
            decompose(lam, conjugate(mu), workers=args.workers) if overlay is not None else None
        )
        _emit(
            args,
            render_svg(
                diagram, table, axes=args.axes, overlay=overlay, overlay_table=overlay_table
            ),
        )
    else:
        text = format_layers(diagram)
        if overlay is not None:
            text += "\n" + format_layers(overlay)
        _emit(args, text)
    return 0


def cmd_honeycomb(args: argparse.Namespace) -> int:
    """Honeycombs of one triple, one per admissible α unless --alpha picks one."""
    lam, mu, nu = args.lam, args.mu, args.nu
    nu3(lam, mu, nu)
    if args.alpha is not None:
        combs = [build(lam, mu, nu, args.alpha)]
    else:
        combs = enumerate_honeycombs(lam, mu, nu)
    if args.format == "json":
        payload = {
            "interval": alpha_bounds(lam, mu, nu).to_json(),
            "honeycombs": [h.to_json() for h in combs],
        }
        if args.hive:
            payload["hives"] = [to_hive(h).to_json() for h in combs]
        _emit(args, format_json(payload))
        return 0
    if not combs:
        _emit(args, f"{nu} does not occur in {lam}⊗{mu}")
        return 0
    blocks = []
    for h in combs:
        if args.hive:
            blocks.append(f"hive {lam}⊗{mu} → {nu}  α={h.alpha}\n{format_hive(to_hive(h))}")
        else:
            blocks.append(format_honeycomb(h))
    _emit(args, "\n\n".join(blocks))
    return 0


def cmd_pictograph(args: argparse.Namespace) -> int:
    """All pictographs of a triple, walked from the extremal one."""
    lam, mu, nu = args.lam, args.mu, args.nu
    nu3(lam, mu, nu)
    found = enumerate_pictographs(lam, mu, nu, args.kind)
    if args.format == "json":
        _emit(args, format_json([p.to_json() for p in found]))
    elif args.format == "svg":
        if not 1 <= args.index <= len(found):
            raise UsageError(f"--index {args.index} out of range, {len(found)} pictographs")
        _emit(args, render(found[args.index - 1], fmt="svg"))
    elif not found:
        _emit(args, f"{nu} does not occur in {lam}⊗{mu}")
    else:
        _emit(args, "\n\n".join(render(p) for p in found))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    """Map one point, or every point, of λ⊗μ onto λ⊗μ̄."""
    lam, mu = args.lam, args.mu
    if (args.nu is None) != (args.alpha is None):
        raise UsageError("--nu and --alpha go together")
    if args.nu is not None:
        point = map_point(lam, mu, args.nu, args.alpha)
        _emit(args, format_json(point.to_json()) if args.format == "json" else format_mapped(point))
        return 0
    report = verify_bijection(lam, mu)
    points = map_all(lam, mu) if args.all else None
    if args.format == "json":
        payload = report.to_json()
        if points is not None:
            payload["map"] = [p.to_json() for p in points]
        _emit(args, format_json(payload))
    else:
        _emit(args, format_bijection(report, points))
    return 0 if report.ok else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    """Brute-force decomposition, optionally diffed against the closed form."""
    if args.polytope:
        report = su4_polytope_check()
        text = format_json(report.to_json()) if args.format == "json" else format_polytope(report)
        _emit(args, text)
        return 0 if report.ok else 1
    if args.lam is None or args.mu is None:
        raise UsageError("oracle needs --lambda and --mu unless --polytope is given")
    table = decompose_oracle(args.lam, args.mu, method=args.method)
    if args.compare:
        closed = decompose(args.lam, args.mu, workers=args.workers)
        same = closed == table
        if args.format == "json":
            payload = {"closed": closed.to_json(), "oracle": table.to_json(), "equal": same}
            _emit(args, format_json(payload))
        else:
            _emit(args, format_oracle_diff(closed, table))
        return 0 if same else 1
    _emit(args, format_json(table.to_json()) if args.format == "json" else format_table(table))
    return 0


def _theorem_reports(lam: Weight, mu: Weight) -> tuple[Theorem1Report, Theorem2Report]:
    if lam.rank == 3:
        a, b = decompose(lam, mu), decompose(lam, conjugate(mu))
    else:
        a, b = decompose_oracle(lam, mu), decompose_oracle(lam, conjugate(mu))
    t1 = Theorem1Report(a.total(), b.total(), a.sum_of_squares(), b.sum_of_squares())
    t2 = Theorem2Report(tuple(a.multiplicities()), tuple(b.multiplicities()))
    return t1, t2


def cmd_verify(args: argparse.Namespace) -> int:
    """Theorem 1 / Theorem 2 for one pair, or a sweep over all small pairs."""
    checks = tuple(args.mode) if args.mode else THEOREM_CHOICES[args.theorem]
    if args.sweep is not None:
        summary = verify_sweep(
            args.sweep,
            checks,
            args.rank,
            workers=args.workers,
            sample=default_sample_pairs(args.rank) if args.sample is None else args.sample,
            seed=args.seed,
        )
        text = format_json(summary.to_json()) if args.format == "json" else format_sweep(summary)
        _emit(args, text)
        return 0 if summary.passed else 1

    if args.lam is None or args.mu is None:
        raise UsageError("verify needs --lambda and --mu, or --sweep N")
    lam, mu = args.lam, args.mu
    t1, t2 = _theorem_reports(lam, mu)
    ok = True
    payload: dict = {"lambda": lam.to_json(), "mu": mu.to_json()}
    blocks = []
    if "theorem1" in checks:
        payload["theorem1"] = t1.to_json()
        blocks.append(format_theorem1(lam, mu, t1))
        ok &= t1.equal
    if "theorem2" in checks:
        payload["theorem2"] = t2.to_json()
        blocks.append(format_theorem2(lam, mu, t2))
        ok &= t2.equal
    if "bijection" in checks:
        report = verify_bijection(lam, mu)
        payload["bijection"] = report.to_json()
        blocks.append(format_bijection(report))
        ok &= report.ok
    if "oracle" in checks:
        closed, brute = decompose(lam, mu), decompose_oracle(lam, mu)
        payload["oracle"] = {"equal": closed == brute}
        blocks.append(format_oracle_diff(closed, brute))
        ok &= closed == brute
    payload["passed"] = ok
    _emit(args, format_json(payload) if args.format == "json" else "\n\n".join(blocks))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _emit(args: argparse.Namespace, text: str) -> None:
    """Write to --output if given, stdout otherwise."""
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)


def _check_arguments(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    """Rank and format checks that argparse cannot express."""
    rank = getattr(args, "rank", DEFAULT_RANK)
    for flag, name in (("--lambda", "lam"), ("--mu", "mu"), ("--nu", "nu")):
        w = getattr(args, name, None)
        if w is not None and w.rank != rank:
            parser.error(f"{flag} {w} is an SU({w.rank}) weight, expected SU({rank})")
    if args.format == "svg" and not args.output:
        parser.error("--format svg writes to a file; give --output PATH")


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _report_error(e: LiecombError, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
    else:
        print(f"error: {e}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="Write the result to this file instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    common.add_argument(
        "--threads", type=int, help="Worker processes (default: $LIECOMB_THREADS or 1)"
    )
    common.add_argument("--seed", type=int, help="Sampling seed (default: $LIECOMB_SEED or 0)")
    return common


def _add_pair(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument(
        "--lambda", dest="lam", type=weight_arg, required=required, metavar="L", help="λ, e.g. 9,5"
    )
    p.add_argument("--mu", type=weight_arg, required=required, metavar="M", help="μ, e.g. 6,2")


def _add_format(p: argparse.ArgumentParser, choices: list[str]) -> None:
    p.add_argument("--format", "-f", choices=choices, default="text", help="Output format")


def build_parser() -> argparse.ArgumentParser:
    """Build the CLI argument parser."""
    parser = argparse.ArgumentParser(
        prog="liecomb",
        description="liecomb — exact SU(3) tensor-product multiplicities and conjugation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=textwrap.dedent("""\
            Examples:
              liecomb decompose --lambda 9,5 --mu 6,2            Decomposition table
              liecomb decompose --lambda 21,6 --mu 17,16 --nu 12,8
              liecomb census --lambda 21,6 --mu 17,16            σ(s) without decomposing
              liecomb polygon --lambda 10,4 --mu 7,3 -f svg -o p.svg --conjugate-mu
              liecomb honeycomb --lambda 21,6 --mu 17,16 --nu 12,8 --hive
              liecomb map --lambda 10,4 --mu 7,3 --all           Conjugation bijection
              liecomb oracle --rank 4 --lambda 1,2,2 --mu 2,1,3  SU(4) by Freudenthal/Klimyk
              liecomb verify --sweep 6 --theorem both            Exhaustive SU(3) check
        """),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_options()

    sub = parser.add_subparsers(dest="command", required=True)

    # --- decompose ---
    p_dec = sub.add_parser("decompose", parents=[common], help="Decompose λ⊗μ into irreps")
    _add_pair(p_dec)
    p_dec.add_argument("--nu", type=weight_arg, metavar="N", help="Only N_{λμ}^ν, by every route")
    _add_format(p_dec, ["text", "json", "svg"])
    p_dec.set_defaults(func=cmd_decompose)

    # --- census ---
    p_census = sub.add_parser("census", parents=[common], help="Count irreps per multiplicity")
    _add_pair(p_census)
    _add_format(p_census, ["text", "json"])
    p_census.set_defaults(func=cmd_census)

    # --- polygon ---
    p_poly = sub.add_parser("polygon", parents=[common], help="Nested multiplicity layers")
    _add_pair(p_poly)
    p_poly.add_argument(
        "--conjugate-mu", action="store_true", help="Overlay the layers of λ⊗μ̄"
    )
    p_poly.add_argument(
        "--axes",
        choices=["orthogonal", "root"],
        default="orthogonal",
        help="SVG axes (default: orthogonal)",
    )
    _add_format(p_poly, ["text", "json", "svg"])
    p_poly.set_defaults(func=cmd_polygon)

    # --- honeycomb ---
    p_honey = sub.add_parser("honeycomb", parents=[common], help="KT-honeycombs of a triple")
    _add_pair(p_honey)
    p_honey.add_argument("--nu", type=weight_arg, required=True, metavar="N")
    p_honey.add_argument("--alpha", type=int, help="Only this α (default: the whole interval)")
    p_honey.add_argument("--hive", action="store_true", help="Show the dual hives instead")
    _add_format(p_honey, ["text", "json"])
    p_honey.set_defaults(func=cmd_honeycomb)

    # --- pictograph ---
    p_pic = sub.add_parser("pictograph", parents=[common], help="Pictographs of a triple")
    _add_pair(p_pic)
    p_pic.add_argument("--nu", type=weight_arg, required=True, metavar="N")
    p_pic.add_argument("--kind", choices=list(PICTOGRAPH_KINDS), default="bz", help="Drawing style")
    p_pic.add_argument(
        "--index", type=int, default=1, help="Which pictograph to draw as SVG (1-based, default: 1)"
    )
    _add_format(p_pic, ["text", "json", "svg"])
    p_pic.set_defaults(func=cmd_pictograph)

    # --- map ---
    p_map = sub.add_parser("map", parents=[common], help="Conjugation bijection λ⊗μ → λ⊗μ̄")
    _add_pair(p_map)
    p_map.add_argument(
        "--nu", type=weight_arg, metavar="N", help="Map a single point (needs --alpha)"
    )
    p_map.add_argument("--alpha", type=int, help="α of the single point")
    p_map.add_argument("--all", action="store_true", help="List the image of every point")
    _add_format(p_map, ["text", "json"])
    p_map.set_defaults(func=cmd_map)

    # --- oracle ---
    p_oracle = sub.add_parser("oracle", parents=[common], help="Brute-force SU(N) decomposition")
    _add_pair(p_oracle, required=False)
    p_oracle.add_argument(
        "--rank", type=int, choices=SUPPORTED_ORACLE_RANKS, default=DEFAULT_RANK, help="N of SU(N)"
    )
    p_oracle.add_argument("--method", choices=["klimyk", "peel"], default="klimyk")
    p_oracle.add_argument(
        "--compare", action="store_true", help="Diff against the SU(3) closed form"
    )
    p_oracle.add_argument(
        "--polytope", action="store_true", help="Check the SU(4) polytope of (1,2,2)⊗(2,2,1)"
    )
    _add_format(p_oracle, ["text", "json"])
    p_oracle.set_defaults(func=cmd_oracle)

    # --- verify ---
    p_verify = sub.add_parser("verify", parents=[common], help="Check the conjugation theorems")
    _add_pair(p_verify, required=False)
    p_verify.add_argument(
        "--theorem",
        choices=list(THEOREM_CHOICES),
        default="both",
        help="Which theorem (default: both)",
    )
    p_verify.add_argument(
        "--mode",
        action="append",
        choices=SWEEP_CHECKS,
        help="Checks to run, repeatable; overrides --theorem",
    )
    p_verify.add_argument(
        "--sweep",
        type=non_negative,
        metavar="N",
        help="Every pair up to bound N instead of one pair",
    )
    p_verify.add_argument("--rank", type=int, choices=[3, 4], default=DEFAULT_RANK)
    p_verify.add_argument(
        "--sample",
        type=non_negative,
        nargs="?",
        const=None,
        default=0,
        metavar="N",
        help="Extra random pairs for --sweep; bare --sample draws the per-rank default",
    )
    _add_format(p_verify, ["text", "json"])
    p_verify.set_defaults(func=cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_arguments(parser, args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    _configure_logging(args.verbose)
    args.workers = resolve_workers(args.threads)
    args.seed = resolve_seed(args.seed)
    try:
        return args.func(args)
    except UsageError as e:
        try:
            parser.error(str(e))
        except SystemExit as exit_:
            return exit_.code if isinstance(exit_.code, int) else 2
    except LiecombError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        _report_error(e, args.format)
        return 1
    return 0


def main() -> None:
    """CLI entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
