"""MCP server — exposes liecomb as MCP tools for LLM agents.

Thin wrappers over the multiplicity, honeycomb, conjmap and sweeps modules, rendered with
the formatter. Supports the stdio transport via the ``mcp`` Python SDK.

Usage:
    # stdio (Claude Desktop, VS Code Copilot, etc.)
    liecomb-mcp-stdio

    # Allow parallel sweeps
    LIECOMB_THREADS=4 liecomb-mcp-stdio
"""

from __future__ import annotations

import logging
import sys
from typing import Any

# MCP SDK is optional; main_stdio reports a missing install
_MCP_AVAILABLE = False
try:
    from mcp.server import Server
    from mcp.types import TextContent, Tool

    _MCP_AVAILABLE = True
except ImportError:
    Server = None  # type: ignore[assignment,misc]
    TextContent = None  # type: ignore[assignment,misc]
    Tool = None  # type: ignore[assignment,misc]

from .config import THEOREM_CHOICES, resolve_seed, resolve_workers  # noqa: E402
from .conjmap import map_all, map_point, verify_bijection  # noqa: E402
from .errors import LiecombError  # noqa: E402
from .formatter import (  # noqa: E402
    format_bijection,
    format_census,
    format_hive,
    format_honeycomb,
    format_json,
    format_mapped,
    format_sweep,
    format_table,
    format_theorem1,
    format_theorem2,
)
from .honeycomb import alpha_bounds, enumerate_honeycombs, to_hive  # noqa: E402
from .multiplicity import (  # noqa: E402
    census,
    decompose,
    mult,
    verify_theorem1,
    verify_theorem2,
)
from .sweeps import verify_sweep  # noqa: E402
from .weights import parse_weight  # noqa: E402

logger = logging.getLogger(__name__)

# SU(3) sweeps past this bound take minutes; the tool refuses them.
MAX_TOOL_SWEEP: int = 8

# ---------------------------------------------------------------------------
# Server factory
# ---------------------------------------------------------------------------


def create_mcp_server(name: str = "liecomb") -> Server:
    """Create and configure the MCP server with all liecomb tools."""
    if not _MCP_AVAILABLE:
        raise ImportError(
            "MCP SDK not installed. Install with:\n"
            "  pip install 'liecomb[mcp]'\n"
        )
    server = Server(name)
    _register_tools(server)
    _register_handlers(server)
    return server


# ---------------------------------------------------------------------------
# Tool definitions
# ---------------------------------------------------------------------------

_WEIGHT = {"type": "string", "description": "Dynkin labels, comma-separated, e.g. '9,5'."}
_FORMAT = {
    "type": "string",
    "description": "Output format: text (default) or json.",
    "enum": ["text", "json"],
    "default": "text",
}


def _pair_schema(*extra: str, **more: dict) -> dict:
    properties = {"lambda": _WEIGHT, "mu": _WEIGHT, "format": _FORMAT}
    properties.update({name: _WEIGHT for name in extra})
    properties.update(more)
    return {
        "type": "object",
        "properties": properties,
        "required": ["lambda", "mu", *extra],
    }


def _build_tools() -> list:
    """Build tool definitions. Returns empty list if MCP SDK not available."""
    if not _MCP_AVAILABLE:
        return []
    return [
        Tool(
            name="liecomb_decompose",
            description=(
                "Decompose the SU(3) tensor product λ⊗μ into irreducibles. "
                "Returns every ν with its multiplicity, grouped by multiplicity."
            ),
            inputSchema=_pair_schema(),
        ),
        Tool(
            name="liecomb_census",
            description=(
                "Count the irreducibles of λ⊗μ per multiplicity without decomposing: "
                "σ(s) for each s, the number M of distinct irreps and the largest multiplicity."
            ),
            inputSchema=_pair_schema(),
        ),
        Tool(
            name="liecomb_mult",
            description="The multiplicity of ν in λ⊗μ (0 when ν does not occur).",
            inputSchema=_pair_schema("nu"),
        ),
        Tool(
            name="liecomb_honeycomb",
            description=(
                "The KT-honeycombs of (λ, μ, ν), one per admissible α, "
                "or their dual hives when hive=true."
            ),
            inputSchema=_pair_schema(
                "nu", hive={"type": "boolean", "description": "Show hives.", "default": False}
            ),
        ),
        Tool(
            name="liecomb_map",
            description=(
                "Apply the conjugation bijection from the honeycomb points of λ⊗μ to those "
                "of λ⊗μ̄. With nu and alpha, maps one point; otherwise checks the whole map."
            ),
            inputSchema=_pair_schema(
                nu={**_WEIGHT, "description": "ν of a single point (needs alpha)."},
                alpha={"type": "integer", "description": "α of the single point."},
            ),
        ),
        Tool(
            name="liecomb_verify",
            description=(
                "Check Theorem 1 (equal total multiplicity) and Theorem 2 (equal multiplicity "
                "multisets) for λ⊗μ against λ⊗μ̄, for one pair or for every pair with labels "
                f"up to sweep (at most {MAX_TOOL_SWEEP})."
            ),
            inputSchema={
                "type": "object",
                "properties": {
                    "lambda": _WEIGHT,
                    "mu": _WEIGHT,
                    "theorem": {
                        "type": "string",
                        "enum": list(THEOREM_CHOICES),
                        "default": "both",
                    },
                    "sweep": {
                        "type": "integer",
                        "description": "Sweep all pairs with labels ≤ sweep instead of one pair.",
                    },
                    "format": _FORMAT,
                },
            },
        ),
    ]


# Module-level TOOLS, empty without the MCP SDK
TOOLS: list = _build_tools()


def _register_tools(server: Server) -> None:
    """Register tool listing handler."""

    @server.list_tools()
    async def list_tools() -> list[Tool]:
        return TOOLS


# ---------------------------------------------------------------------------
# Tool handlers
# ---------------------------------------------------------------------------


def _text_response(text: str) -> list[TextContent]:
    """Wrap a string as MCP TextContent."""
    return [TextContent(type="text", text=text)]


def _register_handlers(server: Server) -> None:
    """Register all tool call handlers."""

    @server.call_tool()
    async def call_tool(name: str, arguments: dict[str, Any]) -> list[TextContent]:
        handler = HANDLERS.get(name)
        if handler is None:
            return _text_response(f"Unknown tool: {name}")
        try:
            return _text_response(handler(arguments))
        except LiecombError as e:
            return _text_response(f"Error: {e}")
        except Exception as e:
            logger.exception("Tool %s failed", name)
            return _text_response(f"Error in {name}: {e}")


# ---------------------------------------------------------------------------
# Individual tool handlers
# ---------------------------------------------------------------------------


def _weights(args: dict[str, Any], *names: str):
    return [parse_weight(str(args[n])) for n in names]


def _handle_decompose(args: dict[str, Any]) -> str:
    lam, mu = _weights(args, "lambda", "mu")
    table = decompose(lam, mu, workers=resolve_workers())
    return format_json(table.to_json()) if args.get("format") == "json" else format_table(table)


def _handle_census(args: dict[str, Any]) -> str:
    lam, mu = _weights(args, "lambda", "mu")
    result = census(lam, mu)
    if args.get("format") == "json":
        return format_json({"lambda": lam.to_json(), "mu": mu.to_json(), **result.to_json()})
    return format_census(lam, mu, result)


def _handle_mult(args: dict[str, Any]) -> str:
    lam, mu, nu = _weights(args, "lambda", "mu", "nu")
    value = mult(lam, mu, nu)
    if args.get("format") == "json":
        return format_json(
            {"lambda": lam.to_json(), "mu": mu.to_json(), "nu": nu.to_json(), "mult": value}
        )
    return f"N({lam}⊗{mu} → {nu}) = {value}"


def _handle_honeycomb(args: dict[str, Any]) -> str:
    lam, mu, nu = _weights(args, "lambda", "mu", "nu")
    combs = enumerate_honeycombs(lam, mu, nu)
    hive = bool(args.get("hive"))
    if args.get("format") == "json":
        payload = {
            "interval": alpha_bounds(lam, mu, nu).to_json(),
            "honeycombs": [h.to_json() for h in combs],
        }
        if hive:
            payload["hives"] = [to_hive(h).to_json() for h in combs]
        return format_json(payload)
    if not combs:
        return f"{nu} does not occur in {lam}⊗{mu}"
    if hive:
        return "\n\n".join(format_hive(to_hive(h)) for h in combs)
    return "\n\n".join(format_honeycomb(h) for h in combs)


def _handle_map(args: dict[str, Any]) -> str:
    lam, mu = _weights(args, "lambda", "mu")
    as_json = args.get("format") == "json"
    if args.get("nu") is not None:
        if args.get("alpha") is None:
            return "Error: nu needs alpha"
        (nu,) = _weights(args, "nu")
        point = map_point(lam, mu, nu, int(args["alpha"]))
        return format_json(point.to_json()) if as_json else format_mapped(point)
    report = verify_bijection(lam, mu)
    if as_json:
        return format_json({**report.to_json(), "map": [p.to_json() for p in map_all(lam, mu)]})
    return format_bijection(report, map_all(lam, mu))


def _handle_verify(args: dict[str, Any]) -> str:
    checks = THEOREM_CHOICES[args.get("theorem", "both")]
    as_json = args.get("format") == "json"
    if args.get("sweep") is not None:
        bound = int(args["sweep"])
        if not 0 <= bound <= MAX_TOOL_SWEEP:
            return f"Error: sweep must be between 0 and {MAX_TOOL_SWEEP}, got {bound}"
        summary = verify_sweep(bound, checks, workers=resolve_workers(), seed=resolve_seed())
        return format_json(summary.to_json()) if as_json else format_sweep(summary)
    if "lambda" not in args or "mu" not in args:
        return "Error: give lambda and mu, or sweep"
    lam, mu = _weights(args, "lambda", "mu")
    payload: dict = {"lambda": lam.to_json(), "mu": mu.to_json()}
    blocks = []
    if "theorem1" in checks:
        t1 = verify_theorem1(lam, mu)
        payload["theorem1"] = t1.to_json()
        blocks.append(format_theorem1(lam, mu, t1))
    if "theorem2" in checks:
        t2 = verify_theorem2(lam, mu)
        payload["theorem2"] = t2.to_json()
        blocks.append(format_theorem2(lam, mu, t2))
    return format_json(payload) if as_json else "\n\n".join(blocks)


HANDLERS = {
    "liecomb_decompose": _handle_decompose,
    "liecomb_census": _handle_census,
    "liecomb_mult": _handle_mult,
    "liecomb_honeycomb": _handle_honeycomb,
    "liecomb_map": _handle_map,
    "liecomb_verify": _handle_verify,
}


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def main_stdio() -> None:
    """Run the MCP server over stdio transport."""
    if not _MCP_AVAILABLE:
        print(
            "ERROR: MCP SDK not installed.\nInstall with:\n  pip install 'liecomb[mcp]'",
            file=sys.stderr,
        )
        sys.exit(1)

    import asyncio

    from mcp.server.stdio import stdio_server

    server = create_mcp_server()

    async def run() -> None:
        async with stdio_server() as (read_stream, write_stream):
            await server.run(read_stream, write_stream, server.create_initialization_options())

    asyncio.run(run())


if __name__ == "__main__":
    main_stdio()
