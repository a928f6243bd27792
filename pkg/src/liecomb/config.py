"""Constants and configuration for liecomb."""

from __future__ import annotations

import logging
import os

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# Ranks and output kinds
# ---------------------------------------------------------------------------

DEFAULT_RANK: int = 3

SUPPORTED_ORACLE_RANKS: tuple[int, ...] = (2, 3, 4)

OUTPUT_FORMATS: list[str] = ["text", "json", "svg"]

PICTOGRAPH_KINDS: dict[str, str] = {
    "bz": "BZ-triangle",
    "oblade": "O-blade",
    "su3honey": "SU(3)-honeycomb",
}

CASE_LABELS: dict[int, str] = {
    1: "case1",
    2: "case2",
    3: "case3",
}

REGIMES: list[str] = ["reflection", "translation"]

# ---------------------------------------------------------------------------
# Environment
# ---------------------------------------------------------------------------

THREADS_ENV: str = "LIECOMB_THREADS"
SEED_ENV: str = "LIECOMB_SEED"

DEFAULT_SEED: int = 0

# Random sample sizes for the sampled sweeps.
SU3_SAMPLE_PAIRS: int = 500
SU4_SAMPLE_PAIRS: int = 500

# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

SVG_CELL: int = 18
SVG_MARGIN: int = 24
SVG_DOT_RADIUS: float = 3.5

# Fill per multiplicity; multiplicities past the palette reuse the last colour.
MULT_COLORS: list[str] = [
    "#000000",
    "#d62728",
    "#2ca02c",
    "#1f77b4",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
]

LAYER_STROKE: str = "#555555"
OVERLAY_STROKE: str = "#1f77b4"
THICK_STROKE: float = 3.0
THIN_STROKE: float = 1.0


def mult_color(mult: int) -> str:
    """Return the SVG fill colour for a multiplicity (1-based)."""
    return MULT_COLORS[min(mult, len(MULT_COLORS)) - 1]


def resolve_workers(explicit: int | None = None) -> int:
    """Determine the worker count for sweeps.

    Resolution order:
      1. Explicit ``--threads`` argument
      2. ``LIECOMB_THREADS`` environment variable
      3. 1 (serial)
    """
    if explicit is not None:
        return max(1, explicit)

    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning("%s=%r is not an integer, running serially", THREADS_ENV, env)
    return 1


def resolve_seed(explicit: int | None = None) -> int:
    """Determine the sampling seed: ``--seed``, then ``LIECOMB_SEED``, then 0."""
    if explicit is not None:
        return explicit

    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            logger.warning("%s=%r is not an integer, using %d", SEED_ENV, env, DEFAULT_SEED)
    return DEFAULT_SEED


def default_sample_pairs(rank: int) -> int:
    """Random pairs drawn by a bare ``--sample``."""
    return SU4_SAMPLE_PAIRS if rank == 4 else SU3_SAMPLE_PAIRS


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

SWEEP_CHECKS: list[str] = ["theorem1", "theorem2", "bijection", "oracle"]

THEOREM_CHOICES: dict[str, tuple[str, ...]] = {
    "1": ("theorem1",),
    "2": ("theorem2",),
    "both": ("theorem1", "theorem2"),
}

# Labels of randomly drawn SU(3) pairs stay below this bound.
SU3_SAMPLE_MAX_LABEL: int = 20

# SU(4) pairs with level(λ) + level(μ) up to this bound are swept exhaustively by default.
SU4_DEFAULT_LEVEL: int = 7

# The pair whose SU(4) product has a multiplicity 8 while its conjugate pairing stays ≤ 7.
SU4_THEOREM2_WITNESS: tuple[tuple[int, ...], tuple[int, ...]] = ((1, 2, 2), (2, 1, 3))
