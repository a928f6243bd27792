"""Exception hierarchy shared by the library, the CLI and the MCP server."""

from __future__ import annotations


class LiecombError(Exception):
    """Root of all liecomb domain errors (CLI exit code 1)."""


class RankError(LiecombError, ValueError):
    """Operation needs a different rank, or operand ranks disagree."""


class InvalidWeight(LiecombError, ValueError):
    """Negative or missing Dynkin labels, or unparsable weight text."""


class NotInProduct(LiecombError):
    """Triality is not conserved, so ν cannot occur in λ⊗μ."""


class InequalityViolation(LiecombError):
    """A hive parameter breaks some of the nine edge-orientation inequalities.

    ``violations`` lists (row, position) pairs, both 1-based, where row 1 holds the
    horizontal rhombi, row 2 the ``\\`` rhombi and row 3 the ``/`` rhombi.
    """

    def __init__(self, message: str, violations: list[tuple[int, int]]) -> None:
        super().__init__(message)
        self.violations = violations


class StepOutOfFiber(LiecombError):
    """Adding k copies of the virtual step pictograph leaves the non-negative fiber."""

    def __init__(self, message: str, k: int) -> None:
        super().__init__(message)
        self.k = k


class InvalidPoint(LiecombError):
    """(ν, α) is not a valid honeycomb point of the product."""


class OracleInconsistency(LiecombError, AssertionError):
    """An internal consistency check failed; indicates a bug, never bad input."""


class InvalidPictograph(LiecombError, ValueError):
    """Negative labels, or labels that break the hexagon constraint."""
