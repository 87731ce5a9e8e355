"""Exception types shared across the toolkit.

Each class maps to a distinct CLI exit code (see primereg.cli).
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit-specific failures."""


class CeilingError(ToolkitError):
    """An input exceeds a documented resource ceiling.

    Raised instead of silently degrading precision or stalling; the message
    names the ceiling so callers can raise it deliberately.
    """


class CongruenceError(ToolkitError):
    """A power sum failed the divisibility its congruence guarantees.

    This signals an implementation bug or an out-of-validity input, never an
    expected outcome for in-range arguments.
    """


class CacheError(ToolkitError):
    """A cache file failed validation on load."""


class PartialFactorizationError(ToolkitError):
    """Factoring ran out of budget; carries the certified partial result.

    ``factors`` holds the certified (prime, exponent) pairs found so far and
    ``cofactor`` the remaining unfactored part (> 1, composite or of unknown
    status). ``len(factors)`` is therefore a sound lower bound on the number
    of distinct prime divisors.
    """

    def __init__(self, n: int, factors: list[tuple[int, int]], cofactor: int):
        self.n = n
        self.factors = factors
        self.cofactor = cofactor
        super().__init__(
            f"factorization budget exhausted for {n}: "
            f"{len(factors)} certified prime(s), cofactor {cofactor}"
        )
