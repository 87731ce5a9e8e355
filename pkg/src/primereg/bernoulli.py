"""Exact Bernoulli numbers and their classical identities.

Values are exact ``fractions.Fraction`` objects computed by the binomial
convolution recurrence

    sum_{j=0}^{m} C(m+1, j) B_j = 0,    B_0 = 1,  B_1 = -1/2,

specialized to even indices (odd B_j vanish for j >= 3, so the recurrence
collapses to a sum over even j plus the lone B_1 term).  The recurrence is
deliberately different from the Akiyama-Tanigawa scheme used as an oracle in
the test suite, so the two routes cross-check each other.

Computing B_n fills in every even index below n; the grown table is the unit
of caching (see primereg.cache) and is immutable once a prefix is complete,
which makes concurrent reads safe.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

import mpmath as mp
import numpy as np

from .constants import (
    BERNOULLI_INDEX_CEILING,
    EULER_CHECK_INDEX_CEILING,
    EULER_PARTIAL_SUM_CEILING,
)
from .errors import CeilingError
from .primes import primes_up_to

__all__ = [
    "BernoulliEntry",
    "BernoulliTable",
    "bernoulli",
    "default_table",
    "vsc_denominator",
    "zeta_negative_odd",
    "zeta_even_from_bernoulli",
    "euler_zeta_check",
    "EulerZetaCheck",
    "numerator_growth_report",
    "GrowthRow",
]


@dataclass(frozen=True)
class BernoulliEntry:
    """An even-index Bernoulli number with its log-magnitude metadata."""

    index: int
    value: Fraction
    log_abs_numerator: float

    def __post_init__(self):
        if self.index >= 2:
            k = self.index // 2
            expected_sign = 1 if k % 2 == 1 else -1
            if (1 if self.value > 0 else -1) != expected_sign:
                raise ValueError(f"B_{self.index} has the wrong sign")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator


class BernoulliTable:
    """Monotone table of exact Bernoulli numbers at even indices.

    Single writer, many readers: extension happens under a lock, and a
    completed prefix never changes.
    """

    def __init__(self, even_values: list[Fraction] | None = None):
        self._even: list[Fraction] = list(even_values) if even_values else [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        """Largest even index currently covered."""
        return 2 * (len(self._even) - 1)

    def even_values(self) -> list[Fraction]:
        """Snapshot of [B_0, B_2, B_4, ...]."""
        return list(self._even)

    def extend_to(self, n: int) -> None:
        if n > BERNOULLI_INDEX_CEILING:
            raise CeilingError(
                f"index {n} exceeds the exact-table ceiling {BERNOULLI_INDEX_CEILING}"
            )
        with self._lock:
            B = self._even
            for m in range(len(B), n // 2 + 1):
                idx = 2 * m
                s = Fraction(-(idx + 1), 2)  # the B_1 term, C(idx+1, 1) * (-1/2)
                for j in range(m):
                    s += comb(idx + 1, 2 * j) * B[j]
                B.append(-s / (idx + 1))

    def value(self, n: int) -> Fraction:
        """B_n, exact; B_1 = -1/2, zero at odd n >= 3."""
        if n < 0:
            raise ValueError(f"index must be >= 0, got {n}")
        if n == 1:
            return Fraction(-1, 2)
        if n % 2 == 1:
            return Fraction(0)
        if n > self.max_index:
            self.extend_to(n)
        return self._even[n // 2]

    def entry(self, n: int) -> BernoulliEntry:
        v = self.value(n)
        log_num = math.log(abs(v.numerator)) if abs(v.numerator) > 1 else 0.0
        return BernoulliEntry(n, v, log_num)


_default_table = BernoulliTable()


def default_table() -> BernoulliTable:
    """The process-wide shared table (what ``bernoulli`` reads)."""
    return _default_table


def bernoulli(n: int) -> Fraction:
    """Exact B_n under the B_1 = -1/2 convention."""
    return _default_table.value(n)


def _require_even_positive(two_k: int) -> None:
    if two_k < 2 or two_k % 2:
        raise ValueError(f"index must be even and >= 2, got {two_k}")


def vsc_denominator(two_k: int) -> int:
    """Product of all primes l with (l - 1) | two_k.

    By von Staudt-Clausen this equals den(B_two_k); the result is squarefree
    and always divisible by 6 (l = 2, 3 qualify for every even index).
    """
    _require_even_positive(two_k)
    return math.prod(
        int(l) for l in primes_up_to(two_k + 1) if two_k % (int(l) - 1) == 0
    )


def zeta_negative_odd(two_k: int) -> Fraction:
    """zeta(1 - two_k) = -B_two_k / two_k, exact and reduced."""
    _require_even_positive(two_k)
    return -bernoulli(two_k) / two_k


def zeta_even_from_bernoulli(two_k: int, dps: int = 60) -> mp.mpf:
    """zeta(two_k) from the closed form (-1)^(k+1) (2 pi)^2k B_2k / (2 (2k)!).

    Returned as a high-precision mpmath float; relative error is a handful
    of ulps at the requested precision regardless of how large the exact
    numerator and factorial get.
    """
    _require_even_positive(two_k)
    b = bernoulli(two_k)
    k = two_k // 2
    sign = 1 if k % 2 == 1 else -1
    with mp.workdps(dps):
        return (
            sign
            * (2 * mp.pi) ** two_k
            * mp.mpf(b.numerator)
            / (2 * mp.factorial(two_k) * b.denominator)
        )


class EulerZetaCheck(NamedTuple):
    passed: bool
    residual: float
    terms: int


def _partial_zeta_sum(two_k: int, n_terms: int, tolerance: float) -> mp.mpf:
    """sum_{n=1}^{N} n^(-two_k), accurate to well below ``tolerance``."""
    if tolerance < 1e-13:
        # float64 accumulation bottoms out around 1e-15; switch to mpmath
        if n_terms > 10_000_000:
            raise CeilingError(
                f"tolerance {tolerance} needs {n_terms} extended-precision terms"
            )
        with mp.workdps(40):
            return mp.fsum(mp.mpf(n) ** (-two_k) for n in range(1, n_terms + 1))
    chunk = 1 << 23
    partials = []
    for lo in range(1, n_terms + 1, chunk):
        hi = min(lo + chunk - 1, n_terms)
        r = 1.0 / np.arange(lo, hi + 1, dtype=np.float64)
        if two_k == 2:
            partials.append(float(np.dot(r, r)))
        else:
            partials.append(float(np.sum(r**two_k)))
    return mp.mpf(math.fsum(partials))


def euler_zeta_check(two_k: int, tolerance: float) -> EulerZetaCheck:
    """Compare the closed form for zeta(two_k) against a direct partial sum.

    The number of terms N is chosen so the integral tail bound
    N^(1-two_k) / (two_k - 1) sits below tolerance/2; the check then asserts
    |closed form - partial sum| <= tolerance and reports the residual.
    Rejects indices above EULER_CHECK_INDEX_CEILING and tolerances that
    would need more than EULER_PARTIAL_SUM_CEILING terms.
    """
    _require_even_positive(two_k)
    if two_k > EULER_CHECK_INDEX_CEILING:
        raise CeilingError(
            f"index {two_k} exceeds the euler-check ceiling {EULER_CHECK_INDEX_CEILING}"
        )
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    with mp.workdps(30):
        n_terms = int(mp.ceil((2 / (mp.mpf(tolerance) * (two_k - 1))) ** (mp.mpf(1) / (two_k - 1))))
    if n_terms > EULER_PARTIAL_SUM_CEILING:
        raise CeilingError(
            f"tolerance {tolerance} at index {two_k} needs {n_terms} terms "
            f"(ceiling {EULER_PARTIAL_SUM_CEILING})"
        )
    partial = _partial_zeta_sum(two_k, n_terms, tolerance)
    with mp.workdps(60):
        residual = float(abs(zeta_even_from_bernoulli(two_k) - partial))
    return EulerZetaCheck(residual <= tolerance, residual, n_terms)


class GrowthRow(NamedTuple):
    index: int
    log_abs_numerator: float
    bound: float
    holds: bool


def numerator_growth_report(m_max: int, c1: float) -> list[GrowthRow]:
    """Pointwise check of log|num(B_2k)| <= c1 * k * log(2k) for k <= m_max.

    Unit numerators report log 0; every row is included either way.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    table = default_table()
    table.extend_to(2 * m_max)
    rows = []
    for k in range(1, m_max + 1):
        e = table.entry(2 * k)
        bound = c1 * k * math.log(2 * k)
        rows.append(GrowthRow(2 * k, e.log_abs_numerator, bound, e.log_abs_numerator <= bound))
    return rows
