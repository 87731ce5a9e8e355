"""Integer factorization sized for desk-scale number theory.

Strategy: trial division by primes up to a configurable bound, then Brent's
variant of Pollard rho on whatever survives, certifying every reported prime
with primereg.primes.is_prime.  A wall-clock budget keeps adversarial inputs
(large semiprimes) from stalling the caller: on timeout the certified partial
result is raised inside PartialFactorizationError instead of being silently
truncated or, worse, reported as complete.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .constants import FACTOR_TIME_BUDGET, FACTOR_TRIAL_LIMIT
from .errors import PartialFactorizationError
from .primes import is_prime, primes_up_to

__all__ = ["Factorization", "factor", "omega"]

_trial_primes_cache: dict[int, np.ndarray] = {}


@dataclass(frozen=True)
class Factorization:
    """A complete factorization: ascending (prime, exponent) pairs."""

    n: int
    factors: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if math.prod(p**e for p, e in self.factors) != self.n:
            raise ValueError(f"factors do not multiply back to {self.n}")

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.factors)


def _trial_primes(limit: int) -> np.ndarray:
    if limit not in _trial_primes_cache:
        _trial_primes_cache[limit] = primes_up_to(limit)
    return _trial_primes_cache[limit]


def _brent_rho(n: int, deadline: float) -> int | None:
    """One nontrivial factor of composite n, or None if the deadline passed.

    Deterministic parameter schedule (c = 1, 2, 3, ...) so repeated runs
    split the same number the same way.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, r, q = 2, 1, 1
        g, ys = 1, y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                m = min(128, r - k)
                for _ in range(m):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                g = math.gcd(q, n)
                k += m
                if time.monotonic() > deadline:
                    return None
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(x - ys, n)
        if g != n:
            return g
        # cycle degenerated for this c; try the next increment
    return None


def factor(
    n: int,
    trial_limit: int = FACTOR_TRIAL_LIMIT,
    time_budget: float = FACTOR_TIME_BUDGET,
) -> Factorization:
    """Factor n completely or raise PartialFactorizationError.

    Raises ValueError for n < 1.  The budget applies to the rho stage only;
    trial division always runs to completion.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return Factorization(1, [])

    found: dict[int, int] = {}
    m = n
    for p in _trial_primes(trial_limit):
        p = int(p)
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if 1 < m <= trial_limit * trial_limit:
        # survived trial division below its square root, hence prime
        found[m] = found.get(m, 0) + 1
        m = 1

    deadline = time.monotonic() + time_budget
    pending = [m] if m > 1 else []
    unfinished: list[int] = []
    while pending:
        t = pending.pop()
        if is_prime(t):
            found[t] = found.get(t, 0) + 1
            continue
        root = math.isqrt(t)
        if root * root == t:
            pending += [root, root]
            continue
        d = _brent_rho(t, deadline)
        if d is None:
            unfinished.append(t)
            continue
        pending += [d, t // d]

    pairs = sorted(found.items())
    if unfinished:
        raise PartialFactorizationError(n, pairs, math.prod(unfinished))
    return Factorization(n, pairs)


def omega(n: int, **kwargs) -> int:
    """Distinct prime divisors of n; omega(1) = 0.

    Propagates PartialFactorizationError if n hides prime factors beyond
    the rho budget (never happens for ordinary desk-scale inputs).
    """
    return factor(n, **kwargs).omega
