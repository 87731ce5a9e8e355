"""Prime sieves, counting functions, and primality testing.

The sieve functions are numpy-backed and exact; ``theta`` is the one floating
quantity and uses compensated summation (pairwise numpy partial sums combined
with math.fsum) so it stays within ~1e-12 relative error at the default
ceiling of 1e8.
"""

from __future__ import annotations

import math
import random
from typing import Iterator

import numpy as np

from .constants import THETA_PI_CEILING
from .errors import CeilingError

__all__ = [
    "primes_up_to",
    "iter_prime_segments",
    "prime_pi",
    "theta",
    "first_primes",
    "primorial",
    "is_prime",
    "theta_prefix_at_primes",
]

_SEGMENT_SIZE = 1 << 21

# Deterministic Miller-Rabin with these bases is correct below this bound
# (Sorenson & Webster).
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (simple full sieve)."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def iter_prime_segments(limit: int, segment_size: int = _SEGMENT_SIZE) -> Iterator[np.ndarray]:
    """Yield primes <= limit in ascending segments (memory O(segment_size))."""
    if limit < 2:
        return
    base = primes_up_to(math.isqrt(limit))
    yield base[base <= limit]
    lo = math.isqrt(limit) + 1
    while lo <= limit:
        hi = min(lo + segment_size - 1, limit)
        seg = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            seg[start - lo :: p] = False
        yield (np.nonzero(seg)[0] + lo).astype(np.int64)
        lo = hi + 1


def _check_ceiling(x: float, ceiling: int) -> int:
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    n = math.floor(x)
    if n > ceiling:
        raise CeilingError(f"x = {x} exceeds the sieve ceiling {ceiling}")
    return n


def prime_pi(x: float, ceiling: int = THETA_PI_CEILING) -> int:
    """Exact count of primes <= x (segmented sieve)."""
    n = _check_ceiling(x, ceiling)
    return sum(seg.size for seg in iter_prime_segments(n))


def theta(x: float, ceiling: int = THETA_PI_CEILING) -> float:
    """Chebyshev theta: the sum of log p over primes p <= x.

    Each segment is summed pairwise by numpy and the per-segment totals are
    combined with math.fsum, keeping the result well inside 1e-9 relative
    error at the default ceiling.
    """
    n = _check_ceiling(x, ceiling)
    partials = [float(np.log(seg.astype(np.float64)).sum()) for seg in iter_prime_segments(n)]
    return math.fsum(partials)


def theta_prefix_at_primes(t_max: int) -> np.ndarray:
    """theta evaluated at the first ``t_max`` primes, as a cumulative array.

    Entry i is theta(p_{i+1}); the cumulative-sum error stays below
    ~t_max * eps relative, which is ample for 1e-9 comparisons.
    """
    ps = first_primes(t_max)
    return np.cumsum(np.log(ps.astype(np.float64)))


def first_primes(t: int) -> np.ndarray:
    """The first t primes."""
    if t < 1:
        raise ValueError("t must be >= 1")
    # p_t < t (log t + log log t) for t >= 6; small t handled by the floor
    bound = 15 if t < 6 else int(t * (math.log(t) + math.log(math.log(t)))) + 10
    ps = primes_up_to(bound)
    while ps.size < t:
        bound *= 2
        ps = primes_up_to(bound)
    return ps[:t]


def primorial(t: int) -> int:
    """Product of the first t primes, exact."""
    return math.prod(int(p) for p in first_primes(t))


def _miller_rabin(n: int, base: int) -> bool:
    """Strong probable-prime test; True means 'passes for this base'."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base % n, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge parameter selection."""
    if math.isqrt(n) ** 2 == n:
        return False  # squares never admit Jacobi(D, n) = -1
    # find D = 5, -7, 9, ... with Jacobi(D, n) = -1
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == 0:
            return abs(d) == n  # shared factor
        if j == -1:
            break
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    k = n + 1
    s = (k & -k).bit_length() - 1
    t = k >> s

    u, v, qk = 1, p, q
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v, qk = u // 2 % n, v // 2 % n, qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return 0 if n != 1 else result


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < ~3.3e24.

    Below the Sorenson-Webster bound this is exact (fixed Miller-Rabin
    bases); above it, Baillie-PSW plus 16 seeded random Miller-Rabin rounds
    (no counterexample to either is known).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_miller_rabin(n, b) for b in _MR_BASES)
    if not _miller_rabin(n, 2) or not _strong_lucas(n):
        return False
    rng = random.Random(n)
    return all(_miller_rabin(n, rng.randrange(3, n - 1)) for _ in range(16))
