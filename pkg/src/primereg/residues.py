"""Bernoulli residues mod p by two independent routes; irregular pairs.

Route one (``residues_exact``) reduces the exact table entry:
num(B_2k) * den(B_2k)^(-1) mod p.  Route two (``residues_powersum``) never
touches the exact values: it computes S = sum_{a=1}^{p-1} a^2k mod p^2,
checks p | S, and reads the residue off S/p mod p.  The two must agree
entrywise wherever both are affordable; route two is the scalable one and
backs the census, route one is the desk-scale oracle.

Both routes are valid on the full range 2 <= 2k <= p - 3: von Staudt-Clausen
keeps p out of den(B_2k) there (that would need (p-1) | 2k), and the
Faulhaber expansion of S mod p^2 collapses to B_2k * p for the same reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .bernoulli import BernoulliTable, default_table
from .constants import POWERSUM_VECTOR_MAX_P
from .errors import CongruenceError
from .primes import is_prime

__all__ = [
    "IrregularPair",
    "ResidueTable",
    "power_sums_mod_p2",
    "residues_powersum",
    "residues_exact",
    "irregular_pairs",
    "seed_pair_cache",
    "clear_pair_cache",
    "padic_valuation_zeta",
    "powersum_congruence_mismatches",
]


class IrregularPair(NamedTuple):
    """A prime p together with an even index 2k <= p - 3 where p | num(B_2k)."""

    p: int
    two_k: int


@dataclass
class ResidueTable:
    """Residues of B_2k mod p for even 2k in [2, cap]; immutable by convention."""

    p: int
    residues: dict[int, int] = field(default_factory=dict)

    def zero_indices(self) -> list[int]:
        return sorted(k for k, r in self.residues.items() if r == 0)


def _validate(p: int, cap: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if cap % 2 or not 2 <= cap <= p - 3:
        raise ValueError(f"cap must be even with 2 <= cap <= p - 3, got {cap} (p = {p})")


def power_sums_mod_p2(p: int, cap: int) -> dict[int, int]:
    """S_2k = sum_{a=1}^{p-1} a^2k mod p^2 for every even 2k in [2, cap].

    Vectorized in uint64 for p <= POWERSUM_VECTOR_MAX_P: all values live in
    [0, p^2), so products are <= (p^2 - 1)^2 < 2^64 and the accumulated sum
    is <= (p - 1)(p^2 - 1) < 2^48 * 2^16 = 2^64 -- no overflow possible.
    Larger p use exact Python integers (slower, correct at any size).
    """
    _validate(p, cap)
    p2 = p * p
    half = cap // 2
    out: dict[int, int] = {}
    if p <= POWERSUM_VECTOR_MAX_P:
        a = np.arange(1, p, dtype=np.uint64)
        t = (a * a) % np.uint64(p2)
        c = t.copy()
        for k in range(1, half + 1):
            out[2 * k] = int(c.sum()) % p2
            if k < half:
                np.multiply(c, t, out=c)
                np.mod(c, np.uint64(p2), out=c)
    else:
        sums = [0] * half
        for a in range(1, p):
            t = a * a % p2
            c = t
            sums[0] += c
            for k in range(1, half):
                c = c * t % p2
                sums[k] += c
        for k in range(1, half + 1):
            out[2 * k] = sums[k - 1] % p2
    return out


def residues_powersum(p: int, cap: int) -> ResidueTable:
    """Residue table from power sums mod p^2, independent of the exact table.

    Raises CongruenceError if some S_2k is not divisible by p; for in-range
    arguments that can only mean an implementation bug.
    """
    table = ResidueTable(p)
    for two_k, s in power_sums_mod_p2(p, cap).items():
        if s % p:
            raise CongruenceError(f"p = {p}: power sum at 2k = {two_k} is not divisible by p")
        table.residues[two_k] = (s // p) % p
    return table


def residues_exact(p: int, cap: int, table: BernoulliTable | None = None) -> ResidueTable:
    """Residue table by direct reduction of the exact Bernoulli values.

    Needs the exact table up to ``cap``, so this is the small-cap oracle
    route; (p - 1) never divides 2k <= p - 3, hence den(B_2k) is invertible
    mod p throughout.
    """
    _validate(p, cap)
    table = table or default_table()
    table.extend_to(cap)
    out = ResidueTable(p)
    for two_k in range(2, cap + 1, 2):
        v = table.value(two_k)
        out.residues[two_k] = v.numerator * pow(v.denominator, -1, p) % p
    return out


_pair_cache: dict[int, tuple[IrregularPair, ...]] = {}


def irregular_pairs(p: int, use_cache: bool = True) -> list[IrregularPair]:
    """All irregular pairs (p, 2k), 2 <= 2k <= p - 3, ascending.

    Empty exactly when p is regular.  Uses the scalable power-sum route;
    results are memoized per prime because the census reuses them heavily.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if use_cache and p in _pair_cache:
        return list(_pair_cache[p])
    zeros = residues_powersum(p, p - 3).zero_indices()
    pairs = [IrregularPair(p, two_k) for two_k in zeros]
    if use_cache:
        _pair_cache[p] = tuple(pairs)
    return pairs


def seed_pair_cache(items: dict[int, tuple[IrregularPair, ...]]) -> None:
    """Merge precomputed irregular pairs (e.g. from census workers)."""
    _pair_cache.update(items)


def cached_pairs(p: int) -> tuple[IrregularPair, ...] | None:
    """The memoized full pair list for p, or None if not computed yet."""
    return _pair_cache.get(p)


def clear_pair_cache() -> None:
    _pair_cache.clear()


def _valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation_zeta(p: int, two_k: int, table: BernoulliTable | None = None) -> int:
    """p-adic valuation of zeta(1 - 2k) = -B_2k / 2k, exact.

    Computed literally as v_p(num) - v_p(den) - v_p(2k); in range the last
    two terms vanish (p does not divide den(B_2k) or 2k), so the result is
    v_p(num(B_2k)): zero exactly when (p, 2k) is not an irregular pair.
    """
    _validate(p, two_k)
    table = table or default_table()
    v = table.value(two_k)
    return _valuation(v.numerator, p) - _valuation(v.denominator, p) - _valuation(two_k, p)


def powersum_congruence_mismatches(p: int, table: BernoulliTable | None = None) -> int:
    """Count of even 2k in [2, p-3] where S_2k != B_2k * p (mod p^2), exactly.

    The comparison interprets B_2k mod p^2 as num * den^(-1) mod p^2 (den is
    a unit mod p^2 in range).  Zero mismatches is the expected outcome for
    every prime p >= 5.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    table = table or default_table()
    cap = p - 3 if p >= 7 else 2
    table.extend_to(cap)
    p2 = p * p
    sums = power_sums_mod_p2(p, cap)
    bad = 0
    for two_k in range(2, cap + 1, 2):
        v = table.value(two_k)
        expected = v.numerator * pow(v.denominator, -1, p2) * p % p2
        if sums[two_k] != expected:
            bad += 1
    return bad
