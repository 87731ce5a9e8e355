"""Partial regularity: the sqrt(p)/(log p)^alpha cutoff and the desk census.

A prime p is *m-regular* when p divides no num(B_2k) for even
2k <= min(m, p - 3), and *partially regular* at exponent alpha when it is
m_alpha(p)-regular for the cutoff m_alpha(p) = floor(sqrt(p)/(log p)^alpha).
The census counts the primes p <= X that fail this and places the count next
to the bound 10 * X / (log X)^(2 alpha).
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

import mpmath as mp

from .bernoulli import BernoulliTable, default_table
from .constants import CENSUS_BOUND_CONSTANT, CENSUS_DEFAULT_CEILING, SIEGEL_CONSTANT
from .errors import CeilingError
from .primes import is_prime, primes_up_to
from .residues import (
    IrregularPair,
    irregular_pairs,
    residues_exact,
    residues_powersum,
    seed_pair_cache,
)

__all__ = [
    "CensusRecord",
    "m_alpha",
    "is_m_regular",
    "is_partially_regular",
    "census",
    "census_exceptions_exact",
    "siegel_report",
    "SiegelReport",
    "siegel_density_table",
]


def _validate_alpha(alpha: float) -> None:
    if not alpha > 0.5:
        raise ValueError(f"alpha must be > 1/2, got {alpha}")


def m_alpha(p: int, alpha: float) -> int:
    """floor(sqrt(p) / (log p)^alpha), with the floor taken exactly.

    The value can sit arbitrarily close to an integer and an off-by-one here
    changes census membership, so the quotient is evaluated in mpmath and
    the precision is doubled until the distance to the nearest integer
    exceeds the evaluation error bound (40 guard bits per level).
    """
    if p < 3:
        raise ValueError(f"p must be >= 3, got {p}")
    _validate_alpha(alpha)
    prec = 80
    while prec <= 5120:
        with mp.workprec(prec):
            v = mp.sqrt(p) / mp.log(p) ** mp.mpf(alpha)
            if abs(v - mp.nint(v)) > mp.mpf(2) ** (40 - prec):
                return int(mp.floor(v))
        prec *= 2
    raise ArithmeticError(f"could not certify floor(sqrt({p})/log({p})^{alpha})")


def _even_cap(p: int, m: int) -> int:
    cap = min(m, p - 3)
    return cap - (cap % 2)


def is_m_regular(p: int, m: int) -> bool:
    """True iff no irregular pair (p, 2k) exists with 2k <= min(m, p - 3).

    Vacuously true when the range is empty.  Uses the power-sum route
    (or the cached full pair list when one exists).
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    cap = _even_cap(p, m)
    if cap < 2:
        return True
    known = cached_pairs(p)
    if known is not None:
        return not any(pair.two_k <= cap for pair in known)
    if cap >= p - 3:
        return not irregular_pairs(p)
    return not residues_powersum(p, cap).zero_indices()


def is_partially_regular(p: int, alpha: float) -> bool:
    """m_alpha(p)-regularity: the composition of the two operations above."""
    return is_m_regular(p, m_alpha(p, alpha))


@dataclass
class CensusRecord:
    """Outcome of one census run.

    ``exceptions`` lists every failing (p, 2k) with 2k inside p's cutoff;
    ``exception_count`` counts the distinct failing primes, matching the
    quantity the 10 * X / (log X)^(2 alpha) bound refers to.
    ``siegel_fraction`` is the fraction of primes <= X that are irregular
    at all (full range 2k <= p - 3), for comparison with the heuristic
    density 1 - e^(-1/2).
    """

    x_bound: int
    alpha: float
    exceptions: list[IrregularPair] = field(default_factory=list)
    exception_count: int = 0
    paper_bound: float = 0.0
    siegel_fraction: float = 0.0


def _bound_value(x_bound: int, alpha: float) -> float:
    if x_bound < 2:
        return 0.0
    return CENSUS_BOUND_CONSTANT * x_bound / math.log(x_bound) ** (2 * alpha)


def _pairs_chunk(chunk: list[int]) -> list[tuple[int, tuple[IrregularPair, ...]]]:
    return [(p, tuple(irregular_pairs(p, use_cache=False))) for p in chunk]


def _full_pairs(ps: list[int], jobs: int) -> dict[int, tuple[IrregularPair, ...]]:
    """Irregular pairs for every prime in ps, optionally across processes.

    Chunks are merged in ascending-prime order, so the outcome (and any
    output derived from it) is identical for every parallelism degree.
    """
    from . import residues as _res

    todo = [p for p in ps if p not in _res._pair_cache]
    if todo and jobs > 1:
        n_chunks = max(jobs * 4, 1)
        size = max(1, math.ceil(len(todo) / n_chunks))
        chunks = [todo[i : i + size] for i in range(0, len(todo), size)]
        fresh: dict[int, tuple[IrregularPair, ...]] = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_pairs_chunk, chunks):
                fresh.update(part)
        seed_pair_cache(fresh)
    elif todo:
        for p in todo:
            irregular_pairs(p)
    return {p: _res._pair_cache[p] for p in ps}


def census(
    x_bound: int,
    alpha: float,
    jobs: int = 1,
    ceiling: int = CENSUS_DEFAULT_CEILING,
) -> CensusRecord:
    """Count the primes p <= x_bound that are not m_alpha(p)-regular.

    Primes 2 and 3 have an empty index range and count as trivially regular.
    Every prime p >= 5 gets its full irregular-pair list (memoized; this is
    the expensive part, cost ~ p^2/2 per prime), from which both the capped
    exception scan and the irregular-density column are read off.
    """
    if x_bound < 0:
        raise ValueError(f"x_bound must be >= 0, got {x_bound}")
    _validate_alpha(alpha)
    if x_bound > ceiling:
        raise CeilingError(f"x_bound {x_bound} exceeds the census ceiling {ceiling}")
    if ceiling > CENSUS_DEFAULT_CEILING:
        warnings.warn(
            f"census above {CENSUS_DEFAULT_CEILING} gets slow: the full-range "
            "sieve behind the irregular-density column costs ~p^2/2 per prime",
            RuntimeWarning,
            stacklevel=2,
        )
    ps = [int(p) for p in primes_up_to(x_bound)]
    work = [p for p in ps if p >= 5]
    pairs_by_p = _full_pairs(work, jobs)

    exceptions: list[IrregularPair] = []
    irregular_count = 0
    for p in work:
        pairs = pairs_by_p[p]
        if pairs:
            irregular_count += 1
        cap = _even_cap(p, m_alpha(p, alpha))
        exceptions.extend(pair for pair in pairs if pair.two_k <= cap)

    return CensusRecord(
        x_bound=x_bound,
        alpha=alpha,
        exceptions=exceptions,
        exception_count=len({pair.p for pair in exceptions}),
        paper_bound=_bound_value(x_bound, alpha),
        siegel_fraction=irregular_count / len(ps) if ps else 0.0,
    )


def census_exceptions_exact(
    x_bound: int, alpha: float, table: BernoulliTable | None = None
) -> list[IrregularPair]:
    """The census exception list by the exact-reduction route (oracle path).

    Only the capped range 2k <= m_alpha(p) is scanned, which keeps the exact
    table requirement at m_alpha(x_bound) or so -- affordable where the
    power-sum census is, for cross-validation.
    """
    _validate_alpha(alpha)
    table = table or default_table()
    out: list[IrregularPair] = []
    for p in (int(q) for q in primes_up_to(x_bound)):
        if p < 5:
            continue
        cap = _even_cap(p, m_alpha(p, alpha))
        if cap < 2:
            continue
        zeros = residues_exact(p, cap, table).zero_indices()
        out.extend(IrregularPair(p, two_k) for two_k in zeros)
    return out


class SiegelReport(NamedTuple):
    fraction: float
    reference: float


def siegel_report(x_bound: int, jobs: int = 1) -> SiegelReport:
    """Observed irregular fraction among primes <= x_bound vs 1 - e^(-1/2).

    Heuristic comparison only -- there is nothing to pass or fail.
    """
    ps = [int(p) for p in primes_up_to(x_bound)]
    if not ps:
        return SiegelReport(0.0, SIEGEL_CONSTANT)
    work = [p for p in ps if p >= 5]
    pairs_by_p = _full_pairs(work, jobs)
    irregular = sum(1 for p in work if pairs_by_p[p])
    return SiegelReport(irregular / len(ps), SIEGEL_CONSTANT)


def siegel_density_table(x_bound: int, jobs: int = 1) -> list[tuple[int, float]]:
    """Running irregular density after each prime <= x_bound.

    Rows (p, fraction of irregular primes among primes <= p); this is the
    plot-data behind the density comparison.
    """
    ps = [int(p) for p in primes_up_to(x_bound)]
    work = [p for p in ps if p >= 5]
    pairs_by_p = _full_pairs(work, jobs)
    rows = []
    irregular = 0
    for i, p in enumerate(ps, 1):
        if p >= 5 and pairs_by_p[p]:
            irregular += 1
        rows.append((p, irregular / i))
    return rows
