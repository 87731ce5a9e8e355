"""Engineering constants and resource ceilings.

The growth and divisor-count inequalities this package verifies only assert
that *some* absolute constant works; the concrete values below are pinned by
exact sweeps at desk scale (see tests) and are deliberately generous. They are
engineering choices, not mathematical optima, and several can be overridden
through a constants file (see primereg.config).
"""

from __future__ import annotations

import math

# --- pinned constants for the inequality sweeps ---------------------------

#: log|num(B_2k)| <= C1 * k * log(2k).  Empirical max of the ratio on
#: k <= 200 is ~1.09, so 9 leaves an order of magnitude of headroom.
C1_NUMERATOR_GROWTH = 9.0

#: log P_m <= C2 * m^2 * log m for the product P_m of |num(B_2k)|, k <= m.
#: Empirical max of the ratio on m in [2, 200] is ~0.52.
C2_PRODUCT_GROWTH = 2.0

#: omega(n) <= C3 * log n / log log n.  The primorial family is the worst
#: case and stays below 8 at every desk scale.
C3_OMEGA_BOUND = 8.0

#: Constant in the census bound  count <= 10 * X / (log X)^(2*alpha).
CENSUS_BOUND_CONSTANT = 10.0

#: Smallest m such that log P_m >= m log m holds for every m' in [m, 200]
#: (exact sweep; the inequality fails for m in [2, 7] and never again).
M0_PRODUCT_LOWER = 8

#: Smallest integer x such that theta(y) >= y/2 for every integer y in
#: [x, 10^6] (exact sweep; the only integer failures are y = 2 and y = 4).
THETA_HALF_MIN_X = 5

#: Smallest integer x such that pi(y) <= 2y/log y for every integer y in
#: [x, 10^6] (exact sweep; no integer >= 2 fails).
PI_UPPER_MIN_X = 2

#: Heuristic asymptotic density of irregular primes, 1 - e^(-1/2).
SIEGEL_CONSTANT = -math.expm1(-0.5)

# --- resource ceilings -----------------------------------------------------

#: Practical ceiling for the exact Bernoulli table.  The convolution
#: recurrence is O(n^2) with numerators of ~1.5 n log n bits; n = 2000
#: takes on the order of a minute, beyond that you probably want a
#: different algorithm altogether.
BERNOULLI_INDEX_CEILING = 2000

#: euler_zeta_check rejects indices above this (the exact table backs the
#: closed-form side, and the partial-sum side adds nothing new up here).
EULER_CHECK_INDEX_CEILING = 400

#: Maximum number of partial-sum terms euler_zeta_check will evaluate.
#: The index-2 check at tolerance 1e-9 needs exactly 2e9 terms and is the
#: largest supported configuration.
EULER_PARTIAL_SUM_CEILING = 2**31 - 1

#: Largest modulus-root p for the vectorized uint64 power-sum kernel.
#: Safety: all intermediates are < p^2, so products are <= (p^2 - 1)^2,
#: and (65535^2 - 1)^2 < 2^64.  Larger p fall back to exact Python ints
#: (overflow-free at any size, just slower).
POWERSUM_VECTOR_MAX_P = 65535

#: Default census ceiling; larger bounds are accepted only with an explicit
#: ceiling argument and emit a runtime warning (the full-range sieve behind
#: the irregular-density column grows like sum of p^2 / 2).
CENSUS_DEFAULT_CEILING = 100_000

#: Default ceiling for theta(x) and prime_pi(x) (segmented sieve).
THETA_PI_CEILING = 100_000_000

#: Trial-division bound used before Pollard rho kicks in.
FACTOR_TRIAL_LIMIT = 1_000_000

#: Default wall-clock budget (seconds) for factoring one integer.
FACTOR_TIME_BUDGET = 10.0
