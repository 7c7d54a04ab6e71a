"""Counting functions A(x), M(x) and checked bound inequalities.

The bound checks compare an exact rational partial sum against a zeta-product
bound evaluated with certified error, so a reported "holds" cannot be a
floating-point artifact.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .arith import SigmaSieve, build_sigma_sieve, sigma, zeta_approx

EXACT_SUM_LIMIT = 10**5  # largest x summed with exact rationals
ZETA_EPS = 1e-9


@dataclass(frozen=True)
class CountSeries:
    checkpoints: tuple[int, ...]
    counts: tuple[int, ...]
    ratios: tuple[Fraction, ...]


@dataclass(frozen=True)
class BoundReport:
    x: int
    k: int
    lhs: Fraction  # exact partial sum (or a certified upper bound when not exact)
    rhs: float  # zeta-product bound, inflated by the certified zeta error
    margin: float
    holds: bool
    exact: bool


def _validate_checkpoints(checkpoints) -> list[int]:
    pts = list(checkpoints)
    if not pts:
        raise ValueError("checkpoints must be non-empty")
    if any(x < 1 for x in pts):
        raise ValueError("checkpoints must be >= 1")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ValueError("checkpoints must be strictly increasing")
    return pts


def _ensure_sieve(limit: int, sieve: SigmaSieve | None) -> SigmaSieve:
    if sieve is None:
        return build_sigma_sieve(limit)
    if sieve.limit < limit:
        raise ValueError(f"sieve covers 1..{sieve.limit} but {limit} is required")
    return sieve


def amicable_members(limit: int, sieve: SigmaSieve | None = None, exclude_perfect: bool = True) -> list[int]:
    """All amicable numbers n <= limit: sigma(s(n)) = sigma(n), n not perfect.

    s(n) may exceed the sieve, in which case sigma falls back to
    factorization.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    sieve = _ensure_sieve(limit, sieve)
    sig = sieve.table[: limit + 1].tolist()
    out = []
    for n in range(2, limit + 1):
        sn = sig[n]
        if exclude_perfect and sn == 2 * n:
            continue
        if sigma(sn - n, sieve) == sn:
            out.append(n)
    return out


def _series(checkpoints: list[int], members: list[int]) -> CountSeries:
    counts = tuple(bisect_right(members, x) for x in checkpoints)
    ratios = tuple(Fraction(c, x) for c, x in zip(counts, checkpoints))
    return CountSeries(tuple(checkpoints), counts, ratios)


def count_amicable(checkpoints, sieve: SigmaSieve | None = None, exclude_perfect: bool = True) -> CountSeries:
    """A(x) at each checkpoint: amicable numbers up to x."""
    pts = _validate_checkpoints(checkpoints)
    return _series(pts, amicable_members(pts[-1], sieve, exclude_perfect))


def count_multiamicable_pairs(alpha: int, beta: int, checkpoints, sieve: SigmaSieve | None = None) -> CountSeries:
    """M(x) at each checkpoint: pairs with sigma(m) = sigma(n) = alpha*m + beta*n,
    m < n, counted by the smaller member m <= x.

    n is recovered from the equation as (sigma(m) - alpha*m) / beta and then
    verified, so n itself needs no scan bound.
    """
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be positive integers")
    pts = _validate_checkpoints(checkpoints)
    limit = pts[-1]
    sieve = _ensure_sieve(limit, sieve)
    sig = sieve.table[: limit + 1].tolist()
    members = []
    for m in range(1, limit + 1):
        sm = sig[m]
        n, rem = divmod(sm - alpha * m, beta)
        if rem or n <= m:
            continue
        if sigma(n, sieve) == sm:
            members.append(m)
    return _series(pts, members)


def _primes_up_to(x: int) -> list[int]:
    if x < 2:
        return []
    flags = bytearray([1]) * (x + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(x) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [p for p in range(2, x + 1) if flags[p]]


def _lcm_range(x: int) -> int:
    """lcm(1..x) as the product of maximal prime powers not exceeding x."""
    out = 1
    for p in _primes_up_to(x):
        pe = p
        while pe * p <= x:
            pe *= p
        out *= pe
    return out


def lemma_sum_check(
    x: int,
    k: int,
    sieve: SigmaSieve | None = None,
    eps: float = ZETA_EPS,
) -> BoundReport:
    """Check sum_{n<=x} (sigma(n)/n)^k < zeta(2)^max(k,1) * zeta(2k-1 if k>=2) * x.

    Up to x = 10^5 the left side is the exact rational with denominator
    lcm(1..x)^k; above that it switches to upward-rounded double accumulation
    and the report carries exact=False. The verdict compares against the
    bound deflated by the certified zeta error, while the reported rhs is the
    inflated (safe upper) value, so holds=True is conservative on both sides.

    The verdict is computed, never assumed. The stated constant is sharp
    enough only for k <= 2: at k = 3 the partial sums average out near 6.1*x
    while zeta(2)^3*zeta(5) is about 4.62, so holds comes back False for
    every x >= 24. The report simply says what the numbers say.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    sieve = _ensure_sieve(x, sieve)
    sig = sieve.table[: x + 1].tolist()

    exact = x <= EXACT_SUM_LIMIT
    if exact:
        den = _lcm_range(x) ** k
        num = 0
        for n in range(1, x + 1):
            num += sig[n] ** k * (den // n**k)
        lhs = Fraction(num, den)
    else:
        acc = math.fsum((sig[n] / n) ** k for n in range(1, x + 1))
        # inflate by a few ulps so the stored value upper-bounds the true sum
        lhs = Fraction(acc * (1.0 + 2.0**-45))

    factors = [zeta_approx(2, eps)] * max(k, 1)
    if k >= 2:
        factors.append(zeta_approx(2 * k - 1, eps))
    rhs_hi = x
    rhs_lo = x
    for z in factors:
        rhs_hi *= z + eps
        rhs_lo *= z - eps
    holds = lhs < Fraction(rhs_lo)
    return BoundReport(x, k, lhs, rhs_hi, rhs_hi - float(lhs), holds, exact)


def harmonic_floor_sum(x: int) -> Fraction:
    """sum_{u<=x} (1/u) * floor(x/u), exactly.

    Rearranging sum_{n<=x} sigma(n)/n over the divisor identity
    sigma(n)/n = sum_{u|n} 1/u gives this form, so it must equal the k=1
    lemma sum.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    den = _lcm_range(x)
    num = sum((x // u) * (den // u) for u in range(1, x + 1))
    return Fraction(num, den)


def pomerance_curve(checkpoints, sieve: SigmaSieve | None = None) -> list[tuple[float, int, float, float]]:
    """Rows (x, A(x), x/e^sqrt(log x), ratio) with ratio = A(x)*e^sqrt(log x)/x.

    Report only: the bound is asymptotic, so no assertion is made at any
    finite checkpoint. log is the natural logarithm.
    """
    pts = list(checkpoints)
    if not pts:
        raise ValueError("checkpoints must be non-empty")
    if any(x < 1 for x in pts):
        raise ValueError("checkpoints must be >= 1")
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ValueError("checkpoints must be strictly increasing")
    top = math.floor(pts[-1])
    members = amicable_members(top, sieve) if top >= 2 else []
    rows = []
    for x in pts:
        count = bisect_right(members, math.floor(x))
        bound = x / math.exp(math.sqrt(math.log(x)))
        rows.append((x, count, bound, count / bound))
    return rows
