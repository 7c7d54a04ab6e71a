"""Exact integer arithmetic: primality, factorization, divisor sums, sieves."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

DEFAULT_SIEVE_BUDGET = 2 * 1024**3  # bytes

# Deterministic Miller-Rabin witness set, sound for every n below 3.3e24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Gaps between consecutive trial divisors coprime to 30, starting from 7.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition; factors are (prime, exponent) pairs, primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def sigma(self) -> int:
        """Sum of all divisors, from the multiplicative closed form."""
        total = 1
        for p, e in self.factors:
            total *= (p ** (e + 1) - 1) // (p - 1)
        return total


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> Factorization:
    """Factor n by trial division on a mod-30 wheel.

    Once the remaining cofactor passes a primality test the loop stops early,
    so semiprimes with one large factor do not pay the full sqrt walk.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    value = n
    factors: list[tuple[int, int]] = []

    def strip(m: int, p: int) -> int:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
        return m

    for p in (2, 3, 5):
        n = strip(n, p)
    d, i = 7, 0
    while d * d <= n:
        if n % d == 0:
            n = strip(n, d)
            if n > 1 and is_prime(n):
                break
        d += _WHEEL[i]
        i = (i + 1) & 7
    if n > 1:
        factors.append((n, 1))
    return Factorization(value, tuple(factors))


@dataclass(frozen=True, eq=False)
class SigmaSieve:
    """Lookup table of sigma(n) for 1 <= n <= limit.

    The table is marked read-only after construction, so one sieve can be
    shared freely between searches and worker processes.
    """

    limit: int
    table: np.ndarray

    def covers(self, n: int) -> bool:
        return 1 <= n <= self.limit

    def sigma(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"sigma({n}) outside sieve range 1..{self.limit}")
        return int(self.table[n])

    def aliquot(self, n: int) -> int:
        return self.sigma(n) - n

    def as_list(self) -> list[int]:
        """[sigma(1), ..., sigma(limit)]."""
        return self.table[1:].tolist()


def build_sigma_sieve(limit: int, budget_bytes: int = DEFAULT_SIEVE_BUDGET) -> SigmaSieve:
    """Tabulate sigma up to limit by divisor accumulation.

    Every d <= limit/2 adds itself to all proper multiples; starting the table
    at arange(limit + 1) seeds each n with its divisor n. Runs in O(limit log
    limit) int64 additions. Raises ValueError when the table would not fit the
    memory budget (8 bytes per entry, 2 GiB by default).
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    need = 8 * (limit + 1)
    if need > budget_bytes:
        raise ValueError(
            f"sieve to {limit} needs {need} bytes which exceeds the budget of {budget_bytes}"
        )
    table = np.arange(limit + 1, dtype=np.int64)
    for d in range(1, limit // 2 + 1):
        table[2 * d :: d] += d
    table[0] = 0
    table.setflags(write=False)
    return SigmaSieve(limit, table)


def sigma(n: int, sieve: SigmaSieve | None = None) -> int:
    """Sum of all divisors of n, from the sieve when it covers n."""
    if n < 1:
        raise ValueError("sigma requires n >= 1")
    if sieve is not None and n <= sieve.limit:
        return int(sieve.table[n])
    return factorize(n).sigma()


def aliquot(n: int, sieve: SigmaSieve | None = None) -> int:
    """Sum of proper divisors: sigma(n) - n."""
    return sigma(n, sieve) - n


def abundancy(n: int) -> Fraction:
    """sigma(n)/n as an exact rational in lowest terms."""
    return Fraction(sigma(n), n)


def gcd_list(values) -> int:
    vals = list(values)
    if not vals:
        raise ValueError("gcd_list requires at least one value")
    if min(vals) < 1:
        raise ValueError("gcd_list requires positive integers")
    return math.gcd(*vals)


def lcm_list(values) -> int:
    vals = list(values)
    if not vals:
        raise ValueError("lcm_list requires at least one value")
    if min(vals) < 1:
        raise ValueError("lcm_list requires positive integers")
    return math.lcm(*vals)


def zeta_approx(s: int, eps: float) -> float:
    """zeta(s) for integer s >= 2, within eps of the true value.

    Partial sum to N plus the midpoint of the integral tail bracket
    [(N+1)^(1-s), N^(1-s)] / (s-1); the truncation error is then at most
    N^(-s)/2, and N is chosen so that this sits below eps/2. Terms are summed
    with math.fsum, keeping the floating error far below the slack.
    """
    if s < 2:
        raise ValueError("zeta_approx requires integer s >= 2")
    if eps <= 0:
        raise ValueError("eps must be positive")
    n = math.ceil((1.0 / eps) ** (1.0 / s)) + 1
    partial = math.fsum(1.0 / m**s for m in range(n, 0, -1))
    lo = (n + 1) ** (1 - s) / (s - 1)
    hi = n ** (1 - s) / (s - 1)
    return partial + (lo + hi) / 2.0


def parse_factored(text: str) -> int:
    """Parse a factored form like '2^3*13' (or a plain integer) into its value."""
    t = text.strip()
    if not t:
        raise ValueError("empty integer expression")
    total = 1
    for token in t.split("*"):
        base, caret, exp = token.partition("^")
        try:
            b = int(base)
            e = int(exp) if caret else 1
        except ValueError:
            raise ValueError(f"malformed factor {token!r} in {text!r}") from None
        if b < 1 or e < 1:
            raise ValueError(f"invalid factor {token!r} in {text!r}")
        total *= b**e
    return total
