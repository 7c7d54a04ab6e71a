import math
import random
from fractions import Fraction

import pytest

from amiforge.arith import (
    Factorization,
    abundancy,
    aliquot,
    build_sigma_sieve,
    factorize,
    gcd_list,
    is_prime,
    lcm_list,
    parse_factored,
    sigma,
    zeta_approx,
)

import oracles

# reference constants, correct to well past 1e-9
ZETA2 = math.pi**2 / 6
ZETA3 = 1.2020569031595942854
ZETA5 = 1.0369277551433699263


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(1560).factors == ((2, 3), (3, 1), (5, 1), (13, 1))
    assert factorize(7776).factors == ((2, 5), (3, 5))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)


def test_factorization_invariants():
    rng = random.Random(7)
    samples = list(range(1, 300)) + [rng.randrange(1, 10**6) for _ in range(120)]
    samples += [2**31 - 1, 2**32 + 1, 10**12 + 39]
    for n in samples:
        f = factorize(n)
        assert f.value == n
        primes = [p for p, _ in f.factors]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)
        assert all(is_prime(p) for p in primes)
        assert all(e >= 1 for _, e in f.factors)
        prod = 1
        for p, e in f.factors:
            prod *= p**e
        assert prod == n


def test_factorization_sigma_matches_divisor_loop():
    for n in range(1, 600):
        assert factorize(n).sigma() == oracles.divisor_sigma(n)


def test_is_prime_against_trial_division():
    for n in range(0, 2000):
        assert is_prime(n) == oracles.trial_is_prime(n), n


def test_is_prime_larger_values():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)  # 641 * 6700417
    assert not is_prime(561)  # Carmichael
    assert not is_prime(1)
    assert is_prime(10**12 + 39)


def test_sigma_examples():
    assert sigma(6) == 12
    assert sigma(220) == 504
    assert sigma(1) == 1


def test_sigma_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma(0)


def test_sigma_multiplicative_on_coprime_pairs():
    rng = random.Random(11)
    done = 0
    while done < 300:
        m = rng.randrange(1, 3000)
        n = rng.randrange(1, 3000)
        if math.gcd(m, n) != 1:
            continue
        assert sigma(m * n) == sigma(m) * sigma(n)
        done += 1


def test_aliquot_examples():
    assert aliquot(284) == 220
    assert aliquot(1) == 0
    assert aliquot(12) == 16


def test_sieve_small_table():
    sieve = build_sigma_sieve(10)
    assert sieve.as_list() == [1, 3, 4, 7, 6, 12, 8, 15, 13, 18]
    assert sieve.limit == 10
    assert sieve.covers(10)
    assert not sieve.covers(11)
    assert sieve.sigma(6) == 12
    assert sieve.aliquot(6) == 6


def test_sieve_limit_one():
    sieve = build_sigma_sieve(1)
    assert sieve.as_list() == [1]


def test_sieve_amicable_entries():
    sieve = build_sigma_sieve(300)
    assert sieve.sigma(220) == 504
    assert sieve.sigma(284) == 504


def test_sieve_agrees_with_divisor_loop(sieve_10k):
    for n in range(1, 2001):
        expect = oracles.divisor_sigma(n)
        assert sieve_10k.sigma(n) == expect
        assert sigma(n) == expect
        assert sigma(n, sieve_10k) == expect


def test_sieve_out_of_range():
    sieve = build_sigma_sieve(10)
    with pytest.raises(ValueError):
        sieve.sigma(11)
    with pytest.raises(ValueError):
        sieve.sigma(0)


def test_sigma_falls_back_beyond_sieve():
    sieve = build_sigma_sieve(10)
    assert sigma(220, sieve) == 504


def test_sieve_validation():
    with pytest.raises(ValueError):
        build_sigma_sieve(0)
    with pytest.raises(ValueError, match="budget"):
        build_sigma_sieve(10**6, budget_bytes=100)


def test_sieve_table_read_only():
    sieve = build_sigma_sieve(10)
    with pytest.raises(ValueError):
        sieve.table[3] = 99


def test_abundancy_examples():
    assert abundancy(15) == Fraction(8, 5)
    assert abundancy(1) == Fraction(1)
    assert abundancy(6) == Fraction(2, 1)


def test_abundancy_divisor_identity():
    # sigma(n)/n == sum of 1/u over divisors u of n
    for n in range(1, 2001):
        assert abundancy(n) == sum(Fraction(1, u) for u in oracles.divisors(n))


def test_gcd_lcm_examples():
    assert gcd_list([104, 15]) == 1
    assert lcm_list([4, 6]) == 12


def test_gcd_lcm_validation():
    for fn in (gcd_list, lcm_list):
        with pytest.raises(ValueError):
            fn([])
        with pytest.raises(ValueError):
            fn([6, 0])


def test_gcd_lcm_pair_identity():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.randrange(1, 500)
        n = rng.randrange(1, 500)
        assert gcd_list([m, n]) * lcm_list([m, n]) == m * n
    # identity for m = 24 as stated
    for n in range(1, 100):
        assert gcd_list([24, n]) * lcm_list([24, n]) == 24 * n


def test_gcd_lcm_divisibility_properties():
    rng = random.Random(29)
    for _ in range(100):
        vals = [rng.randrange(1, 50) for _ in range(rng.randrange(1, 5))]
        g = gcd_list(vals)
        l = lcm_list(vals)
        assert all(v % g == 0 for v in vals)
        assert all(l % v == 0 for v in vals)


def test_zeta_values():
    assert abs(zeta_approx(2, 1e-9) - ZETA2) < 1e-9
    assert abs(zeta_approx(3, 1e-9) - ZETA3) < 1e-9
    assert abs(zeta_approx(5, 1e-9) - ZETA5) < 1e-9


def test_zeta_validation():
    with pytest.raises(ValueError):
        zeta_approx(1, 1e-9)
    with pytest.raises(ValueError):
        zeta_approx(2, 0.0)


def test_parse_factored():
    assert parse_factored("2^3*13") == 104
    assert parse_factored("104") == 104
    assert parse_factored("1") == 1
    assert parse_factored(" 2^2*29 ") == 116


def test_parse_factored_rejects_garbage():
    for text in ("", "2^", "^3", "2^0", "0", "-5", "a*b", "2**3", "3*"):
        with pytest.raises(ValueError):
            parse_factored(text)


def test_factorization_is_frozen():
    f = factorize(12)
    assert isinstance(f, Factorization)
    with pytest.raises(Exception):
        f.value = 13
