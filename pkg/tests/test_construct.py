import math
from fractions import Fraction

import pytest

from amiforge.arith import sigma
from amiforge.construct import (
    construct_multiamicable,
    find_multipliers,
    find_seed_tuples,
    seed_ratio,
)

import oracles


def test_seed_ratio_example():
    seed = seed_ratio((1, 2), (104, 116))
    assert seed.target == Fraction(8, 5)
    assert seed.alphas == (1, 2)
    assert seed.ns == (104, 116)


def test_seed_ratio_target_one():
    seed = seed_ratio((1, 2), (7380, 7776))
    assert seed.target == Fraction(1)


def test_seed_ratio_rejects_unequal_sigma():
    with pytest.raises(ValueError) as err:
        seed_ratio((1, 2), (6, 10))
    assert "sigma(6) = 12 but sigma(10) = 18" in str(err.value)


def test_find_multipliers_examples():
    assert find_multipliers(Fraction(8, 5), 20, (104, 116)) == [15]
    assert find_multipliers(Fraction(1), 100) == [1]
    assert find_multipliers(Fraction(2), 10) == [6]


def test_find_multipliers_properties():
    target = Fraction(8, 5)
    mults = find_multipliers(target, 2000, (104, 116))
    assert mults == sorted(mults)
    for a in mults:
        assert a % target.denominator == 0
        assert Fraction(oracles.divisor_sigma(a), a) == target
        assert math.gcd(a, 104) == 1 and math.gcd(a, 116) == 1
    # dropping the coprimality constraint can only widen the list
    unconstrained = find_multipliers(target, 2000)
    assert set(mults) <= set(unconstrained)


def test_find_multipliers_rejects_deficient_target():
    with pytest.raises(ValueError):
        find_multipliers(Fraction(1, 2), 100)


def test_find_multipliers_worker_determinism():
    target = Fraction(3, 2)
    one = find_multipliers(target, 5000, workers=1)
    many = find_multipliers(target, 5000, workers=4)
    assert one == many
    assert one and all(Fraction(oracles.divisor_sigma(a), a) == target for a in one)


def test_construct_example():
    built = construct_multiamicable((1, 2), (104, 116), 20)
    assert len(built) == 1
    b = built[0]
    assert b.a == 15
    assert b.members == (1560, 1740)
    assert b.seed.target == Fraction(8, 5)


def test_construct_identity_multiplier():
    built = construct_multiamicable((1, 2), (7380, 7776), 1)
    assert [(b.a, b.members) for b in built] == [(1, (7380, 7776))]


def test_construct_output_is_multiamicable():
    for b in construct_multiamicable((1, 2), (104, 116), 2000):
        total = b.members[0] + 2 * b.members[1]
        for n in b.members:
            assert oracles.divisor_sigma(n) == total
        # the multiplier is coprime to each seed, so sigma splits
        for n in b.seed.ns:
            assert sigma(b.a * n) == sigma(b.a) * sigma(n)


def test_find_seed_tuples(sieve_1k):
    seeds = find_seed_tuples((1, 2), 120, sieve_1k)
    pairs = [s.ns for s in seeds]
    assert (104, 116) in pairs
    assert pairs == sorted(pairs)
    for s in seeds:
        assert s.target >= 1
        assert all(a < b for a, b in zip(s.ns, s.ns[1:]))
        sig = oracles.divisor_sigma(s.ns[0])
        assert all(oracles.divisor_sigma(n) == sig for n in s.ns)
        assert s.target == Fraction(sum(a * n for a, n in zip(s.alphas, s.ns)), sig)


def test_find_seed_tuples_small_limit_empty(sieve_1k):
    assert find_seed_tuples((1, 2), 10, sieve_1k) == []


def test_find_seed_tuples_includes_other_table_seed():
    seeds = find_seed_tuples((1, 2), 2300)
    assert (2140, 2272) in [s.ns for s in seeds]


def test_find_seed_tuples_requires_k_at_least_two(sieve_1k):
    with pytest.raises(ValueError):
        find_seed_tuples((2,), 100, sieve_1k)
