from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prodspec import (
    ModularRing,
    ProductRing,
    all_ideals,
    has_ideal_avoidance,
    ideal_from_generators,
    is_maximal,
    is_prime,
    is_principal,
    is_regular_ideal,
    jacobson_radical,
    nilradical,
    qb_criterion,
    radical_of,
    zero_ideal,
)
from prodspec.errors import ResourceLimitError
from prodspec.fixtures import f2xy2, z4x2
from prodspec.ideals import jacobson_radical_by_units

from strategies import modular_rings, products


def values(ideal):
    return {x.value for x in ideal.elements()}


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def radical_int(n):
    out = 1
    for p in prime_factors(n):
        out *= p
    return out


def test_closure_examples():
    assert values(ideal_from_generators(ModularRing(12), [6])) == {0, 6}
    r = ProductRing([ModularRing(6), ModularRing(4)])
    assert values(ideal_from_generators(r, [(1, 0)])) == {(a, 0) for a in range(6)}
    assert values(zero_ideal(r)) == {(0, 0)}


def test_primality_examples():
    z12 = ModularRing(12)
    assert is_prime(ideal_from_generators(z12, [2]))
    assert not is_prime(ideal_from_generators(z12, [6]))
    r = ProductRing([ModularRing(4), ModularRing(9)])
    assert is_prime(ideal_from_generators(r, [(2, 1)]))


def test_maximality_examples():
    assert is_maximal(ideal_from_generators(ModularRing(6), [3]))
    assert not is_maximal(ideal_from_generators(ModularRing(8), [4]))
    assert is_maximal(zero_ideal(ModularRing(7)))


def test_radical_examples():
    z12 = ModularRing(12)
    assert values(nilradical(z12)) == {0, 6}
    r = ProductRing([ModularRing(4), ModularRing(9)])
    assert values(jacobson_radical(r)) == {(a, b) for a in (0, 2) for b in (0, 3, 6)}
    assert radical_of(ideal_from_generators(z12, [4])) == ideal_from_generators(z12, [2])


def test_regular_ideal_examples():
    assert is_regular_ideal(ideal_from_generators(ModularRing(6), [3]))
    assert not is_regular_ideal(ideal_from_generators(ModularRing(4), [2]))
    r = ProductRing([ModularRing(6), ModularRing(4)])
    assert is_regular_ideal(ideal_from_generators(r, [(1, 0)]))


def test_all_ideals_examples():
    ideals = all_ideals(ModularRing(12))
    assert len(ideals) == 6
    assert {frozenset(values(i)) for i in ideals} == {
        frozenset(range(0, 12, d)) for d in (1, 2, 3, 4, 6, 12)}
    assert len(all_ideals(ModularRing(7))) == 2
    assert len(all_ideals(ProductRing([ModularRing(2), ModularRing(2)]))) == 4


def test_all_ideals_guard():
    with pytest.raises(ResourceLimitError):
        all_ideals(ModularRing(100))


def test_avoidance_examples():
    assert has_ideal_avoidance(ModularRing(12)).holds
    assert has_ideal_avoidance(ProductRing([ModularRing(2), ModularRing(2)])).holds
    res = has_ideal_avoidance(f2xy2())
    assert not res.holds
    assert len(res.cover) == 3
    assert all(not (res.ideal <= j) for j in res.cover)


def test_qb_examples():
    assert qb_criterion(ModularRing(12))
    assert not qb_criterion(f2xy2())
    assert not qb_criterion(z4x2())
    assert qb_criterion(ModularRing(7))


def test_f2xy2_maximal_ideal_needs_two_generators():
    r = f2xy2()
    m = [i for i in all_ideals(r) if is_maximal(i)]
    assert len(m) == 1 and m[0].size == 4 and not is_principal(m[0])


@given(st.integers(2, 60))
def test_ideals_of_zn_are_divisors(n):
    r = ModularRing(n)
    assert len(all_ideals(r)) == len(divisors(n))
    for d in divisors(n):
        ideal = ideal_from_generators(r, [d % n])
        assert ideal.size == n // d
        assert is_prime(ideal) == (d in prime_factors(n))
        assert is_maximal(ideal) == (d in prime_factors(n))
        assert radical_of(ideal) == ideal_from_generators(r, [gcd(n, radical_int(d)) % n])


@given(st.integers(2, 60))
def test_nilradical_of_zn(n):
    r = ModularRing(n)
    assert nilradical(r) == ideal_from_generators(r, [radical_int(n) % n])


@given(st.one_of(modular_rings(max_n=60), products(max_size=200)))
def test_jacobson_two_routes(r):
    assert jacobson_radical(r) == jacobson_radical_by_units(r)


@given(st.one_of(modular_rings(max_n=30), products(max_size=64)), st.data())
def test_sum_and_intersection_are_ideals(r, data):
    a = ideal_from_generators(r, [r.at(data.draw(st.integers(0, r.size - 1)))])
    b = ideal_from_generators(r, [r.at(data.draw(st.integers(0, r.size - 1)))])
    ideals = set(all_ideals(r))
    assert a + b in ideals and (a & b) in ideals
    assert a <= a + b and (a & b) <= a
