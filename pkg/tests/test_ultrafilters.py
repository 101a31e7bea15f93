import pytest
from hypothesis import given
from hypothesis import strategies as st

from prodspec import ModularRing, ProductRing, SetRing, ideal_from_generators, setring_primes
from prodspec.errors import ImproperFilterError, NotPrimeError
from prodspec.products import unit_idempotent
from prodspec.ultrafilters import (
    BasePrimeChoice,
    FilterObject,
    a_star,
    all_ultrafilters,
    cofinite_filter,
    embedding_checks,
    m_star,
    principal_filter,
    powerset,
)

from strategies import products


def P(*factors):
    return ProductRing([ModularRing(n) for n in factors])


def test_principal_filter():
    F = principal_filter((1, 2, 3), {2})
    assert F.members == {frozenset(s) for s in ({2}, {1, 2}, {2, 3}, {1, 2, 3})}
    assert F.is_principal and F.is_ultrafilter and F.generator == {2}
    assert not principal_filter((1, 2, 3), {1, 2}).is_ultrafilter


def test_ultrafilters_on_finite_set_are_principal():
    S = (1, 2, 3, 4)
    ufs = all_ultrafilters(S)
    assert len(ufs) == 4
    # brute force: every proper filter that is an ultrafilter is among them
    found = {principal_filter(S, a) for a in powerset(S) if a and principal_filter(S, a).is_ultrafilter}
    assert found == set(ufs)


def test_ultrafilter_complement_is_setring_prime():
    S = (1, 2, 3)
    ps = SetRing(S)
    for U, prime in zip(all_ultrafilters(S), setring_primes(ps)):
        outside = {a for a in powerset(S) if a not in U}
        assert outside == {ps.encode(i) for i in prime.indices}


def test_filter_validation():
    with pytest.raises(ValueError):
        FilterObject((1, 2), [{1}])  # not upward closed
    with pytest.raises(ValueError):
        FilterObject((1, 2), [{1}, {2}, {1, 2}])  # not closed under intersection
    with pytest.raises(ValueError):
        FilterObject((1, 2), [])
    with pytest.raises(ImproperFilterError):
        principal_filter((1, 2), set())


def test_cofinite_filter_is_improper():
    F = cofinite_filter((1, 2, 3))
    assert not F.is_proper and frozenset() in F


def test_a_star_examples():
    r = P(4, 9)
    base = BasePrimeChoice.first(r)
    assert a_star(r((2, 1)), base) == {1}
    assert a_star(r.zero, base) == {1, 2}
    assert a_star(r.one, base) == frozenset()
    for k in r.index_set:
        assert a_star(unit_idempotent(r, k), base) == frozenset(r.index_set) - {k}


def test_m_star_examples():
    r = P(4, 9)
    base = BasePrimeChoice.first(r)
    ps = SetRing(r.index_set)
    primes = setring_primes(ps)
    assert m_star(primes[0], base) == ideal_from_generators(r, [(2, 1)])
    assert m_star(primes[1], base) == ideal_from_generators(r, [(1, 3)])


def test_m_star_rejects_non_prime():
    r = P(4, 9)
    base = BasePrimeChoice.first(r)
    ps = SetRing(r.index_set)
    with pytest.raises(NotPrimeError):
        m_star(ideal_from_generators(ps, [set()]), base)


def test_base_choice_must_be_prime():
    r = P(4, 9)
    with pytest.raises(NotPrimeError):
        BasePrimeChoice(r, (ideal_from_generators(ModularRing(4), [0]), ideal_from_generators(ModularRing(9), [3])))
    with pytest.raises(ValueError):
        BasePrimeChoice(r, (ideal_from_generators(ModularRing(4), [2]),))


def test_embedding_three_factors():
    rep = embedding_checks(BasePrimeChoice.first(P(4, 5, 9)))
    assert rep.ok and len(rep.images) == 3
    assert "vacuous" in rep.wild_direction


def test_continuity_for_constants():
    r = P(6, 4)
    base = BasePrimeChoice.first(r)
    ps = SetRing(r.index_set)
    primes = setring_primes(ps)
    images = [m_star(M, base) for M in primes]
    assert {j for j, img in enumerate(images) if not img.mask[r.one_index]} == set(range(len(primes)))
    assert {j for j, img in enumerate(images) if not img.mask[r.zero_index]} == set()


@given(products(max_factors=4, max_size=300), st.data())
def test_embedding_holds_for_every_base_choice(r, data):
    from prodspec import spec

    primes = tuple(data.draw(st.sampled_from(spec(f).primes)) for f in r.factors)
    assert embedding_checks(BasePrimeChoice(r, primes)).ok
