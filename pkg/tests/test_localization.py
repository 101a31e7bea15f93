import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from prodspec import ModularRing, ProductRing, ideal_from_generators, spec, zero_ideal
from prodspec.errors import ImproperFilterError, NotDomainError, NotLocalError
from prodspec.localization import (
    MultiplicativeSet,
    domain_embedding_check,
    filter_ideal,
    filter_quotient_iso,
    kernel_law_holds,
    localize,
    localize_at_prime,
    lying_over_minimal,
    omega_set,
    prime_disjoint_from_T,
    support,
)
from prodspec.products import unit_idempotent
from prodspec.rings import diagonal_hom, identity_hom, is_local, nonunit_mask
from prodspec.ultrafilters import cofinite_filter, powerset, principal_filter

from strategies import modular_rings, products

LOCAL = [2, 3, 4, 5, 7, 8, 9, 25]


def P(*factors):
    return ProductRing([ModularRing(n) for n in factors])


def gens_of(r, *gens):
    return ideal_from_generators(r, list(gens))


def test_z12_at_prime_two():
    z = ModularRing(12)
    L = localize_at_prime(gens_of(z, 2))
    assert L.size == 4
    assert sorted(L.label(i) for i in range(L.size)) == ["0/1", "1/1", "1/3", "2/1"]
    assert L.kernel == gens_of(z, 4)


def test_z6_at_prime_three():
    L = localize_at_prime(gens_of(ModularRing(6), 3))
    assert L.size == 3


def test_localizing_at_one_is_a_copy():
    z = ModularRing(10)
    L = localize(z, MultiplicativeSet.explicit(z, [1]))
    assert L.size == 10 and L.canonical_map().is_bijective


def test_localizing_at_units_is_a_copy():
    r = P(4, 9)
    L = localize(r, MultiplicativeSet(r, 1 - nonunit_mask(r)))
    assert L.size == r.size and L.canonical_map().is_bijective


def test_multiplicative_set_validation():
    z = ModularRing(6)
    with pytest.raises(ValueError):
        MultiplicativeSet.explicit(z, [2])  # missing 1
    with pytest.raises(ValueError):
        MultiplicativeSet.explicit(z, [1, 2])  # 2*2 = 4 missing
    assert MultiplicativeSet.generated(z, [2]).size == 3


def test_omega_and_support_examples():
    r = P(4, 9)
    assert omega_set(r, r.one) == {1, 2}
    assert support(r, r.one) == {1, 2}
    for k in r.index_set:
        e = unit_idempotent(r, k)
        assert omega_set(r, e) == support(r, e) == {k}
    assert omega_set(r, (2, 1)) == {2}
    assert support(r, (2, 1)) == {1, 2}
    with pytest.raises(NotLocalError):
        omega_set(P(6, 4), (1, 1))


def test_filter_iso_examples():
    r = P(4, 9)
    iso = filter_quotient_iso(r, principal_filter(r.index_set, {1}))
    assert iso.localized.size == 4 and iso.hom.is_bijective
    r3 = P(4, 9, 25)
    iso = filter_quotient_iso(r3, principal_filter(r3.index_set, {1, 3}))
    assert iso.localized.size == 100


def test_filter_iso_at_whole_set():
    r = P(4, 9)
    iso = filter_quotient_iso(r, principal_filter(r.index_set, {1, 2}))
    assert iso.ideal == zero_ideal(r)
    assert iso.mult_set.size == 2 * 6
    assert iso.localized.size == r.size


def test_cofinite_filter_collapses():
    r = P(4, 9)
    F = cofinite_filter(r.index_set)
    with pytest.raises(ImproperFilterError):
        filter_quotient_iso(r, F)
    iso = filter_quotient_iso(r, F, allow_improper=True)
    assert iso.localized.size == 1 and not filter_ideal(r, F).is_proper


def test_domain_embedding():
    r = P(2, 3)
    rep = domain_embedding_check(r, principal_filter(r.index_set, {2}))
    assert rep.kernel_matches and rep.injective and rep.surjective
    with pytest.raises(NotDomainError):
        domain_embedding_check(P(4, 3), principal_filter((1, 2), {1}))


def test_prime_disjoint_examples():
    r = P(4, 9)
    F = principal_filter(r.index_set, {1})
    assert prime_disjoint_from_T(r, F, gens_of(r, (2, 1)))
    assert not prime_disjoint_from_T(r, F, gens_of(r, (1, 3)))


def test_lying_over_examples():
    z = ModularRing(6)
    p = gens_of(z, 2)
    assert lying_over_minimal(identity_hom(z), p) == p
    z3 = ModularRing(3)
    phi = diagonal_hom(z3)
    assert lying_over_minimal(phi, zero_ideal(z3)) == gens_of(phi.target, (0, 1))


def test_lying_over_filter_iso_hom():
    r = P(4, 9)
    iso = filter_quotient_iso(r, principal_filter(r.index_set, {1}))
    q = iso.quotient
    for point in spec(q):
        assert iso.hom.preimage(lying_over_minimal(iso.hom, point.prime)) == point.prime


def test_lying_over_rejects_non_injective():
    h = ProductRing([ModularRing(4), ModularRing(9)]).projection(1)
    with pytest.raises(ValueError):
        lying_over_minimal(h, gens_of(h.source, (2, 1)))


local_products = st.lists(st.sampled_from(LOCAL), min_size=2, max_size=3).filter(
    lambda ns: int(np.prod(ns)) <= 600).map(lambda ns: ProductRing([ModularRing(n) for n in ns]))


@given(local_products, st.data())
def test_kernel_law_for_every_principal_filter(r, data):
    A = data.draw(st.sampled_from([a for a in powerset(r.index_set) if a]))
    assert kernel_law_holds(r, A)


@given(local_products, st.data())
def test_filter_iso_is_bijective(r, data):
    A = data.draw(st.sampled_from([a for a in powerset(r.index_set) if a]))
    iso = filter_quotient_iso(r, principal_filter(r.index_set, A))
    assert iso.hom.is_bijective
    expected = 1
    for k in A:
        expected *= r.factor(k).size
    assert iso.localized.size == expected


@given(st.one_of(modular_rings(max_n=40), products(max_size=120)), st.data())
def test_class_equality_matches_pair_relation(r, data):
    gens = data.draw(st.lists(st.integers(0, r.size - 1), max_size=2))
    T = MultiplicativeSet.generated(r, [r.at(g) for g in gens])
    if T.mask[r.zero_index]:
        return
    L = localize(r, T)
    seed = data.draw(st.integers(0, 2 ** 16))
    assert L.spot_verify(samples=60, rng=np.random.default_rng(seed))


@given(st.one_of(modular_rings(max_n=40), products(max_size=120)))
def test_localization_at_each_prime_is_local(r):
    for point in spec(r):
        assert is_local(localize_at_prime(point.prime))
