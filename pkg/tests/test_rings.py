import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from prodspec import (
    ModularRing,
    ProductRing,
    QuotientRing,
    TableRing,
    canonical_hom,
    ideal_from_generators,
    idempotents,
    nilpotency_index,
    product_hom,
    ring_predicates,
)
from prodspec.errors import HomomorphismError, ResourceLimitError, RingAxiomError, ZeroRingFactorError
from prodspec.rings import RingHom, diagonal_hom, graph_hom, hom_analysis, identity_hom, set_size_guard, size_guard

from strategies import products


def test_modular_addition():
    r = ModularRing(6)
    assert (r(2) + r(5)).value == 1


def test_product_multiplication():
    r = ProductRing([ModularRing(4), ModularRing(9)])
    assert (r((3, 8)) * r((2, 2))).value == (2, 7)


def test_quotient_least_representative():
    z = ModularRing(12)
    q = QuotientRing(z, ideal_from_generators(z, [6]))
    assert q.size == 6
    assert q.index(7) == q.index(1)
    assert q.encode(q.index(7)) == 1


def test_quotient_of_z12_by_6_matches_z6_tables():
    z = ModularRing(12)
    q = QuotientRing(z, ideal_from_generators(z, [6]))
    z6 = ModularRing(6)
    # representatives are 0..5, so the tables must agree with Z/6 verbatim
    assert [q.encode(i) for i in range(6)] == list(range(6))
    assert np.array_equal(q.add_table, z6.add_table)
    assert np.array_equal(q.mul_table, z6.mul_table)


@pytest.mark.parametrize("n, expected", [(6, [0, 1, 3, 4]), (4, [0, 1]), (12, [0, 1, 4, 9])])
def test_idempotents_modular(n, expected):
    assert [e.value for e in idempotents(ModularRing(n))] == expected


def test_idempotents_boolean_square():
    r = ProductRing([ModularRing(2), ModularRing(2)])
    assert len(idempotents(r)) == 4


def test_nilpotency_index_examples():
    assert nilpotency_index(ModularRing(8)(2)) == 3
    r = ProductRing([ModularRing(2 ** n) for n in range(1, 5)])
    assert nilpotency_index(r((0, 2, 2, 2))) == 4
    assert nilpotency_index(ModularRing(7)(1)) is None


@pytest.mark.parametrize(
    "n, local, field, domain, vnr, split",
    [
        (4, True, False, False, False, False),
        (6, False, False, False, True, True),
        (5, True, True, True, True, False),
    ],
)
def test_ring_predicates(n, local, field, domain, vnr, split):
    p = ring_predicates(ModularRing(n))
    assert (p.is_local, p.is_field, p.is_domain, p.is_von_neumann_regular, p.has_nontrivial_idempotents) == (
        local, field, domain, vnr, split)


def test_projection_kernel():
    r = ProductRing([ModularRing(4), ModularRing(9)])
    a = hom_analysis(r.projection(1))
    assert a.is_surjective and not a.is_injective
    assert {x.value for x in a.kernel.elements()} == {(0, j) for j in range(9)}


def test_canonical_hom_kernel():
    a = hom_analysis(canonical_hom(ModularRing(4), ModularRing(2)))
    assert {x.value for x in a.kernel.elements()} == {0, 2}


def test_induced_hom_kernel_is_product_of_kernels():
    h = product_hom([canonical_hom(ModularRing(4), ModularRing(2)), canonical_hom(ModularRing(9), ModularRing(3))])
    ker = {x.value for x in hom_analysis(h).kernel.elements()}
    assert ker == {(a, b) for a in (0, 2) for b in (0, 3, 6)}


def test_canonical_hom_requires_divisibility():
    with pytest.raises(HomomorphismError):
        canonical_hom(ModularRing(4), ModularRing(3))


def test_bad_mapping_rejected():
    z = ModularRing(6)
    with pytest.raises(HomomorphismError):
        RingHom(z, z, [0, 1, 4, 3, 2, 5])  # fixes 1 but breaks addition


def test_zero_ring_factor_rejected():
    with pytest.raises(ZeroRingFactorError):
        ProductRing([ModularRing(3), ModularRing(1)])


def test_table_ring_rejects_non_associative_multiplication():
    z = ModularRing(3)
    mul = np.array(z.mul_table)
    mul[2, 2] = 2  # 2*2 = 2 breaks distributivity/associativity
    with pytest.raises(RingAxiomError):
        TableRing(z.add_table, mul)


def test_table_ring_rejects_non_commutative():
    z = ModularRing(3)
    mul = np.array(z.mul_table)
    mul[1, 2], mul[2, 1] = 2, 1
    with pytest.raises(RingAxiomError) as info:
        TableRing(z.add_table, mul)
    assert "commutativity" in info.value.axiom


def test_table_ring_accepts_copy_of_modular():
    z = ModularRing(10)
    t = TableRing(z.add_table, z.mul_table)
    assert t.size == 10 and t.one_index == 1


def test_size_guard():
    old = size_guard()
    try:
        set_size_guard(50)
        with pytest.raises(ResourceLimitError):
            ProductRing([ModularRing(8), ModularRing(8)])
    finally:
        set_size_guard(old)


def test_diagonal_and_graph_are_injective():
    z = ModularRing(6)
    assert diagonal_hom(z).is_injective
    assert graph_hom(canonical_hom(z, ModularRing(3))).is_injective
    assert identity_hom(z).is_bijective


@given(st.integers(2, 40), st.integers(0, 200), st.integers(0, 200))
def test_modular_ops_match_integers(n, a, b):
    r = ModularRing(n)
    assert (r(a) + r(b)).value == (a + b) % n
    assert (r(a) * r(b)).value == (a * b) % n
    assert (-r(a)).value == (-a) % n


@given(products(), st.data())
def test_product_ops_are_componentwise(r, data):
    i = data.draw(st.integers(0, r.size - 1))
    j = data.draw(st.integers(0, r.size - 1))
    x, y = r.at(i), r.at(j)
    ms = [f.modulus for f in r.factors]
    assert (x + y).value == tuple((a + b) % m for a, b, m in zip(x.value, y.value, ms))
    assert (x * y).value == tuple((a * b) % m for a, b, m in zip(x.value, y.value, ms))


@given(products(max_size=200))
def test_product_idempotents_are_products(r):
    expected = 1
    for f in r.factors:
        expected *= len(idempotents(f))
    assert len(idempotents(r)) == expected
