"""Hypothesis strategies for small rings."""
from hypothesis import strategies as st

from prodspec import ModularRing, ProductRing

moduli = st.integers(min_value=2, max_value=30)
small_moduli = st.integers(min_value=2, max_value=12)


@st.composite
def modular_rings(draw, max_n=30):
    return ModularRing(draw(st.integers(min_value=2, max_value=max_n)))


@st.composite
def products(draw, max_factors=3, max_n=12, max_size=512):
    ns = draw(st.lists(st.integers(min_value=2, max_value=max_n), min_size=2, max_size=max_factors))
    size = 1
    kept = []
    for n in ns:
        if size * n > max_size:
            break
        size *= n
        kept.append(n)
    if len(kept) < 2:
        kept = ns[:1] + [2]
    return ProductRing([ModularRing(n) for n in kept])


@st.composite
def elements(draw, ring):
    return ring.at(draw(st.integers(min_value=0, max_value=ring.size - 1)))
