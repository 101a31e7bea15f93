"""Tame and wild primes of direct products.

For ``R = R_1 x ... x R_m`` a prime is *tame* when it is ``pi_k^-1(p)`` for
a prime ``p`` of one factor, and *wild* otherwise.  The classifier below
follows the unit-idempotent criterion: a prime is tame exactly when it
misses some ``e_k``; wild primes contain every ``e_k``.  Over a finite
index set no wild prime exists, and the wild branch is kept only so the
criterion is implemented as stated.
"""
from dataclasses import dataclass

import numpy as np

from .boolean import SetRing, setring_primes
from .errors import ConsistencyError, NotMaxRegularError, NotPrimeError
from .ideals import Ideal, closure_mask, ideal_from_generators, is_prime, prime_witness
from .rings import Element, ProductRing, RingHom, has_nontrivial_idempotents, product_hom
from .spectrum import MaxRegularIdeal, connected_components, is_max_regular, max_regular_ideals, spec


def _require_product(r):
    if not isinstance(r, ProductRing):
        raise TypeError(f"{r} is not a direct product ring")


def unit_idempotent(r, k):
    """``e_k``: 1 in coordinate ``k``, 0 elsewhere."""
    _require_product(r)
    r._check_k(k)
    comps = [f.one_index if j == k else f.zero_index for j, f in enumerate(r.factors, start=1)]
    return Element(r, r.from_components(comps))


def unit_idempotents(r):
    return [unit_idempotent(r, k) for k in r.index_set]


def embed_component(r, k, a):
    """``a e_k``: the element with ``a`` in coordinate ``k`` and 0 elsewhere."""
    a = r.factor(k).element(a)
    comps = [a.index if j == k else f.zero_index for j, f in enumerate(r.factors, start=1)]
    return Element(r, r.from_components(comps))


def pullback(r, k, ideal):
    """``pi_k^-1(I)`` for an ideal ``I`` of factor ``k``."""
    if ideal.ring != r.factor(k):
        raise ValueError(f"ideal is not an ideal of factor {k}")
    return Ideal(r, ideal.mask[r.component_array(k)])


def project(r, k, ideal):
    """``pi_k(I)``; an ideal because ``pi_k`` is surjective."""
    f = r.factor(k)
    mask = np.zeros(f.size, dtype=np.uint8)
    mask[r.component_array(k)[np.flatnonzero(ideal.mask)]] = 1
    return Ideal(f, mask)


@dataclass(frozen=True)
class TameWitness:
    index: int
    factor_prime: Ideal


@dataclass(frozen=True)
class Classification:
    """``Tame(k, p)`` when ``witness`` is set, ``Wild`` otherwise."""

    witness: TameWitness = None

    @classmethod
    def tame(cls, k, p):
        return cls(TameWitness(k, p))

    @property
    def is_tame(self):
        return self.witness is not None

    @property
    def is_wild(self):
        return self.witness is None

    @property
    def kind(self):
        return "tame" if self.is_tame else "wild"

    def __repr__(self):
        if self.is_wild:
            return "Wild"
        return f"Tame(k={self.witness.index}, {self.witness.factor_prime.describe()})"


WILD = Classification()


def tame_prime(r, k, p):
    """``pi_k^-1(p) = I_1 x ... x I_m`` with ``I_k = p`` and ``I_j = R_j`` otherwise."""
    _require_product(r)
    if not p.is_proper:
        raise NotPrimeError(f"{p!r} is the whole ring", None)
    w = prime_witness(p)
    if w is not None:
        raise NotPrimeError(f"{p!r} is not prime: {w[0]} * {w[1]} lies in it", w)
    out = pullback(r, k, p)
    if not is_prime(out):
        raise ConsistencyError(f"pullback of a prime along pi_{k} is not prime")
    return out


def classify_prime(r, P):
    """Tame(k, pi_k(P)) for the unique ``k`` with ``e_k`` not in ``P``; Wild if none."""
    _require_product(r)
    if not P.is_proper:
        raise NotPrimeError(f"{P!r} is the whole ring", None)
    w = prime_witness(P)
    if w is not None:
        raise NotPrimeError(f"{P!r} is not prime: {w[0]} * {w[1]} lies in it", w)
    outside = [k for k in r.index_set if unit_idempotent(r, k) not in P]
    if not outside:
        return WILD
    if len(outside) > 1:
        raise ConsistencyError(f"prime misses several unit idempotents: {outside}")
    k = outside[0]
    q = project(r, k, P)
    if not is_prime(q):
        raise ConsistencyError(f"pi_{k}(P) is not prime")
    if pullback(r, k, q) != P:
        raise ConsistencyError(f"P differs from pi_{k}^-1(pi_{k}(P))")
    return Classification.tame(k, q)


def direct_sum_ideal(r):
    """The ideal generated by the unit idempotents (all of ``r`` for finite ``S``)."""
    _require_product(r)
    return ideal_from_generators(r, unit_idempotents(r))


def idempotent_separation(r):
    """``sum e_k == 1``: a prime holding every ``e_k`` would hold 1."""
    total = r.zero
    for e in unit_idempotents(r):
        total = total + e
    if total != r.one:
        raise ConsistencyError(f"unit idempotents of {r} do not sum to 1")
    return True


@dataclass(frozen=True)
class TameIsomorphisms:
    residue: RingHom  # R/P -> R_k/p
    local: RingHom  # R_P -> (R_k)_p


def residue_and_local_iso(r, P, classification=None):
    """The isomorphisms ``R/P ~ R_k/p`` and ``R_P ~ (R_k)_p`` induced by ``pi_k``."""
    from .localization import MultiplicativeSet, localize
    from .rings import QuotientRing

    c = classification or classify_prime(r, P)
    if c.is_wild:
        raise ValueError("residue isomorphisms are defined for tame primes")
    k, p = c.witness.index, c.witness.factor_prime
    comp = r.component_array(k)
    factor = r.factor(k)

    big, small = QuotientRing(r, P), QuotientRing(factor, p)
    res = RingHom(big, small, small.class_of[comp[big.representatives]])

    lbig = localize(r, MultiplicativeSet.complement_of_prime(P))
    lsmall = localize(factor, MultiplicativeSet.complement_of_prime(p))
    num, den = lbig.representative_pairs()
    loc = RingHom(lbig, lsmall, lsmall.class_of_pairs(comp[num], comp[den]))
    for h, name in ((res, "R/P -> R_k/p"), (loc, "R_P -> (R_k)_p")):
        if not h.is_bijective:
            raise ConsistencyError(f"{name} is not bijective for {P!r}")
    return TameIsomorphisms(res, loc)


@dataclass(frozen=True)
class InducedHomReport:
    hom: RingHom
    primes_checked: int
    mismatches: tuple
    idempotents_preserved: bool

    @property
    def ok(self):
        return not self.mismatches and self.idempotents_preserved


def induced_hom_classification(homs):
    """Check that pulling back along ``prod phi_k`` commutes with classification."""
    homs = list(homs)
    phi = product_hom(homs)
    A, B = phi.source, phi.target
    idem_ok = all(phi(unit_idempotent(A, k)) == unit_idempotent(B, k) for k in A.index_set)
    mismatches = []
    spectrum = spec(B)
    for point in spectrum:
        q = point.prime
        cq = classify_prime(B, q)
        pulled = phi.preimage(q)
        cp = classify_prime(A, pulled)
        if cq.is_wild or cp.is_wild:
            if cq.kind != cp.kind:
                mismatches.append((q, cq, cp))
            continue
        k = cq.witness.index
        expected_factor = homs[k - 1].preimage(cq.witness.factor_prime)
        if cp != Classification.tame(k, expected_factor) or pulled != pullback(A, k, expected_factor):
            mismatches.append((q, cq, cp))
    return InducedHomReport(phi, len(spectrum), tuple(mismatches), idem_ok)


def omega(r, subset):
    """``omega_A``: 1 on coordinates in ``A``, 0 elsewhere."""
    _require_product(r)
    subset = set(subset)
    for k in subset:
        r._check_k(k)
    comps = [f.one_index if j in subset else f.zero_index for j, f in enumerate(r.factors, start=1)]
    return Element(r, r.from_components(comps))


def power_set_ring(r):
    _require_product(r)
    return SetRing(r.index_set)


def spec_to_powerset(r, P, setring=None):
    """``M_P = {A : omega_A in P}``, a prime of ``P(S)``."""
    ps = setring or power_set_ring(r)
    mask = np.zeros(ps.size, dtype=np.uint8)
    for i in range(ps.size):
        mask[i] = P.mask[omega(r, ps.encode(i)).index]
    M = Ideal(ps, mask)
    if not is_prime(M):
        raise ConsistencyError(f"M_P is not a prime of {ps}")
    c = classify_prime(r, P)
    if c.is_tame:
        k = c.witness.index
        expected = setring_primes(ps)[r.index_set.index(k)]
        if M != expected:
            raise ConsistencyError(f"M_P differs from P(S - {{{k}}}) for a tame prime at {k}")
    return M


def tame_max_regular(r, k, M):
    """``R(1 - e_k) + (a e_k : a in M, a = a^2)``, checked equal to ``pi_k^-1(M)``."""
    _require_product(r)
    factor = r.factor(k)
    if M.ring != factor or not is_max_regular(M):
        raise NotMaxRegularError(f"{M!r} is not a max-regular ideal of factor {k}")
    e_k = unit_idempotent(r, k)
    gens = [r.one - e_k]
    gens += [embed_component(r, k, Element(factor, a)) for a in factor.idempotent_indices if M.mask[a] and a != factor.zero_index]
    built = Ideal(r, closure_mask(r, [g.index for g in gens]), gens)
    if built != pullback(r, k, M):
        raise ConsistencyError(f"generator formula differs from pi_{k}^-1(M)")
    if not is_max_regular(built):
        raise ConsistencyError(f"pi_{k}^-1(M) is not max-regular")
    return MaxRegularIdeal(built, spec(r).V(built))


def tame_max_regular_map(r):
    """``(k, M) -> pi_k^-1(M)`` over all max-regular ``M`` of all factors, checked bijective."""
    _require_product(r)
    table = {}
    for k in r.index_set:
        for M in max_regular_ideals(r.factor(k)):
            table[(k, M)] = tame_max_regular(r, k, M).ideal
    images = list(table.values())
    if len(set(images)) != len(images):
        raise ConsistencyError(f"(k, M) -> pi_k^-1(M) is not injective on {r}")
    if set(images) != set(max_regular_ideals(r)):
        raise ConsistencyError(f"(k, M) -> pi_k^-1(M) misses max-regular ideals of {r}")
    return table


def v_one_minus_ek_component(r, k):
    """Whether ``V(1 - e_k)`` is a connected component of ``Spec(r)``."""
    _require_product(r)
    spectrum = spec(r)
    v = spectrum.V(r.one - unit_idempotent(r, k))
    result = any(c.component == v for c in connected_components(r, spectrum))
    if result != (not has_nontrivial_idempotents(r.factor(k))):
        raise ConsistencyError(f"V(1 - e_{k}) component test disagrees with idempotents of R_{k}")
    return result


@dataclass(frozen=True)
class TowerReport:
    length: int
    index: int  # nilpotency index of (p mod p^n)_n
    b_square_zero: bool  # b = (0, p, p^2, ..., p^(N-1))
    route: str  # "table" or "componentwise"


def prime_power_tower(length, p=2, route=None):
    """Nilpotency data for ``Z/p x Z/p^2 x ... x Z/p^length``.

    The table route builds the product ring and needs it under the size
    guard; the componentwise route multiplies tuples of residues directly
    and works for any length.
    """
    from math import prod as _prod

    from .rings import ModularRing, nilpotency_index, size_guard

    moduli = [p ** n for n in range(1, length + 1)]
    x = [p % m for m in moduli]
    b = [0] + [p ** (n - 1) for n in range(2, length + 1)]
    if route is None:
        route = "table" if _prod(moduli) <= size_guard() else "componentwise"
    if route == "table":
        r = ProductRing([ModularRing(m) for m in moduli])
        index = nilpotency_index(r.element(tuple(x)))
        bb = r.element(tuple(b))
        return TowerReport(length, index, (bb * bb) == r.zero, route)
    if route != "componentwise":
        raise ValueError(f"unknown route {route!r}")
    power, index = list(x), 1
    while any(power):
        power = [(c * xi) % m for c, xi, m in zip(power, x, moduli)]
        index += 1
    return TowerReport(length, index, all((bi * bi) % m == 0 for bi, m in zip(b, moduli)), route)
