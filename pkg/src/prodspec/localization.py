"""Localization of finite rings and the filter versions of ``T`` and ``U``.

``T^-1 R`` is built from pairs ``(r, t)`` under
``(r, t) ~ (r', t')  iff  u(rt' - r't) = 0 for some u in T``.  In a finite
ring every ``t/1`` is a unit whose inverse is a power of it, so every class
holds a pair ``(s, 1)`` and the classes correspond to ``R/K`` with
``K = {a : at = 0 for some t in T}``.  Each class is encoded by its least
pair in lexicographic index order.

For a product ``R = prod R_k`` and a proper filter ``F`` on ``S``:

* ``T_F = {x : Omega(x) in F}``, ``Omega(x) = {k : x_k not in m_k}`` (local factors),
* ``U_F = {x : support(x) in F}``,
* ``I_F = {a : S - support(a) in F}``.

With the cofinite filter ``I_F`` is the direct sum ideal; on a finite ``S``
that filter is improper and both sides collapse to the zero ring.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConsistencyError, ImproperFilterError, NotDomainError, NotLocalError, NotPrimeError
from .ideals import Ideal, is_prime
from .rings import (
    Element,
    ProductRing,
    QuotientRing,
    Ring,
    RingHom,
    is_domain,
    is_local,
    nonunit_mask,
)


class MultiplicativeSet:
    """A subset containing 1 and closed under products, with its provenance."""

    def __init__(self, ring, mask, provenance=("explicit",)):
        m = np.ascontiguousarray(mask, dtype=np.uint8)
        if not m[ring.one_index]:
            raise ValueError("a multiplicative set contains 1")
        idx = np.flatnonzero(m)
        if not m[ring.mul_table[np.ix_(idx, idx)]].all():
            raise ValueError("set is not closed under multiplication")
        m.setflags(write=False)
        self.ring = ring
        self.mask = m
        self.provenance = provenance

    @property
    def indices(self):
        return np.flatnonzero(self.mask).astype(np.int32)

    @property
    def size(self):
        return int(self.mask.sum())

    def elements(self):
        return [Element(self.ring, i) for i in self.indices]

    def __contains__(self, x):
        return bool(self.mask[self.ring.element(x).index])

    @classmethod
    def complement_of_prime(cls, prime):
        if not is_prime(prime):
            raise NotPrimeError(f"{prime!r} is not prime")
        return cls(prime.ring, 1 - prime.mask, ("complement", prime))

    @classmethod
    def generated(cls, ring, elems):
        """Smallest multiplicative set containing ``elems``."""
        elems = [ring.element(e) for e in elems]
        mask = np.zeros(ring.size, dtype=np.uint8)
        mask[ring.one_index] = 1
        mask[[e.index for e in elems]] = 1
        while True:
            idx = np.flatnonzero(mask)
            grown = mask.copy()
            grown[ring.mul_table[np.ix_(idx, idx)].ravel()] = 1
            if (grown == mask).all():
                break
            mask = grown
        return cls(ring, mask, ("explicit", tuple(elems)))

    @classmethod
    def explicit(cls, ring, elems):
        mask = np.zeros(ring.size, dtype=np.uint8)
        for e in elems:
            mask[ring.element(e).index] = 1
        return cls(ring, mask, ("explicit", tuple(ring.element(e) for e in elems)))

    @classmethod
    def t_filter(cls, r, F):
        """``{x : Omega(x) in F}`` for a product of local rings."""
        omegas = omega_matrix(r)
        mask = np.array([_subset(r, row) in F for row in omegas], dtype=np.uint8)
        return cls(r, mask, ("T", F))

    @classmethod
    def u_filter(cls, r, F):
        """``{x : support(x) in F}``."""
        supports = support_matrix(r)
        mask = np.array([_subset(r, row) in F for row in supports], dtype=np.uint8)
        return cls(r, mask, ("U", F))

    def __repr__(self):
        return f"MultiplicativeSet({self.provenance[0]}, {self.size} elements of {self.ring})"


class LocalizedRing(Ring):
    """``T^-1 R`` with classes encoded by their least ``(numerator, denominator)`` pair."""

    kind = "localized"

    def __init__(self, base, mset):
        if mset.ring != base:
            raise ValueError("multiplicative set belongs to another ring")
        self.base = base
        self.mult_set = mset
        t_idx = mset.indices
        kmask = kernels.annihilated_mask(base.mul_table, t_idx, base.zero_index)
        self.kernel = Ideal(base, kmask)
        quotient = QuotientRing(base, self.kernel)
        cls = quotient.class_of
        one_cls = cls[base.one_index]
        mul = base.mul_table
        # inverse of every t modulo the kernel
        hits = cls[mul[t_idx]] == one_cls
        if not hits.any(axis=1).all():
            bad = t_idx[np.flatnonzero(~hits.any(axis=1))[0]]
            raise ConsistencyError(f"{base.label(bad)} is not invertible modulo the kernel")
        inverse = np.full(base.size, -1, dtype=np.int32)
        inverse[t_idx] = hits.argmax(axis=1)
        self._inverse = inverse
        self._cls = cls
        nq = quotient.size
        # (r, t) lies in class c exactly when r is congruent to c*t mod K, so the
        # least numerator for (c, t) is the least representative of that coset
        reps = quotient.representatives.astype(np.int64)
        nums = reps[cls[mul[np.ix_(quotient.representatives, t_idx)]]]
        keys = nums * base.size + t_idx[None, :]
        pick = keys.argmin(axis=1)
        best = np.stack([nums[np.arange(nq), pick], t_idx[pick]], axis=1).astype(np.int64)
        order = np.lexsort((best[:, 1], best[:, 0]))
        self._num = best[order, 0].astype(np.int32)
        self._den = best[order, 1].astype(np.int32)
        position = np.empty(nq, dtype=np.int32)
        position[order] = np.arange(nq, dtype=np.int32)
        self._qpos = position
        add = position[quotient.add_table[np.ix_(order, order)]]
        mult = position[quotient.mul_table[np.ix_(order, order)]]
        super().__init__(add, mult, position[quotient.zero_index], position[quotient.one_index])
        self._lookup = {(int(a), int(b)): i for i, (a, b) in enumerate(zip(self._num, self._den))}

    @property
    def key(self):
        return ("L", self.base.key, self.mult_set.mask.tobytes())

    def encode(self, i):
        return (self.base.encode(int(self._num[i])), self.base.encode(int(self._den[i])))

    def index(self, value):
        num, den = value
        return self.class_of_pair(self.base.index(num), self.base.index(den))

    def label(self, i):
        return f"{self.base.label(int(self._num[i]))}/{self.base.label(int(self._den[i]))}"

    def class_of_pair(self, r, t):
        """Index of the class of ``r/t`` (``r``, ``t`` base indices, ``t`` in T)."""
        if not self.mult_set.mask[t]:
            raise ValueError(f"{self.base.label(t)} is not in the multiplicative set")
        return int(self._qpos[self._cls[self.base.mul_table[r, self._inverse[t]]]])

    def class_of_pairs(self, rs, ts):
        rs = np.asarray(rs)
        ts = np.asarray(ts)
        if not self.mult_set.mask[ts].all():
            raise ValueError("denominator outside the multiplicative set")
        return self._qpos[self._cls[self.base.mul_table[rs, self._inverse[ts]]]]

    def fraction(self, r, t):
        return Element(self, self.class_of_pair(self.base.element(r).index, self.base.element(t).index))

    def representative_pairs(self):
        return self._num.copy(), self._den.copy()

    def canonical_map(self):
        """``x -> x/1``."""
        one = self.base.one_index
        ar = np.arange(self.base.size)
        return RingHom(self.base, self, self.class_of_pairs(ar, np.full_like(ar, one)), verify=False)

    def pairs_equivalent(self, p, q):
        """The defining relation, evaluated by searching ``u`` in T."""
        (r1, t1), (r2, t2) = p, q
        b = self.base
        diff = b.add_table[b.mul_table[r1, t2], b.neg_table[b.mul_table[r2, t1]]]
        return bool((b.mul_table[self.mult_set.indices, diff] == b.zero_index).any())

    def spot_verify(self, samples=200, rng=None):
        """Compare class equality with the pair relation on random pairs."""
        rng = rng or np.random.default_rng(0)
        t_idx = self.mult_set.indices
        n = self.base.size
        for _ in range(samples):
            p = (int(rng.integers(n)), int(t_idx[rng.integers(len(t_idx))]))
            q = (int(rng.integers(n)), int(t_idx[rng.integers(len(t_idx))]))
            same = self.class_of_pair(*p) == self.class_of_pair(*q)
            if same != self.pairs_equivalent(p, q):
                raise ConsistencyError(f"class of {p} vs {q} disagrees with the pair relation")
        return True

    def __str__(self):
        return f"T^-1({self.base})[{self.size}]"


def localize(r, mset):
    return LocalizedRing(r, mset)


def localize_at_prime(prime):
    return LocalizedRing(prime.ring, MultiplicativeSet.complement_of_prime(prime))


# ---------------------------------------------------------------------------
# Omega and support

def _subset(r, row):
    return frozenset(k for k, flag in zip(r.index_set, row) if flag)


def _require_local_factors(r):
    if not isinstance(r, ProductRing):
        raise TypeError(f"{r} is not a direct product ring")
    for k, f in zip(r.index_set, r.factors):
        if not is_local(f):
            raise NotLocalError(f"factor {k} ({f}) is not local", k)


def omega_matrix(r):
    """Row ``x``: which coordinates of ``x`` are units (lie outside ``m_k``)."""
    _require_local_factors(r)
    cols = [(nonunit_mask(f) == 0)[r.component_array(k)] for k, f in zip(r.index_set, r.factors)]
    return np.stack(cols, axis=1)


def support_matrix(r):
    cols = [r.component_array(k) != f.zero_index for k, f in zip(r.index_set, r.factors)]
    return np.stack(cols, axis=1)


def omega_set(r, x):
    """``{k : x_k not in m_k}``; every factor must be local."""
    return _subset(r, omega_matrix(r)[r.element(x).index])


def support(r, x):
    """``{k : x_k != 0}``."""
    return _subset(r, support_matrix(r)[r.element(x).index])


def filter_ideal(r, F):
    """``I_F = {a : S - support(a) in F}``."""
    universe = frozenset(r.index_set)
    mask = np.array([(universe - _subset(r, row)) in F for row in support_matrix(r)], dtype=np.uint8)
    return Ideal(r, mask)


# ---------------------------------------------------------------------------
# the isomorphism R/I_F -> T_F^-1 R

@dataclass(frozen=True)
class FilterQuotientIso:
    hom: RingHom  # R/I_F -> T_F^-1 R
    mult_set: MultiplicativeSet
    ideal: Ideal
    localized: LocalizedRing
    quotient: QuotientRing


def _check_filter(r, F, allow_improper):
    if tuple(F.index_set) != r.index_set:
        raise ValueError("filter is on a different index set")
    if not F.is_proper and not allow_improper:
        raise ImproperFilterError("a proper filter is required")


def filter_quotient_iso(r, F, allow_improper=False):
    """Build and verify ``a + I_F -> a/1`` for a product of local rings."""
    _require_local_factors(r)
    _check_filter(r, F, allow_improper)
    T = MultiplicativeSet.t_filter(r, F)
    L = localize(r, T)
    I = filter_ideal(r, F)
    if L.kernel != I:
        raise ConsistencyError(f"kernel of R -> T^-1 R differs from I_F for {F!r}")
    Q = QuotientRing(r, I)
    canon = L.canonical_map()
    hom = RingHom(Q, L, canon.mapping[Q.representatives])
    if not hom.is_bijective:
        raise ConsistencyError(f"R/I_F -> T^-1 R is not bijective for {F!r}")
    # surjectivity through the partial inverse b' of each denominator b
    omegas = omega_matrix(r)
    num, den = L.representative_pairs()
    for cls_index, (a, b) in enumerate(zip(num, den)):
        b_inv = _partial_inverse(r, int(b), omegas[b])
        if not I.mask[r.add_table[r.one_index, r.neg_table[r.mul_table[b, b_inv]]]]:
            raise ConsistencyError(f"1 - b b' is not in I_F for b = {r.label(b)}")
        if hom.mapping[Q.class_of[r.mul_table[a, b_inv]]] != cls_index:
            raise ConsistencyError(f"a b' does not map to a/b for {r.label(a)}/{r.label(b)}")
    return FilterQuotientIso(hom, T, I, L, Q)


def _partial_inverse(r, b, unit_row):
    comps = []
    for k, f, c, is_unit in zip(r.index_set, r.factors, r.components(b), unit_row):
        if is_unit:
            comps.append(int(np.flatnonzero(f.mul_table[c] == f.one_index)[0]))
        else:
            comps.append(f.zero_index)
    return r.from_components(comps)


def kernel_law_holds(r, subset):
    """``Ker(R -> T_F^-1 R) == {a : support(a) misses A}`` for ``F`` principal on ``A``."""
    from .ultrafilters import principal_filter

    F = principal_filter(r.index_set, subset)
    L = localize(r, MultiplicativeSet.t_filter(r, F))
    subset = frozenset(subset)
    expected = np.array([not (_subset(r, row) & subset) for row in support_matrix(r)], dtype=np.uint8)
    return bool((L.kernel.mask == expected).all())


@dataclass(frozen=True)
class DomainEmbeddingReport:
    kernel_matches: bool
    injective: bool
    surjective: bool

    @property
    def ok(self):
        return self.kernel_matches and self.injective


def domain_embedding_check(r, F):
    """``R/I_F -> U_F^-1 R`` is injective when every factor is a domain."""
    if not isinstance(r, ProductRing):
        raise TypeError(f"{r} is not a direct product ring")
    for k, f in zip(r.index_set, r.factors):
        if not is_domain(f):
            raise NotDomainError(f"factor {k} ({f}) is not an integral domain")
    _check_filter(r, F, False)
    U = MultiplicativeSet.u_filter(r, F)
    L = localize(r, U)
    I = filter_ideal(r, F)
    Q = QuotientRing(r, I)
    induced = L.canonical_map().mapping[Q.representatives]
    hom = RingHom(Q, L, induced)
    return DomainEmbeddingReport(L.kernel == I, hom.is_injective, hom.is_surjective)


def prime_disjoint_from_T(r, F, P):
    """``P`` misses ``T_F``; for ``F`` principal on ``A`` this happens exactly
    when ``P`` is tame at an index in ``A``.
    """
    from .products import classify_prime

    T = MultiplicativeSet.t_filter(r, F)
    disjoint = not bool((T.mask & P.mask).any())
    if F.is_principal:
        c = classify_prime(r, P)
        expected = c.is_tame and c.witness.index in F.generator
        if disjoint != expected:
            raise ConsistencyError(f"P & T_F = {{}} is {disjoint} but tame index test gives {expected}")
    return disjoint


def lying_over_minimal(phi, p):
    """First prime ``q`` of the target (spectrum order) with ``phi^-1(q) == p``."""
    from .spectrum import spec

    if not phi.is_injective:
        raise ValueError("lying over needs an injective ring map")
    if p.ring != phi.source or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not a prime of {phi.source}")
    for point in spec(phi.target):
        if phi.preimage(point.prime) == p:
            return point.prime
    raise ConsistencyError(f"no prime of {phi.target} lies over {p!r}")
