"""Ideals as generator closures, their predicates, and the brute-force oracles."""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .rings import Element, QuotientRing, check_size, is_field, nilpotency_index

#: largest ring the exhaustive ideal enumeration accepts by default
ORACLE_GUARD = 64
#: default bound on the number of ideals ``all_ideals`` may return
DEFAULT_IDEAL_CAP = 4096
#: default largest covering family tried by ``has_ideal_avoidance``
DEFAULT_MAX_COVER = 4


class Ideal:
    """An ideal of a finite ring, stored extensionally.

    ``mask`` is the 0/1 membership vector over element indices.  Generators
    are kept for provenance; when an ideal is built from a mask alone a
    generating set is recovered greedily on first access.
    """

    __slots__ = ("ring", "mask", "_indices", "_generators", "_hash")

    def __init__(self, ring, mask, generators=None):
        m = np.ascontiguousarray(mask, dtype=np.uint8)
        m.setflags(write=False)
        self.ring = ring
        self.mask = m
        self._indices = None
        self._generators = None if generators is None else tuple(generators)
        self._hash = None

    @classmethod
    def from_mask(cls, ring, mask, generators=None):
        return cls(ring, mask, generators)

    @property
    def indices(self):
        if self._indices is None:
            self._indices = tuple(int(i) for i in np.flatnonzero(self.mask))
        return self._indices

    @property
    def size(self):
        return len(self.indices)

    @property
    def generators(self):
        if self._generators is None:
            self._generators = tuple(greedy_generators(self))
        return self._generators

    def elements(self):
        return [Element(self.ring, i) for i in self.indices]

    def __contains__(self, x):
        if isinstance(x, Element):
            return bool(self.mask[x.index])
        return bool(self.mask[self.ring.index(x)])

    @property
    def is_proper(self):
        return not self.mask[self.ring.one_index]

    def __le__(self, other):
        return bool((self.mask <= other.mask).all())

    def __lt__(self, other):
        return self <= other and self != other

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and bool((self.mask == other.mask).all())
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.mask.tobytes()))
        return self._hash

    def __add__(self, other):
        return Ideal(self.ring, kernels.sum_masks(self.ring.add_table, self.mask, other.mask),
                     self.generators + other.generators)

    def __and__(self, other):
        return Ideal(self.ring, self.mask & other.mask)

    def describe(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"({gens})"

    def __repr__(self):
        return f"Ideal{self.describe()} of {self.ring} [{self.size} elements]"


def principal_mask(r, x):
    m = np.zeros(r.size, dtype=np.uint8)
    m[r.mul_table[x]] = 1
    return m


def closure_mask(r, gen_indices):
    mask = np.zeros(r.size, dtype=np.uint8)
    mask[r.zero_index] = 1
    for g in gen_indices:
        if not mask[g]:
            mask = kernels.sum_masks(r.add_table, mask, principal_mask(r, g))
    return mask


def greedy_generators(ideal):
    """A generating set: one generator when the ideal is principal, else a greedy scan."""
    r = ideal.ring
    for g in ideal.indices:
        if (principal_mask(r, g) == ideal.mask).all():
            return [Element(r, g)] if g != r.zero_index else []
    current = np.zeros(r.size, dtype=np.uint8)
    current[r.zero_index] = 1
    gens = []
    for i in ideal.indices:
        if not current[i]:
            gens.append(Element(r, i))
            current = kernels.sum_masks(r.add_table, current, principal_mask(r, i))
    return gens


def ideal_from_generators(r, gens=()):
    """The smallest ideal of ``r`` containing ``gens`` (Elements or literals)."""
    check_size(r.size)
    elems = [r.element(g) for g in gens]
    return Ideal(r, closure_mask(r, [g.index for g in elems]), elems)


def zero_ideal(r):
    return ideal_from_generators(r, [])


def unit_ideal(r):
    return Ideal(r, np.ones(r.size, dtype=np.uint8), (r.one,))


def principal_ideal(x):
    return Ideal(x.ring, principal_mask(x.ring, x.index), (x,))


# ---------------------------------------------------------------------------
# predicates

def prime_witness(ideal):
    """``(a, b)`` with ``ab`` in the ideal and ``a, b`` outside it, else ``None``."""
    w = kernels.prime_witness(ideal.ring.mul_table, ideal.mask)
    if w is None:
        return None
    return Element(ideal.ring, w[0]), Element(ideal.ring, w[1])


def is_prime(ideal):
    return ideal.is_proper and prime_witness(ideal) is None


def is_maximal(ideal):
    """An ideal is maximal exactly when its quotient ring is a field."""
    return ideal.is_proper and is_field(QuotientRing(ideal.ring, ideal))


def is_regular_ideal(ideal):
    """True when the ideal is generated by the idempotents it contains."""
    r = ideal.ring
    inside = [int(e) for e in r.idempotent_indices if ideal.mask[e]]
    return bool((closure_mask(r, inside) == ideal.mask).all())


def is_principal(ideal):
    r = ideal.ring
    return any((principal_mask(r, g) == ideal.mask).all() for g in ideal.indices)


# ---------------------------------------------------------------------------
# radicals

def nilradical(r):
    """The ideal of all nilpotent elements."""
    mask = np.zeros(r.size, dtype=np.uint8)
    for a in r.elements():
        if nilpotency_index(a) is not None:
            mask[a.index] = 1
    return Ideal(r, mask)


def radical_of(ideal):
    """``{a : a**m in I for some m >= 1}``."""
    return Ideal(ideal.ring, kernels.radical_mask(ideal.ring.mul_table, ideal.mask))


def jacobson_radical(r):
    """Intersection of the maximal ideals (the whole ring for the zero ring)."""
    from .spectrum import spec

    mask = np.ones(r.size, dtype=np.uint8)
    for point in spec(r):
        mask &= point.prime.mask
    return Ideal(r, mask)


def jacobson_radical_by_units(r):
    """``{a : 1 - xa is a unit for every x}``, computed without any maximal ideal."""
    one = r.one_index
    units = r.unit_mask
    one_minus = r.add_table[one][r.neg_table]  # 1 - y for every y
    mask = units[one_minus[r.mul_table]].all(axis=0).astype(np.uint8)
    return Ideal(r, mask)


@dataclass(frozen=True)
class RadicalOps:
    nilradical: Ideal
    jacobson_radical: Ideal

    @staticmethod
    def radical_of(ideal):
        return radical_of(ideal)


def radical_ops(r):
    return RadicalOps(nilradical=nilradical(r), jacobson_radical=jacobson_radical(r))


# ---------------------------------------------------------------------------
# exhaustive oracles

def all_ideals(r, cap=DEFAULT_IDEAL_CAP, guard=ORACLE_GUARD):
    """Every ideal of ``r``: principal ideals closed under pairwise sums.

    Sorted by size, then by membership vector.
    """
    if r.size > guard:
        raise ResourceLimitError(f"{r} has {r.size} elements, above the oracle guard {guard}")
    found = {}
    for x in range(r.size):
        m = principal_mask(r, x)
        found.setdefault(m.tobytes(), m)
    frontier = list(found.values())
    while frontier:
        known = list(found.values())
        fresh = []
        for a in frontier:
            for b in known:
                s = kernels.sum_masks(r.add_table, a, b)
                key = s.tobytes()
                if key not in found:
                    found[key] = s
                    fresh.append(s)
                    if len(found) > cap:
                        raise ResourceLimitError(f"{r} has more than {cap} ideals")
        frontier = fresh
    ideals = [Ideal(r, m) for m in found.values()]
    ideals.sort(key=lambda i: (i.size, i.indices))
    return ideals


@dataclass(frozen=True)
class AvoidanceResult:
    """Outcome of the brute-force avoidance search.

    When ``holds`` is false, ``ideal`` lies in the union of ``cover`` while
    no member of ``cover`` contains it.
    """

    holds: bool
    max_cover: int
    ideal: Ideal = None
    cover: tuple = ()

    def __bool__(self):
        return self.holds


def _bits(mask):
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def has_ideal_avoidance(r, max_cover=DEFAULT_MAX_COVER, guard=ORACLE_GUARD):
    """Search covers of every ideal by at most ``max_cover`` ideals not containing it."""
    ideals = all_ideals(r, guard=guard)
    bits = [_bits(i.mask) for i in ideals]
    for ii, target in enumerate(bits):
        # traces J & I of ideals J not containing I; a cover may use maximal traces only
        traces = {}
        for jj, b in enumerate(bits):
            if target & ~b:
                traces.setdefault(b & target, jj)
        maximal = [t for t in traces if not any(t != u and t & ~u == 0 for u in traces)]
        for size in range(1, max_cover + 1):
            for family in combinations(maximal, size):
                union = 0
                for t in family:
                    union |= t
                if union == target:
                    cover = tuple(ideals[traces[t]] for t in family)
                    return AvoidanceResult(False, max_cover, ideals[ii], cover)
    return AvoidanceResult(True, max_cover)


def qb_criterion(r, guard=ORACLE_GUARD):
    """True when every localization at a maximal ideal has only principal ideals.

    For a finite ring this is the Bezout half of the Quartararo-Butts
    characterization of avoidance rings (residue fields are finite).
    """
    from .localization import MultiplicativeSet, localize
    from .spectrum import spec

    for point in spec(r):
        local = localize(r, MultiplicativeSet.complement_of_prime(point.prime))
        for ideal in all_ideals(local, guard=guard):
            if not is_principal(ideal):
                return False
    return True
