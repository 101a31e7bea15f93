"""Filters on finite index sets and the embedding ``Spec(P(S)) -> Spec(R)``.

For a product ``R = prod R_i`` with a chosen prime ``p_i`` in every factor,
``a* = {i : a_i in p_i}`` sends ring elements to subsets of ``S`` and
``M* = {a : a* not in M}`` sends primes of the power set ring to primes of
``R``.
"""
from dataclasses import dataclass
from itertools import chain, combinations

import numpy as np

from .boolean import SetRing, setring_primes
from .errors import ConsistencyError, ImproperFilterError, NotPrimeError
from .ideals import Ideal, is_prime
from .products import spec_to_powerset, tame_prime
from .rings import ProductRing
from .spectrum import spec


def powerset(items):
    items = tuple(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, n) for n in range(len(items) + 1))]


class FilterObject:
    """A filter on a finite set ``S``, stored as its family of members.

    Construction checks nonemptiness, upward closure and closure under
    intersection; ``require_proper`` additionally rejects ``{}``.
    """

    def __init__(self, index_set, members, require_proper=True):
        self.index_set = tuple(index_set)
        universe = frozenset(self.index_set)
        self.members = frozenset(frozenset(m) for m in members)
        if not self.members:
            raise ValueError("a filter is nonempty")
        for m in self.members:
            if not m <= universe:
                raise ValueError(f"{set(m)} is not a subset of S")
        for m in self.members:
            for sup in powerset(universe - m):
                if m | sup not in self.members:
                    raise ValueError(f"not upward closed: {set(m)} in, {set(m | sup)} out")
        for a in self.members:
            for b in self.members:
                if a & b not in self.members:
                    raise ValueError(f"not closed under intersection: {set(a)} & {set(b)}")
        if require_proper and frozenset() in self.members:
            raise ImproperFilterError("the filter contains the empty set")

    def __contains__(self, subset):
        return frozenset(subset) in self.members

    @property
    def is_proper(self):
        return frozenset() not in self.members

    @property
    def generator(self):
        """Intersection of all members (the filter is principal on it)."""
        return frozenset.intersection(*self.members)

    @property
    def is_principal(self):
        return self.generator in self.members

    @property
    def is_ultrafilter(self):
        universe = frozenset(self.index_set)
        return self.is_proper and all(
            (a in self.members) != ((universe - a) in self.members) for a in powerset(universe)
        )

    def __eq__(self, other):
        return isinstance(other, FilterObject) and self.index_set == other.index_set and self.members == other.members

    def __hash__(self):
        return hash((self.index_set, self.members))

    def __repr__(self):
        gen = self.generator
        if self.is_principal:
            return f"Filter(up{{{','.join(map(str, sorted(gen)))}}} on S={set(self.index_set)})"
        return f"Filter({len(self.members)} members on S={set(self.index_set)})"


def principal_filter(index_set, subset, require_proper=True):
    """All supersets of ``subset``."""
    universe = frozenset(index_set)
    subset = frozenset(subset)
    return FilterObject(index_set, [subset | extra for extra in powerset(universe - subset)], require_proper)


def principal_ultrafilter(index_set, k):
    if k not in index_set:
        raise KeyError(f"{k!r} not in S")
    return principal_filter(index_set, {k})


def all_ultrafilters(index_set):
    """On a finite set these are exactly the principal ones, one per point."""
    return [principal_ultrafilter(index_set, k) for k in index_set]


def cofinite_filter(index_set):
    """Sets with finite complement; every subset of a finite ``S``, hence improper."""
    return FilterObject(index_set, powerset(index_set), require_proper=False)


def proper_principal_filters(index_set):
    return [principal_filter(index_set, a) for a in powerset(index_set) if a]


# ---------------------------------------------------------------------------
# the a* / M* construction

@dataclass(frozen=True)
class BasePrimeChoice:
    """One prime ideal ``p_i`` of each factor of a product ring."""

    ring: ProductRing
    primes: tuple

    def __post_init__(self):
        if len(self.primes) != self.ring.arity:
            raise ValueError(f"need {self.ring.arity} primes, got {len(self.primes)}")
        for k, p in zip(self.ring.index_set, self.primes):
            if p.ring != self.ring.factor(k) or not is_prime(p):
                raise NotPrimeError(f"base choice for factor {k} is not a prime of {self.ring.factor(k)}")

    @classmethod
    def first(cls, ring):
        """The first prime in spectrum order of every factor."""
        return cls(ring, tuple(spec(f)[0].prime for f in ring.factors))

    def star_masks(self):
        """Boolean matrix ``[element, k-1]``: is coordinate ``k`` in ``p_k``."""
        r = self.ring
        cols = [p.mask[r.component_array(k)] for k, p in zip(r.index_set, self.primes)]
        return np.stack(cols, axis=1).astype(bool)


def a_star(a, base):
    """``{i in S : a_i in p_i}``."""
    r = base.ring
    comps = r.components(a.index)
    return frozenset(k for k, c, p in zip(r.index_set, comps, base.primes) if p.mask[c])


def _star_indices(base, setring):
    """Index in ``setring`` of ``a*`` for every element index ``a``."""
    bits = np.array([setring.index({k}) for k in base.ring.index_set], dtype=np.int64)
    return base.star_masks().astype(np.int64) @ bits


def m_star(M, base):
    """``M* = {a : a* not in M}``, checked prime; for ``M = P(S - {k})`` checked equal to ``pi_k^-1(p_k)``."""
    r = base.ring
    ps = M.ring
    if not isinstance(ps, SetRing) or ps.index_set != r.index_set:
        raise ValueError("M must be an ideal of the power set ring of the product's index set")
    if not is_prime(M):
        raise NotPrimeError(f"{M!r} is not a prime of {ps}")
    stars = _star_indices(base, ps)
    mask = (M.mask[stars] == 0).astype(np.uint8)
    out = Ideal(r, mask)
    if not is_prime(out):
        raise ConsistencyError(f"M* is not prime for {M!r}")
    for k, prime_k in zip(r.index_set, setring_primes(ps)):
        if M == prime_k and out != tame_prime(r, k, base.primes[k - 1]):
            raise ConsistencyError(f"M* for P(S - {{{k}}}) differs from pi_{k}^-1(p_{k})")
    return out


@dataclass(frozen=True)
class EmbeddingReport:
    injective: bool
    all_prime: bool
    continuity: bool
    tame_correspondence: bool
    left_inverse: bool
    wild_direction: str
    elements_checked: int
    images: tuple

    @property
    def ok(self):
        return self.injective and self.all_prime and self.continuity and self.tame_correspondence and self.left_inverse


def embedding_checks(base, sample_cap=None, rng=None):
    """Injectivity, continuity and tame correspondence of ``M -> M*``.

    Continuity is checked as ``{M : a not in M*} == V(a*)`` for every element
    ``a`` (or a random sample of ``sample_cap`` of them).
    """
    r = base.ring
    ps = SetRing(r.index_set)
    primes = setring_primes(ps)
    images = [m_star(M, base) for M in primes]
    injective = len(set(images)) == len(images)
    all_prime = all(is_prime(i) for i in images)
    stars = _star_indices(base, ps)
    indices = range(r.size)
    if sample_cap is not None and sample_cap < r.size:
        rng = rng or np.random.default_rng(0)
        indices = sorted(rng.choice(r.size, size=sample_cap, replace=False).tolist())
    continuity = True
    for a in indices:
        preimage = {j for j, img in enumerate(images) if not img.mask[a]}
        v_star = {j for j, M in enumerate(primes) if M.mask[stars[a]]}
        d_complement = {j for j, M in enumerate(primes) if not M.mask[ps.add_table[ps.one_index, stars[a]]]}
        if not (preimage == v_star == d_complement):
            continuity = False
            break
    tame = True
    for k, img in zip(r.index_set, images):
        if img != tame_prime(r, k, base.primes[k - 1]):
            tame = False
    left_inverse = all(spec_to_powerset(r, img, ps) == M for M, img in zip(primes, images))
    return EmbeddingReport(
        injective=injective,
        all_prime=all_prime,
        continuity=continuity,
        tame_correspondence=tame,
        left_inverse=left_inverse,
        wild_direction="vacuous: a finite index set has no non-principal ultrafilter",
        elements_checked=len(indices),
        images=tuple(images),
    )
