"""Prime spectra of finite rings with Zariski-topology utilities.

Points are computed structurally: a finite ring splits along its atoms
(primitive idempotents) into local factors ``R a``, and each local factor
contributes one prime, the preimage of its non-units.
"""
from dataclasses import dataclass

import numpy as np

from .boolean import BooleanRingView, atoms
from .errors import ConsistencyError
from .ideals import Ideal, closure_mask, is_prime, is_regular_ideal
from .rings import Element, QuotientRing, check_size, has_nontrivial_idempotents


@dataclass(frozen=True, eq=False)
class SpectrumPoint:
    prime: Ideal
    atom: Element

    def __eq__(self, other):
        return isinstance(other, SpectrumPoint) and self.prime == other.prime

    def __hash__(self):
        return hash(self.prime)

    def __repr__(self):
        return f"SpectrumPoint({self.prime.describe()}, atom={self.atom})"


class Spectrum:
    """``Spec(R)`` ordered by prime membership (lexicographic on indices), with ``D`` and ``V``."""

    def __init__(self, ring, points):
        self.ring = ring
        self.points = tuple(points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def primes(self):
        return [p.prime for p in self.points]

    def D(self, x):
        """Points not containing ``x``."""
        x = self.ring.element(x)
        return frozenset(p for p in self.points if not p.prime.mask[x.index])

    def V(self, what):
        """Points containing an element or an ideal."""
        if isinstance(what, Ideal):
            return frozenset(p for p in self.points if what <= p.prime)
        x = self.ring.element(what)
        return frozenset(p for p in self.points if p.prime.mask[x.index])

    def point_of(self, prime):
        for p in self.points:
            if p.prime == prime:
                return p
        raise KeyError(f"{prime!r} is not a point of Spec({self.ring})")

    def __repr__(self):
        return f"Spec({self.ring}) = {{{', '.join(p.prime.describe() for p in self.points)}}}"


def spec(r):
    """Every prime ideal of ``r``, one per atom of its Boolean ring."""
    check_size(r.size)
    mul = r.mul_table
    points = []
    for a in atoms(BooleanRingView(r)):
        local = np.unique(mul[a.index])
        hits = mul[np.ix_(local, local)] == a.index
        units = np.zeros(r.size, dtype=bool)
        units[local[hits.any(axis=1)]] = True
        mask = (~units[mul[:, a.index]]).astype(np.uint8)
        prime = Ideal(r, mask)
        if not is_prime(prime) or prime.mask[a.index]:
            raise ConsistencyError(f"atom {a} of {r} produced a non-prime {prime!r}")
        points.append(SpectrumPoint(prime, a))
    points.sort(key=lambda p: p.prime.indices)
    return Spectrum(r, points)


def zariski(r, spectrum=None):
    """The spectrum of ``r`` exposing ``D(x)`` and ``V(I)``."""
    return spectrum if spectrum is not None else spec(r)


def D(spectrum, x):
    return spectrum.D(x)


def V(spectrum, what):
    return spectrum.V(what)


@dataclass(frozen=True)
class MaxRegularIdeal:
    ideal: Ideal
    component: frozenset

    def __repr__(self):
        pts = ", ".join(p.prime.describe() for p in self.component)
        return f"MaxRegularIdeal({self.ideal.describe()}, V = {{{pts}}})"


def regular_ideals(r):
    """All regular ideals; each is ``Re`` for a single idempotent ``e``."""
    seen = {}
    for e in r.idempotent_indices:
        m = closure_mask(r, [int(e)])
        seen.setdefault(m.tobytes(), Ideal(r, m, (Element(r, e),)))
    return sorted(seen.values(), key=lambda i: (i.size, i.indices))


def max_regular_ideals(r):
    """Maximal elements among the proper regular ideals."""
    proper = [i for i in regular_ideals(r) if i.is_proper]
    return [i for i in proper if not any(i < j for j in proper)]


def is_max_regular(ideal):
    return ideal in max_regular_ideals(ideal.ring)


def connected_components(r, spectrum=None):
    """One max-regular ideal per atom ``a``: the ideal of idempotents killing ``a``."""
    spectrum = spectrum or spec(r)
    b = BooleanRingView(r)
    mul = r.mul_table
    out = []
    for a in atoms(b):
        killers = [e for e in b.carrier if mul[e, a.index] == r.zero_index]
        ideal = Ideal(r, closure_mask(r, killers))
        if not (ideal.is_proper and is_regular_ideal(ideal)):
            raise ConsistencyError(f"component ideal for atom {a} is not proper regular")
        if has_nontrivial_idempotents(QuotientRing(r, ideal)):
            raise ConsistencyError(f"quotient by component ideal for atom {a} is disconnected")
        out.append(MaxRegularIdeal(ideal, spectrum.V(ideal)))
    covered = [p for c in out for p in c.component]
    if len(covered) != len(spectrum) or set(covered) != set(spectrum.points):
        raise ConsistencyError(f"components of Spec({r}) do not partition it")
    return out


def krull_dim(r, spectrum=None):
    """Longest strict chain of primes under containment (always 0 here)."""
    spectrum = spectrum or spec(r)
    primes = spectrum.primes
    order = sorted(range(len(primes)), key=lambda i: primes[i].size)
    height = {}
    for i in order:
        below = [height[j] + 1 for j in height if primes[j] < primes[i]]
        height[i] = max(below, default=0)
    dim = max(height.values(), default=0)
    if dim != 0:
        raise ConsistencyError(f"finite ring {r} has a prime chain of length {dim}")
    return dim


@dataclass(frozen=True)
class PurityReport:
    pure: bool
    classification: tuple  # (MaxRegularIdeal, "tame" | "wild") per component
    idempotents_checked: int


def component_purity_check(r):
    """Every component lies inside ``D(e)`` or ``V(e)`` for every idempotent ``e``,
    and is made of tame primes only or wild primes only.
    """
    from .products import classify_prime

    spectrum = spec(r)
    comps = connected_components(r, spectrum)
    pure = True
    labels = []
    idems = [Element(r, e) for e in r.idempotent_indices]
    for c in comps:
        for e in idems:
            d = spectrum.D(e)
            if not (c.component <= d or not (c.component & d)):
                pure = False
        kinds = {classify_prime(r, p.prime).kind for p in c.component}
        if len(kinds) != 1:
            pure = False
        labels.append((c, "/".join(sorted(kinds))))
    return PurityReport(pure, tuple(labels), len(idems))
