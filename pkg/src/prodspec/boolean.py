"""The Boolean ring of idempotents, power set rings and the finite Stone isomorphism."""
from functools import cached_property

import numpy as np

from .errors import ConsistencyError
from .ideals import Ideal, is_maximal, is_prime
from .rings import Element, Ring, RingHom, TableRing, check_size


class BooleanRingView:
    """Idempotents of ``host`` with ``e (+) f = e + f - 2ef`` and the host product.

    Positions ``0 .. len-1`` follow host index order.
    """

    def __init__(self, host):
        self.host = host
        self.carrier = tuple(int(i) for i in host.idempotent_indices)
        pos = np.full(host.size, -1, dtype=np.int32)
        pos[list(self.carrier)] = np.arange(len(self.carrier))
        self._pos = pos
        c = np.asarray(self.carrier, dtype=np.int64)
        add, mul, neg = host.add_table, host.mul_table, host.neg_table
        ef = mul[np.ix_(c, c)]
        two_ef = add[ef, ef]
        oplus = add[add[np.ix_(c, c)], neg[two_ef]]
        if (pos[oplus] < 0).any() or (pos[ef] < 0).any():
            raise ConsistencyError(f"idempotents of {host} not closed under the Boolean operations")
        self.oplus_table = pos[oplus]
        self.times_table = pos[ef]

    def __len__(self):
        return len(self.carrier)

    def elements(self):
        return [Element(self.host, i) for i in self.carrier]

    def position(self, e):
        p = int(self._pos[e.index])
        if p < 0:
            raise ValueError(f"{e} is not idempotent")
        return p

    def oplus(self, e, f):
        return Element(self.host, self.carrier[self.oplus_table[self.position(e), self.position(f)]])

    def times(self, e, f):
        return Element(self.host, self.carrier[self.times_table[self.position(e), self.position(f)]])

    def leq(self, e, f):
        return self.times(e, f) == e

    @cached_property
    def ring(self):
        """The carrier as a validated table ring, labelled by host elements."""
        labels = [self.host.label(i) for i in self.carrier]
        return TableRing(self.oplus_table, self.times_table, labels=labels,
                         name=f"B({self.host})")

    def __repr__(self):
        return f"B({self.host}) [{len(self)} idempotents]"


def boolean_ring(r):
    return BooleanRingView(r)


def atoms(b):
    """Minimal nonzero idempotents, in host index order."""
    host = b.host
    if host.is_zero_ring:
        return []
    out = []
    nonzero = [e for e in b.elements() if e != host.zero]
    for e in nonzero:
        if not any(f != e and b.times(f, e) == f for f in nonzero):
            out.append(e)
    return out


class SetRing(Ring):
    """Power set ring ``P(S)``: symmetric difference and intersection.

    Subset ``A`` has index ``sum(2**j for the j-th member of S in A)``
    and is encoded as a frozenset of members of ``S``.
    """

    kind = "setring"

    def __init__(self, index_set):
        self.index_set = tuple(index_set)
        if len(set(self.index_set)) != len(self.index_set):
            raise ValueError("index set has repeated members")
        m = len(self.index_set)
        n = 1 << m
        check_size(n, "power set ring")
        self._bit = {s: 1 << j for j, s in enumerate(self.index_set)}
        r = np.arange(n, dtype=np.int64)
        super().__init__(r[:, None] ^ r[None, :], r[:, None] & r[None, :], 0, n - 1)

    @property
    def key(self):
        return ("PS", self.index_set)

    def encode(self, i):
        return frozenset(s for s in self.index_set if i & self._bit[s])

    def index(self, value):
        try:
            return sum(self._bit[s] for s in set(value))
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]!r} is not a member of S") from None

    def label(self, i):
        return "{" + ",".join(str(s) for s in self.index_set if i & self._bit[s]) + "}"

    def subset(self, value):
        return self.element(value)

    def complement(self, a):
        return self.one - a

    def __str__(self):
        return "P({" + ",".join(str(s) for s in self.index_set) + "})"


def stone_iso(b):
    """``e -> {atoms a : ae = a}`` as a verified bijective hom ``B(R) -> P(atoms)``."""
    ats = atoms(b)
    target = SetRing([a.value for a in ats])
    mapping = []
    for e in b.elements():
        below = [a.value for a in ats if b.times(a, e) == a]
        mapping.append(target.index(below))
    h = RingHom(b.ring, target, mapping)
    if not h.is_bijective:
        raise ConsistencyError(f"Stone map of {b} is not bijective")
    return h


def setring_primes(p):
    """The ideals ``P(S - {k})``, one per ``k`` in ``S``; each checked prime and maximal."""
    primes = []
    idx = np.arange(p.size)
    for k in p.index_set:
        mask = ((idx & p._bit[k]) == 0).astype(np.uint8)
        ideal = Ideal(p, mask)
        if not (is_prime(ideal) and is_maximal(ideal)):
            raise ConsistencyError(f"P(S - {{{k}}}) is not a maximal prime of {p}")
        primes.append(ideal)
    return primes
