"""Explicit finite commutative rings.

Every ring is materialized as a pair of ``n x n`` operation tables over the
element indices ``0 .. n-1``.  Each concrete ring class fixes a canonical
*encoding* for its elements (a residue, a tuple of component encodings, a
least coset representative, a table index) and the bijection between
encodings and indices, so element equality is plain index equality.
"""
from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from . import kernels
from .errors import (
    HomomorphismError,
    ResourceLimitError,
    RingAxiomError,
    ZeroRingFactorError,
)

#: default bound on ring size for table construction and exhaustive scans
DEFAULT_SIZE_GUARD = 4096
_size_guard = DEFAULT_SIZE_GUARD


def size_guard():
    return _size_guard


def set_size_guard(limit):
    """Change the global size guard; returns the previous value."""
    global _size_guard
    if limit < 1:
        raise ValueError("size guard must be positive")
    previous, _size_guard = _size_guard, int(limit)
    return previous


def check_size(n, what="ring"):
    if n > _size_guard:
        raise ResourceLimitError(
            f"{what} has {n} elements, above the size guard {_size_guard}"
        )


def _frozen(table):
    arr = np.ascontiguousarray(table, dtype=np.int32)
    arr.setflags(write=False)
    return arr


class Ring:
    """A finite commutative ring given by its addition and multiplication tables.

    Subclasses supply ``key`` (structural identity), ``encode`` and
    ``index``.  Rings are immutable once constructed.
    """

    kind = "ring"

    def __init__(self, add_table, mul_table, zero, one):
        self.add_table = _frozen(add_table)
        self.mul_table = _frozen(mul_table)
        self.size = int(self.add_table.shape[0])
        self.zero_index = int(zero)
        self.one_index = int(one)
        neg = np.argmax(self.add_table == self.zero_index, axis=1)
        self.neg_table = _frozen(neg)

    # identity -----------------------------------------------------------
    @property
    def key(self):
        raise NotImplementedError

    @cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Ring) and self._hash == other._hash and self.key == other.key

    def __len__(self):
        return self.size

    # encodings ----------------------------------------------------------
    def encode(self, i):
        raise NotImplementedError

    def index(self, value):
        raise NotImplementedError

    def label(self, i):
        """Human-readable text for element ``i``."""
        return str(self.encode(i))

    def element(self, value):
        """The element with canonical encoding ``value`` (or a reducible literal)."""
        if isinstance(value, Element):
            if value.ring != self:
                raise ValueError(f"{value} does not belong to {self}")
            return value
        return Element(self, self.index(value))

    __call__ = element

    def at(self, i):
        """The element with index ``i``."""
        return Element(self, int(i))

    def elements(self):
        """All elements, once each, in index order."""
        return [Element(self, i) for i in range(self.size)]

    enumerate = elements

    @property
    def zero(self):
        return Element(self, self.zero_index)

    @property
    def one(self):
        return Element(self, self.one_index)

    @property
    def is_zero_ring(self):
        return self.size == 1

    # arithmetic on Elements ---------------------------------------------
    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    # memoized structure -------------------------------------------------
    @cached_property
    def unit_mask(self):
        mask = kernels.unit_mask(self.mul_table, self.one_index)
        mask.setflags(write=False)
        return mask

    @cached_property
    def idempotent_indices(self):
        idx = np.flatnonzero(np.diagonal(self.mul_table) == np.arange(self.size))
        idx.setflags(write=False)
        return idx

    def is_unit(self, a):
        return bool(self.unit_mask[a.index])

    def __repr__(self):
        return str(self)


class ModularRing(Ring):
    """The integers modulo ``n``; elements are encoded by their residue."""

    kind = "modular"

    def __init__(self, n):
        n = int(n)
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        check_size(n)
        self.modulus = n
        r = np.arange(n, dtype=np.int64)
        super().__init__(np.add.outer(r, r) % n, np.multiply.outer(r, r) % n, 0, 1 % n)

    @property
    def key(self):
        return ("Z", self.modulus)

    def encode(self, i):
        return int(i)

    def index(self, value):
        if isinstance(value, (bool, tuple)) or not isinstance(value, (int, np.integer)):
            raise TypeError(f"Z/{self.modulus} literal must be an integer, got {value!r}")
        return int(value) % self.modulus

    def __str__(self):
        return f"Z/{self.modulus}"


class ProductRing(Ring):
    """Direct product of nonzero rings, indexed by ``S = (1, ..., m)``.

    Elements are tuples of component encodings; indices are mixed-radix with
    the first factor most significant, so index order is lexicographic.
    """

    kind = "product"

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("a product needs at least one factor")
        for pos, f in enumerate(factors, start=1):
            if not isinstance(f, Ring):
                raise TypeError(f"factor {pos} is not a ring: {f!r}")
            if f.is_zero_ring:
                raise ZeroRingFactorError(f"factor {pos} ({f}) is the zero ring")
        sizes = [f.size for f in factors]
        n = prod(sizes)
        check_size(n, "product ring")
        self.factors = factors
        self.sizes = tuple(sizes)
        strides = []
        acc = 1
        for s in reversed(sizes):
            strides.append(acc)
            acc *= s
        self.strides = tuple(reversed(strides))
        r = np.arange(n, dtype=np.int64)
        comps = [(r // st) % sz for st, sz in zip(self.strides, self.sizes)]
        self._components = np.stack(comps).astype(np.int32)
        self._components.setflags(write=False)
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        for f, c, st in zip(factors, comps, self.strides):
            add += f.add_table[c[:, None], c[None, :]].astype(np.int64) * st
            mul += f.mul_table[c[:, None], c[None, :]].astype(np.int64) * st
        zero = sum(f.zero_index * st for f, st in zip(factors, self.strides))
        one = sum(f.one_index * st for f, st in zip(factors, self.strides))
        super().__init__(add, mul, zero, one)

    @property
    def key(self):
        return ("P",) + tuple(f.key for f in self.factors)

    @property
    def arity(self):
        return len(self.factors)

    @property
    def index_set(self):
        return tuple(range(1, len(self.factors) + 1))

    def factor(self, k):
        self._check_k(k)
        return self.factors[k - 1]

    def _check_k(self, k):
        if not (isinstance(k, (int, np.integer)) and 1 <= k <= len(self.factors)):
            raise KeyError(f"index {k!r} not in S = {set(self.index_set)}")

    def components(self, i):
        """Factor indices of element index ``i``."""
        return tuple(int(c) for c in self._components[:, i])

    def component_array(self, k):
        """Array mapping each element index to its ``k``-th component index."""
        self._check_k(k)
        return self._components[k - 1]

    def from_components(self, comp_indices):
        return int(sum(int(c) * st for c, st in zip(comp_indices, self.strides)))

    def tuple_element(self, parts):
        """Build an element from a sequence of factor Elements."""
        parts = tuple(parts)
        if len(parts) != self.arity:
            raise ValueError(f"expected {self.arity} components, got {len(parts)}")
        idx = []
        for f, p in zip(self.factors, parts):
            idx.append(f.element(p).index)
        return Element(self, self.from_components(idx))

    def encode(self, i):
        return tuple(f.encode(c) for f, c in zip(self.factors, self.components(i)))

    def index(self, value):
        if not isinstance(value, (tuple, list)) or len(value) != self.arity:
            raise ValueError(f"{self} literal must be a {self.arity}-tuple, got {value!r}")
        return self.from_components(f.index(v) for f, v in zip(self.factors, value))

    def label(self, i):
        return "(" + ",".join(f.label(c) for f, c in zip(self.factors, self.components(i))) + ")"

    def projection(self, k):
        """The projection homomorphism onto factor ``k``."""
        return RingHom(self, self.factor(k), self.component_array(k), verify=False)

    def __str__(self):
        parts = [f"({f})" if isinstance(f, ProductRing) else str(f) for f in self.factors]
        return " x ".join(parts)


class QuotientRing(Ring):
    """``base / ideal``; each class is encoded by its least representative."""

    kind = "quotient"

    def __init__(self, base, ideal):
        if ideal.ring != base:
            raise ValueError("ideal does not belong to the base ring")
        self.base = base
        self.ideal = ideal
        ideal_idx = np.asarray(ideal.indices, dtype=np.int32)
        reps = kernels.coset_reps(base.add_table, ideal_idx)
        self.representatives = np.unique(reps).astype(np.int32)
        self.representatives.setflags(write=False)
        pos = np.empty(base.size, dtype=np.int32)
        lookup = np.full(base.size, -1, dtype=np.int32)
        lookup[self.representatives] = np.arange(len(self.representatives), dtype=np.int32)
        pos[:] = lookup[reps]
        self.class_of = pos
        self.class_of.setflags(write=False)
        rr = self.representatives
        add = pos[base.add_table[np.ix_(rr, rr)]]
        mul = pos[base.mul_table[np.ix_(rr, rr)]]
        super().__init__(add, mul, pos[base.zero_index], pos[base.one_index])

    @property
    def key(self):
        return ("Q", self.base.key, self.ideal.indices)

    def encode(self, i):
        return self.base.encode(int(self.representatives[i]))

    def index(self, value):
        return int(self.class_of[self.base.index(value)])

    def label(self, i):
        return self.base.label(int(self.representatives[i]))

    def projection(self):
        """The canonical surjection ``base -> base/ideal``."""
        return RingHom(self.base, self, self.class_of, verify=False)

    def __str__(self):
        gens = ",".join(self.base.label(g.index) for g in self.ideal.generators) or "0"
        return f"({self.base})/({gens})"


class TableRing(Ring):
    """A ring given directly by operation tables, validated at construction.

    Elements are encoded by their table index; optional ``labels`` are used
    only for display.
    """

    kind = "table"

    def __init__(self, add_table, mul_table, labels=None, name=None):
        add = np.asarray(add_table, dtype=np.int64)
        mul = np.asarray(mul_table, dtype=np.int64)
        n = add.shape[0] if add.ndim == 2 else 0
        if n == 0 or add.shape != (n, n) or mul.shape != (n, n):
            raise RingAxiomError("square tables", (add.shape, mul.shape))
        check_size(n, "table ring")
        for nm, t in (("addition", add), ("multiplication", mul)):
            bad = np.argwhere((t < 0) | (t >= n))
            if bad.size:
                raise RingAxiomError(f"{nm} closure", tuple(int(x) for x in bad[0]))
        add32 = np.ascontiguousarray(add, dtype=np.int32)
        mul32 = np.ascontiguousarray(mul, dtype=np.int32)
        ar = np.arange(n)
        for nm, t in (("addition", add32), ("multiplication", mul32)):
            bad = np.argwhere(t != t.T)
            if bad.size:
                raise RingAxiomError(f"{nm} commutativity", tuple(int(x) for x in bad[0]))
            w = kernels.associativity_witness(t)
            if w is not None:
                raise RingAxiomError(f"{nm} associativity", w)
        zeros = np.flatnonzero((add32 == ar[None, :]).all(axis=1))
        if zeros.size == 0:
            raise RingAxiomError("additive identity", ())
        zero = int(zeros[0])
        no_inv = np.flatnonzero(~(add32 == zero).any(axis=1))
        if no_inv.size:
            raise RingAxiomError("additive inverse", (int(no_inv[0]),))
        ones = np.flatnonzero((mul32 == ar[None, :]).all(axis=1))
        if ones.size == 0:
            raise RingAxiomError("multiplicative identity", ())
        w = kernels.distributivity_witness(add32, mul32)
        if w is not None:
            raise RingAxiomError("distributivity", w)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        super().__init__(add32, mul32, zero, int(ones[0]))

    @property
    def key(self):
        return ("T", self.size, self.add_table.tobytes(), self.mul_table.tobytes())

    def encode(self, i):
        return int(i)

    def index(self, value):
        if isinstance(value, (bool, tuple)) or not isinstance(value, (int, np.integer)):
            raise TypeError(f"table ring literal must be an index, got {value!r}")
        if not 0 <= value < self.size:
            raise ValueError(f"index {value} out of range for a ring of size {self.size}")
        return int(value)

    def label(self, i):
        return self.labels[i] if self.labels else str(i)

    def __str__(self):
        return self.name or f"Table[{self.size}]"


class Element:
    """An element of a finite ring, identified by ring and index."""

    __slots__ = ("ring", "index")

    def __init__(self, ring, index):
        self.ring = ring
        self.index = int(index)

    @property
    def value(self):
        """Canonical encoding."""
        return self.ring.encode(self.index)

    def _other(self, other):
        if not isinstance(other, Element) or (other.ring is not self.ring and other.ring != self.ring):
            raise TypeError(f"cannot combine {self!r} with {other!r}")
        return other.index

    def __add__(self, other):
        return Element(self.ring, self.ring.add_table[self.index, self._other(other)])

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul_table[self.index, self._other(other)])

    def __neg__(self):
        return Element(self.ring, self.ring.neg_table[self.index])

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, d):
        if d < 0:
            raise ValueError("negative powers are not supported")
        result = self.ring.one_index
        mul = self.ring.mul_table
        for _ in range(d):
            result = mul[result, self.index]
        return Element(self.ring, result)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.index == other.index
            and (self.ring is other.ring or self.ring == other.ring)
        )

    def __hash__(self):
        return hash((self.ring._hash, self.index))

    def __repr__(self):
        return f"{self.ring.label(self.index)} in {self.ring}"

    def __str__(self):
        return self.ring.label(self.index)


class RingHom:
    """A ring homomorphism stored as an index table.

    Construction verifies that 0, 1, addition and multiplication are
    preserved unless ``verify=False`` is passed by a trusted constructor.
    """

    def __init__(self, source, target, mapping, verify=True):
        self.source = source
        self.target = target
        m = np.ascontiguousarray(mapping, dtype=np.int32)
        if m.shape != (source.size,):
            raise HomomorphismError(f"mapping has shape {m.shape}, expected ({source.size},)")
        if m.size and (m.min() < 0 or m.max() >= target.size):
            raise HomomorphismError("mapping leaves the target ring")
        m.setflags(write=False)
        self.mapping = m
        if verify:
            self.verify()

    def verify(self):
        s, t, m = self.source, self.target, self.mapping
        if m[s.zero_index] != t.zero_index:
            raise HomomorphismError(f"0 maps to {t.label(m[s.zero_index])}, not 0")
        if m[s.one_index] != t.one_index:
            raise HomomorphismError(f"1 maps to {t.label(m[s.one_index])}, not 1")
        w = kernels.hom_witness(s.add_table, s.mul_table, t.add_table, t.mul_table, m)
        if w is not None:
            op, a, b = w
            raise HomomorphismError(
                f"{op} not preserved at ({s.label(a)}, {s.label(b)})"
            )

    @classmethod
    def from_function(cls, source, target, func):
        """Tabulate ``func`` (Element -> Element or encoding) and verify it."""
        out = []
        for x in source.elements():
            y = func(x)
            out.append(target.element(y).index)
        return cls(source, target, out)

    def __call__(self, x):
        x = self.source.element(x)
        return Element(self.target, self.mapping[x.index])

    def compose(self, inner):
        """``self o inner``."""
        if inner.target != self.source:
            raise HomomorphismError("composition of incompatible homomorphisms")
        return RingHom(inner.source, self.target, self.mapping[inner.mapping], verify=False)

    @property
    def is_injective(self):
        return len(np.unique(self.mapping)) == self.source.size

    @property
    def is_surjective(self):
        return len(np.unique(self.mapping)) == self.target.size

    @property
    def is_bijective(self):
        return self.is_injective and self.is_surjective

    def preimage_mask(self, mask):
        return np.ascontiguousarray(mask[self.mapping], dtype=np.uint8)

    def preimage(self, ideal):
        """``phi^-1(I)`` as an ideal of the source."""
        from .ideals import Ideal

        if ideal.ring != self.target:
            raise ValueError("ideal is not in the target ring")
        return Ideal.from_mask(self.source, self.preimage_mask(ideal.mask))

    def image_mask(self, mask=None):
        out = np.zeros(self.target.size, dtype=np.uint8)
        src = self.mapping if mask is None else self.mapping[np.flatnonzero(mask)]
        out[src] = 1
        return out

    def __repr__(self):
        return f"RingHom({self.source} -> {self.target})"


# ---------------------------------------------------------------------------
# standard homomorphisms

def identity_hom(r):
    return RingHom(r, r, np.arange(r.size), verify=False)


def canonical_hom(source, target):
    """The unique unital map from ``Z/n`` (sending 1 to 1), when it exists."""
    if not isinstance(source, ModularRing):
        raise HomomorphismError("canonical maps are defined out of Z/n only")
    out = np.empty(source.size, dtype=np.int32)
    acc = target.zero_index
    for i in range(source.size):
        out[i] = acc
        acc = target.add_table[acc, target.one_index]
    return RingHom(source, target, out)


def product_hom(homs, source=None, target=None):
    """The map ``prod A_k -> prod B_k`` induced by a family ``phi_k: A_k -> B_k``."""
    homs = list(homs)
    source = source or ProductRing([h.source for h in homs])
    target = target or ProductRing([h.target for h in homs])
    out = np.zeros(source.size, dtype=np.int64)
    for k, h in enumerate(homs, start=1):
        comp = source.component_array(k)
        out += h.mapping[comp].astype(np.int64) * target.strides[k - 1]
    return RingHom(source, target, out)


def diagonal_hom(r, copies=2):
    """``r -> r x ... x r``, ``a -> (a, ..., a)``."""
    target = ProductRing([r] * copies)
    ar = np.arange(r.size, dtype=np.int64)
    out = sum(ar * st for st in target.strides)
    return RingHom(r, target, out)


def graph_hom(h):
    """``A -> A x C``, ``a -> (a, h(a))``; injective for every ``h``."""
    target = ProductRing([h.source, h.target])
    ar = np.arange(h.source.size, dtype=np.int64)
    out = ar * target.strides[0] + h.mapping.astype(np.int64)
    return RingHom(h.source, target, out)


# ---------------------------------------------------------------------------
# element-level and ring-level analysis

def idempotents(r):
    """All ``e`` with ``e*e == e``, in index order."""
    return [Element(r, i) for i in r.idempotent_indices]


def nilpotency_index(a):
    """Least ``d >= 1`` with ``a**d == 0``; ``None`` if ``a`` is not nilpotent."""
    d = kernels.nilpotency_index(a.ring.mul_table, a.index, a.ring.zero_index)
    return d or None


@dataclass(frozen=True)
class RingPredicates:
    is_local: bool
    is_field: bool
    is_domain: bool
    is_von_neumann_regular: bool
    has_nontrivial_idempotents: bool


def nonunit_mask(r):
    return (r.unit_mask == 0).astype(np.uint8)


def is_local(r):
    """Nonzero ring whose non-units are closed under addition."""
    if r.is_zero_ring:
        return False
    nu = nonunit_mask(r)
    sums = kernels.sum_masks(r.add_table, nu, nu)
    return not bool((sums & (1 - nu)).any())


def is_field(r):
    return not r.is_zero_ring and int(r.unit_mask.sum()) == r.size - 1


def is_domain(r):
    if r.is_zero_ring:
        return False
    nz = np.flatnonzero(np.arange(r.size) != r.zero_index)
    return not bool((r.mul_table[np.ix_(nz, nz)] == r.zero_index).any())


def is_von_neumann_regular(r):
    return kernels.vn_regular_witness(r.mul_table) < 0


def has_nontrivial_idempotents(r):
    return len(r.idempotent_indices) > (1 if r.is_zero_ring else 2)


def ring_predicates(r):
    return RingPredicates(
        is_local=is_local(r),
        is_field=is_field(r),
        is_domain=is_domain(r),
        is_von_neumann_regular=is_von_neumann_regular(r),
        has_nontrivial_idempotents=has_nontrivial_idempotents(r),
    )


@dataclass(frozen=True)
class HomAnalysis:
    kernel: "object"
    image: tuple
    is_injective: bool
    is_surjective: bool


def hom_analysis(h):
    """Kernel ideal, image element set and injectivity/surjectivity of ``h``."""
    from .ideals import Ideal

    kmask = (h.mapping == h.target.zero_index).astype(np.uint8)
    kernel = Ideal.from_mask(h.source, kmask)
    image = tuple(Element(h.target, i) for i in np.unique(h.mapping))
    return HomAnalysis(
        kernel=kernel,
        image=image,
        is_injective=kernel.size == 1,
        is_surjective=len(image) == h.target.size,
    )
