"""Seeded property checks over generated rings, with replayable reports.

Each property draws instances from ``random.Random(f"{seed}:{id}")``, so a
(property, seed, config) triple always checks the same instances.  An
instance is a small JSON-friendly dict (ring expressions as DSL text plus
literals), which is what a failing report carries as its counterexample.
"""
import random
import time
from dataclasses import dataclass, field, replace
from itertools import product as iproduct
from math import prod

import numpy as np

from . import dsl
from .dsl import NamedFixture, Prod, Quot, ZMod, to_text
from .errors import ResourceLimitError, RingError
from .ideals import (
    DEFAULT_MAX_COVER,
    all_ideals,
    has_ideal_avoidance,
    is_prime,
    jacobson_radical,
    jacobson_radical_by_units,
    nilradical,
    qb_criterion,
    unit_ideal,
)
from .localization import (
    filter_quotient_iso,
    kernel_law_holds,
    lying_over_minimal,
    domain_embedding_check,
)
from .products import (
    Classification,
    classify_prime,
    direct_sum_ideal,
    idempotent_separation,
    induced_hom_classification,
    prime_power_tower,
    pullback,
    residue_and_local_iso,
    tame_max_regular_map,
    tame_prime,
    unit_idempotent,
    v_one_minus_ek_component,
)
from .rings import (
    QuotientRing,
    canonical_hom,
    diagonal_hom,
    graph_hom,
    identity_hom,
    is_von_neumann_regular,
    product_hom,
)
from .spectrum import (
    component_purity_check,
    connected_components,
    krull_dim,
    regular_ideals,
    spec,
)
from .ultrafilters import BasePrimeChoice, cofinite_filter, embedding_checks, powerset, principal_filter

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    trials: int = None  # None: the property's default
    max_size: int = None  # largest generated ring order; None: the property's default
    max_cover: int = DEFAULT_MAX_COVER


@dataclass
class VerificationReport:
    property_id: str
    seed: int
    trials: int
    checked: int
    status: str  # "pass" | "fail" | "vacuous"
    wall_time_ms: float
    aborted: list = field(default_factory=list)
    counterexample: dict = None
    notes: list = field(default_factory=list)

    @property
    def failed(self):
        return self.status == "fail"

    def to_dict(self, wall_time=True):
        out = {
            "schema": SCHEMA,
            "propertyId": self.property_id,
            "seed": self.seed,
            "trials": self.trials,
            "checked": self.checked,
            "status": self.status,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.aborted:
            out["aborted"] = self.aborted
        if self.notes:
            out["notes"] = self.notes
        if wall_time:
            out["wallTimeMs"] = round(self.wall_time_ms, 3)
        return out


class CheckFailed(Exception):
    """Raised by a property check; the message says what went wrong."""


def expect(condition, message):
    if not condition:
        raise CheckFailed(message)


# ---------------------------------------------------------------------------
# ring generation

_ring_cache = {}


def ring_of(text):
    r = _ring_cache.get(text)
    if r is None:
        r = _ring_cache[text] = dsl.ring_from_text(text)
    return r


def size_of(expr):
    return ring_of(to_text(expr)).size


def random_literal(rng, expr):
    """A random element literal of the ring ``expr`` describes."""
    if isinstance(expr, ZMod):
        return rng.randrange(expr.n)
    if isinstance(expr, Prod):
        return tuple(random_literal(rng, f) for f in expr.factors)
    if isinstance(expr, Quot):
        return random_literal(rng, expr.base)
    return rng.randrange(size_of(expr))


SMALL_FIXTURES = ("F2x2", "GF4", "F2xy2", "Z4x2", "GF8", "GF9")
LOCAL_POOL = ("Z/2", "Z/3", "Z/4", "Z/5", "Z/7", "Z/8", "Z/9", "Z/25", "Z/27", "GF4", "GF8", "GF9")


def gen_modular(rng, hi, lo=2):
    return ZMod(rng.randint(lo, max(lo, hi)))


def gen_quotient(rng, max_size):
    if rng.random() < 0.6:
        base = gen_modular(rng, min(max_size * 4, 64))
    else:
        base = Prod((gen_modular(rng, 8), gen_modular(rng, 8)))
    gens = tuple(random_literal(rng, base) for _ in range(rng.randint(1, 2)))
    return Quot(base, gens)


def gen_factor(rng, max_size):
    """A nonzero ring of order at most ``max_size``."""
    while True:
        roll = rng.random()
        if roll < 0.6:
            e = gen_modular(rng, min(max_size, 16))
        elif roll < 0.8:
            e = gen_quotient(rng, max_size)
        else:
            e = NamedFixture(rng.choice(SMALL_FIXTURES))
        if 1 < size_of(e) <= max_size:
            return e


def gen_product(rng, max_size, arity=(2, 4), factor=None):
    factor = factor or gen_factor
    while True:
        m = rng.randint(*arity)
        budget = max(2, int(max_size ** (1 / m)) + 2)
        factors = tuple(factor(rng, budget) for _ in range(m))
        if prod(size_of(f) for f in factors) <= max_size:
            return Prod(factors)


def gen_any(rng, max_size):
    roll = rng.random()
    if roll < 0.35:
        return gen_modular(rng, max_size, lo=1)
    if roll < 0.7:
        return gen_product(rng, max_size, arity=(2, 3))
    if roll < 0.9:
        while True:
            e = gen_quotient(rng, max_size)
            if size_of(e) <= max_size:
                return e
    return gen_factor(rng, max_size)


def gen_local_product(rng, max_size, arity=(2, 3)):
    while True:
        factors = tuple(dsl.parse(rng.choice(LOCAL_POOL)) for _ in range(rng.randint(*arity)))
        if prod(size_of(f) for f in factors) <= max_size:
            return Prod(factors)


# ---------------------------------------------------------------------------
# homomorphism descriptions

def _divisors(n):
    return [d for d in range(2, n + 1) if n % d == 0]


def _char(r):
    acc, n = r.one_index, 1
    while acc != r.zero_index:
        acc = r.add_table[acc, r.one_index]
        n += 1
    return n


def gen_hom(rng, injective=False):
    """A JSON description of a ring map between small generated rings."""
    kinds = ["identity", "diagonal", "graph", "canonical"] if injective else [
        "identity", "diagonal", "graph", "canonical", "projection"]
    kind = rng.choice(kinds)
    if kind in ("identity", "diagonal"):
        return {"kind": kind, "source": to_text(gen_factor(rng, 12))}
    m = rng.choice([2, 3, 4, 6, 8, 9, 10, 12])
    if kind == "projection":
        while True:
            base = gen_factor(rng, 12)
            target = Quot(base, (random_literal(rng, base),))
            if size_of(target) > 1:
                return {"kind": kind, "source": to_text(base), "target": to_text(target)}
    divs = _divisors(m)
    if kind == "graph":
        return {"kind": kind, "source": f"Z/{m}", "target": f"Z/{rng.choice(divs)}"}
    # canonical Z/m -> target, injective exactly when char(target) == m
    while True:
        parts = [rng.choice(divs) for _ in range(rng.randint(1, 2))]
        if injective and np.lcm.reduce(parts) != m:
            continue
        target = " x ".join(f"Z/{d}" for d in parts)
        return {"kind": kind, "source": f"Z/{m}", "target": target}


def build_hom(desc):
    kind = desc["kind"]
    source = ring_of(desc["source"])
    if kind == "identity":
        return identity_hom(source)
    if kind == "diagonal":
        return diagonal_hom(source)
    if kind == "filter":
        return filter_quotient_iso(source, principal_filter(source.index_set, desc["subset"])).hom
    target = ring_of(desc["target"])
    if kind == "canonical":
        return canonical_hom(source, target)
    if kind == "graph":
        return graph_hom(canonical_hom(source, target))
    if kind == "projection":
        return target.projection()
    raise ValueError(f"unknown hom kind {kind!r}")


# ---------------------------------------------------------------------------
# property checks

def _ring_instance(gen):
    def generate(rng, cfg):
        return {"ring": to_text(gen(rng, cfg.max_size))}
    return generate


def check_spec_oracle(inst, cfg):
    r = ring_of(inst["ring"])
    got = set(spec(r).primes)
    oracle = {i for i in all_ideals(r, guard=max(64, r.size)) if is_prime(i)}
    expect(got == oracle, f"spec has {len(got)} primes, oracle {len(oracle)}; "
           f"extra {[p.describe() for p in got - oracle]}, missing {[p.describe() for p in oracle - got]}")


def check_tame_structure(inst, cfg):
    r = ring_of(inst["ring"])
    spectrum = spec(r)
    pieces = [spectrum.D(unit_idempotent(r, k)) for k in r.index_set]
    expect(sum(len(p) for p in pieces) == len(spectrum), "the sets D(e_k) overlap")
    expect(frozenset().union(*pieces) == frozenset(spectrum.points), "the sets D(e_k) do not cover Spec")
    for point in spectrum:
        P = point.prime
        c = classify_prime(r, P)
        expect(c.is_tame, f"{P.describe()} classified Wild")
        k, p = c.witness.index, c.witness.factor_prime
        expect(point in pieces[k - 1], f"{P.describe()} tame at {k} but outside D(e_{k})")
        expect(P == pullback(r, k, p), f"{P.describe()} differs from pi_{k}^-1(pi_{k}(P))")
        expect(tame_prime(r, k, p) == P, f"tame_prime(classify({P.describe()})) differs")
        iso = residue_and_local_iso(r, P, c)
        expect(iso.residue.is_bijective and iso.local.is_bijective, f"residue/local maps not bijective at {P.describe()}")
    for k in r.index_set:
        for q in spec(r.factor(k)).primes:
            c = classify_prime(r, tame_prime(r, k, q))
            expect(c == Classification.tame(k, q), f"classify(tame_prime({k}, {q.describe()})) = {c!r}")


def check_wild_empty(inst, cfg):
    r = ring_of(inst["ring"])
    dsi = direct_sum_ideal(r)
    expect(dsi == unit_ideal(r), "direct sum ideal is proper")
    spectrum = spec(r)
    expect(not spectrum.V(dsi), "V(direct sum ideal) is nonempty")
    idempotent_separation(r)
    for point in spectrum:
        expect(classify_prime(r, point.prime).is_tame, f"wild prime {point.prime.describe()}")


def gen_ultra(rng, cfg):
    pool = ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/10", "Z/12", "Z/15", "Z/30", "GF4", "F2x2"]
    while True:
        m = rng.choice([2, 3, 4])
        texts = [rng.choice(pool) for _ in range(m)]
        factors = [ring_of(t) for t in texts]
        if prod(f.size for f in factors) > cfg.max_size:
            continue
        counts = [len(spec(f)) for f in factors]
        combos = list(iproduct(*[range(c) for c in counts]))
        if len(combos) < 3:
            continue
        chosen = rng.sample(combos, min(len(combos), rng.randint(3, 5)))
        return {"ring": " x ".join(texts), "choices": [list(c) for c in chosen]}


def check_ultra(inst, cfg):
    r = ring_of(inst["ring"])
    choices = [tuple(c) for c in inst["choices"]]
    expect(len(set(choices)) >= 3, "fewer than 3 distinct base prime choices")
    for choice in choices:
        primes = tuple(spec(f).primes[i] for f, i in zip(r.factors, choice))
        report = embedding_checks(BasePrimeChoice(r, primes))
        expect(report.ok, f"embedding checks failed for choice {list(choice)}: {report}")


def check_filter_iso(inst, cfg):
    r = ring_of(inst["ring"])
    for A in powerset(r.index_set):
        if not A:
            continue
        F = principal_filter(r.index_set, A)
        iso = filter_quotient_iso(r, F)
        expect(iso.hom.is_bijective, f"R/I_F -> T^-1 R not bijective for A = {sorted(A)}")
        expect(kernel_law_holds(r, A), f"kernel law fails for A = {sorted(A)}")
    degenerate = filter_quotient_iso(r, cofinite_filter(r.index_set), allow_improper=True)
    expect(degenerate.localized.is_zero_ring and degenerate.quotient.is_zero_ring,
           "cofinite filter does not collapse both sides to the zero ring")


def gen_domain_product(rng, cfg):
    pool = ("Z/2", "Z/3", "Z/5", "Z/7", "Z/11", "GF4", "GF8", "GF9")
    while True:
        texts = [rng.choice(pool) for _ in range(rng.randint(2, 3))]
        if prod(ring_of(t).size for t in texts) <= cfg.max_size:
            r = ring_of(" x ".join(texts))
            subset = sorted(rng.choice([a for a in powerset(r.index_set) if a]))
            return {"ring": " x ".join(texts), "subset": subset}


def check_domain_embedding(inst, cfg):
    r = ring_of(inst["ring"])
    report = domain_embedding_check(r, principal_filter(r.index_set, inst["subset"]))
    expect(report.kernel_matches, "kernel of R -> U^-1 R differs from I_F")
    expect(report.injective, "R/I_F -> U^-1 R is not injective")
    expect(report.surjective, "R/I_F -> U^-1 R is not surjective for field factors")


def _pulled_product_mask(r, per_factor):
    mask = np.ones(r.size, dtype=np.uint8)
    for k, ideal in zip(r.index_set, per_factor):
        mask &= pullback(r, k, ideal).mask
    return mask


def check_zero_dim(inst, cfg):
    r = ring_of(inst["ring"])
    N = nilradical(r)
    expect((N.mask == _pulled_product_mask(r, [nilradical(f) for f in r.factors])).all(), "N(prod) != prod N")
    J = jacobson_radical(r)
    expect((J.mask == _pulled_product_mask(r, [jacobson_radical(f) for f in r.factors])).all(), "J(prod) != prod J")
    expect(J == jacobson_radical_by_units(r), "Jacobson radical differs from the unit characterization")
    expect(krull_dim(r) == 0, "Krull dimension is not 0")
    expect(is_von_neumann_regular(QuotientRing(r, N)), "R/N(R) is not von Neumann regular")


def check_tower(inst, cfg):
    n = inst["length"]
    t = prime_power_tower(n)
    expect(t.index == n, f"nilpotency index {t.index}, expected {n}")
    expect(t.b_square_zero, "b^2 != 0")


def check_components(inst, cfg):
    r = ring_of(inst["ring"])
    count = len(connected_components(r))
    expected = sum(len(connected_components(f)) for f in r.factors)
    expect(count == expected, f"{count} components, factors give {expected}")
    tame_max_regular_map(r)
    for k in r.index_set:
        v_one_minus_ek_component(r, k)
    spectrum = spec(r)
    regs = regular_ideals(r)
    by_v = {}
    for ideal in regs:
        v = spectrum.V(ideal)
        expect(by_v.setdefault(v, ideal) == ideal, "two regular ideals share V")
    expect(component_purity_check(r).pure, "a component is not pure")


def gen_avoidance(rng, cfg):
    if rng.random() < 0.5:
        return {"ring": to_text(gen_any(rng, min(cfg.max_size, 16))), "mode": "compare"}
    pool = [t for t in ("Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "GF4", "F2x2", "Z/9") if qb_criterion(ring_of(t))]
    while True:
        texts = [rng.choice(pool) for _ in range(rng.randint(2, 3))]
        if prod(ring_of(t).size for t in texts) <= 64:
            return {"ring": " x ".join(texts), "mode": "product"}


def check_avoidance(inst, cfg):
    r = ring_of(inst["ring"])
    result = has_ideal_avoidance(r, max_cover=cfg.max_cover)
    if inst.get("mode") == "product":
        expect(result.holds, f"product of avoidance rings fails avoidance: {result.ideal!r} covered by {result.cover}")
        return
    qb = qb_criterion(r)
    expect(result.holds == qb, f"brute force says {result.holds}, local criterion says {qb}")
    if "expect" in inst:
        expect(result.holds == inst["expect"] and qb == inst["expect"], f"expected avoidance {inst['expect']}")


def gen_induced(rng, cfg):
    while True:
        homs = [gen_hom(rng) for _ in range(rng.randint(2, 3))]
        built = [build_hom(h) for h in homs]
        if prod(h.source.size for h in built) <= cfg.max_size and prod(h.target.size for h in built) <= cfg.max_size:
            return {"homs": homs}


def check_induced(inst, cfg):
    homs = [build_hom(h) for h in inst["homs"]]
    report = induced_hom_classification(homs)
    expect(report.idempotents_preserved, "phi(e_k) != e'_k")
    expect(not report.mismatches, f"classification does not commute with preimage at {report.mismatches[:1]}")


def gen_lying_over(rng, cfg):
    while True:
        roll = rng.random()
        if roll < 0.15:
            r = gen_local_product(rng, min(cfg.max_size, 256))
            subset = sorted(rng.choice([a for a in powerset(range(1, len(r.factors) + 1)) if a]))
            inst = {"hom": {"kind": "filter", "source": to_text(r), "subset": subset}}
        elif roll < 0.4:
            inst = {"homs": [gen_hom(rng, injective=True) for _ in range(2)]}
        else:
            inst = {"hom": gen_hom(rng, injective=True)}
        try:
            phi = _lying_over_hom(inst)
        except ResourceLimitError:
            continue
        if phi.source.size <= cfg.max_size and phi.target.size <= cfg.max_size:
            return inst


def _lying_over_hom(inst):
    if "homs" in inst:
        return product_hom([build_hom(h) for h in inst["homs"]])
    return build_hom(inst["hom"])


def check_lying_over(inst, cfg):
    phi = _lying_over_hom(inst)
    expect(phi.is_injective, "generated map is not injective")
    for p in spec(phi.source).primes:
        q = lying_over_minimal(phi, p)
        expect(phi.preimage(q) == p, f"preimage of {q.describe()} is not {p.describe()}")


def gen_ast(rng, depth=0):
    roll = rng.random()
    if depth > 2 or roll < 0.4:
        return ZMod(rng.randint(0, 40)) if rng.random() < 0.85 else NamedFixture(rng.choice(SMALL_FIXTURES))
    if roll < 0.75:
        return Prod(tuple(gen_ast(rng, depth + 1) for _ in range(rng.randint(2, 3))))

    def lit(d):
        if d > 1 or rng.random() < 0.6:
            return rng.randint(0, 30)
        return tuple(lit(d + 1) for _ in range(rng.randint(1, 3)))

    return Quot(gen_ast(rng, depth + 1), tuple(lit(0) for _ in range(rng.randint(1, 3))))


def check_roundtrip(inst, cfg):
    e = dsl.ast_from_json(inst["ast"])
    text = to_text(e)
    expect(dsl.parse(text) == e, f"{text!r} parses to a different tree")


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class Property:
    id: str
    summary: str
    generate: object
    check: object
    trials: int
    max_size: int
    fixed: tuple = ()
    vacuous: str = None  # when set, a clean run is reported as vacuous with this note
    shrinkable: bool = True
    notes: tuple = ()


PROPERTIES = {}


def register(prop):
    PROPERTIES[prop.id] = prop
    return prop


register(Property(
    "spec-oracle", "spec(R) equals the prime ideals among all ideals",
    _ring_instance(gen_any), check_spec_oracle, trials=300, max_size=32,
    fixed=({"ring": "Z/12"}, {"ring": "Z/4 x Z/8"}, {"ring": "F2xy2"}, {"ring": "Z/1"}),
))
register(Property(
    "tame-structure", "every prime is tame, Spec is the disjoint union of the D(e_k)",
    _ring_instance(gen_product), check_tame_structure, trials=200, max_size=512,
))
register(Property(
    "wild-empty", "no wild primes over a finite index set",
    _ring_instance(gen_product), check_wild_empty, trials=100, max_size=512,
    vacuous="wild primes need an infinite index set; checked that none ever appears",
))
register(Property(
    "ultrafilter-embedding", "M -> M* embeds Spec of the power set ring",
    gen_ultra, check_ultra, trials=60, max_size=1024, shrinkable=False,
    notes=("non-principal ultrafilters do not exist on a finite index set",),
))
register(Property(
    "filter-quotient-iso", "R/I_F ~ T_F^-1 R for every proper principal filter",
    _ring_instance(gen_local_product), check_filter_iso, trials=100, max_size=4096,
    fixed=({"ring": "Z/4 x Z/9"}, {"ring": "Z/4 x Z/9 x Z/25"}),
))
register(Property(
    "domain-embedding", "R/I_F embeds in U_F^-1 R for products of fields",
    gen_domain_product, check_domain_embedding, trials=100, max_size=1024, shrinkable=False,
    fixed=({"ring": "Z/2 x Z/3", "subset": [2]},),
))
register(Property(
    "zero-dim", "nilradical and Jacobson radical of products, dimension 0",
    _ring_instance(gen_product), check_zero_dim, trials=100, max_size=512,
))
register(Property(
    "nilpotency-growth", "(2 mod 2^n)_n has index N in Z/2 x ... x Z/2^N, and b^2 = 0",
    lambda rng, cfg: None, check_tower, trials=7, max_size=0, shrinkable=False,
    fixed=tuple({"length": n} for n in range(2, 9)),
))
register(Property(
    "components", "components and max-regular ideals of products",
    _ring_instance(gen_product), check_components, trials=200, max_size=512,
))
register(Property(
    "avoidance-qb", "brute-force avoidance agrees with the local principal-ideal criterion",
    gen_avoidance, check_avoidance, trials=100, max_size=16, shrinkable=False,
    fixed=({"ring": "F2xy2", "mode": "compare", "expect": False},
           {"ring": "Z4x2", "mode": "compare", "expect": False},
           {"ring": "Z/12", "mode": "compare", "expect": True}),
))
register(Property(
    "induced-hom", "classification commutes with pulling back along prod phi_k",
    gen_induced, check_induced, trials=100, max_size=1024, shrinkable=False,
))
register(Property(
    "lying-over", "every prime of the source of an injective map has a prime over it",
    gen_lying_over, check_lying_over, trials=100, max_size=1024, shrinkable=False,
    fixed=({"hom": {"kind": "diagonal", "source": "Z/3"}},),
))
register(Property(
    "parser-roundtrip", "parse(print(e)) == e",
    lambda rng, cfg: {"ast": dsl.ast_to_json(gen_ast(rng))}, check_roundtrip,
    trials=300, max_size=0, shrinkable=False,
))


# ---------------------------------------------------------------------------
# running

def resolve_config(prop, config):
    return replace(
        config,
        trials=prop.trials if config.trials is None else config.trials,
        max_size=prop.max_size if config.max_size is None else config.max_size,
    )


def run_check(prop, inst, cfg):
    """``None`` on success, otherwise a failure message; resource aborts propagate."""
    try:
        prop.check(inst, cfg)
    except ResourceLimitError:
        raise
    except CheckFailed as exc:
        return str(exc)
    except (RingError, ValueError, TypeError, KeyError) as exc:
        return f"{type(exc).__name__}: {exc}"
    return None


def _shrink_expr(e):
    if isinstance(e, Prod):
        if len(e.factors) > 2:
            for i in range(len(e.factors)):
                yield Prod(e.factors[:i] + e.factors[i + 1:])
        for i, f in enumerate(e.factors):
            for g in _shrink_expr(f):
                yield Prod(e.factors[:i] + (g,) + e.factors[i + 1:])
    elif isinstance(e, ZMod):
        for d in _divisors(e.n)[:-1]:
            yield ZMod(d)
    elif isinstance(e, Quot) and len(e.gens) > 1:
        for i in range(len(e.gens)):
            yield Quot(e.base, e.gens[:i] + e.gens[i + 1:])


def minimize(prop, inst, cfg, budget=200):
    """Greedily shrink the ring of a failing instance while it keeps failing."""
    if not prop.shrinkable or set(inst) != {"ring"}:
        return inst, run_check(prop, inst, cfg)
    current, message = inst, run_check(prop, inst, cfg)
    progress = True
    while progress and budget > 0:
        progress = False
        for cand in _shrink_expr(dsl.parse(current["ring"])):
            budget -= 1
            trial = {"ring": to_text(cand)}
            try:
                msg = run_check(prop, trial, cfg)
            except ResourceLimitError:
                msg = None
            if msg is not None:
                current, message, progress = trial, msg, True
                break
            if budget <= 0:
                break
    return current, message


def instances(prop, cfg):
    rng = random.Random(f"{cfg.seed}:{prop.id}")
    for i in range(cfg.trials):
        if i < len(prop.fixed):
            yield dict(prop.fixed[i])
        else:
            yield prop.generate(rng, cfg)


def run_property(prop_id, config=None):
    """Check a registered property on ``trials`` seeded instances."""
    if prop_id not in PROPERTIES:
        raise KeyError(f"unknown property {prop_id!r}; known: {', '.join(PROPERTIES)}")
    prop = PROPERTIES[prop_id]
    cfg = resolve_config(prop, config or RunConfig())
    start = time.perf_counter()
    checked, aborted, counterexample = 0, [], None
    for i, inst in enumerate(instances(prop, cfg)):
        try:
            message = run_check(prop, inst, cfg)
        except ResourceLimitError as exc:
            aborted.append({"trial": i, "instance": inst, "reason": str(exc)})
            continue
        checked += 1
        if message is not None:
            small, small_message = minimize(prop, inst, cfg)
            counterexample = {"trial": i, "instance": small, "message": small_message}
            if small != inst:
                counterexample["original"] = inst
            break
    notes = list(prop.notes)
    if prop.id == "avoidance-qb":
        notes.append(f"covers searched up to {cfg.max_cover} ideals")
    if counterexample is not None:
        status = "fail"
    elif prop.vacuous:
        status = "vacuous"
        notes.append(prop.vacuous)
    else:
        status = "pass"
    return VerificationReport(
        property_id=prop.id,
        seed=cfg.seed,
        trials=cfg.trials,
        checked=checked,
        status=status,
        wall_time_ms=(time.perf_counter() - start) * 1000.0,
        aborted=aborted,
        counterexample=counterexample,
        notes=notes,
    )


def replay(prop_id, counterexample, config=None):
    """Re-run the check on a reported counterexample; returns the failure message or ``None``."""
    prop = PROPERTIES[prop_id]
    cfg = resolve_config(prop, config or RunConfig())
    inst = counterexample.get("instance", counterexample)
    return run_check(prop, inst, cfg)


def run_all(config=None):
    return [run_property(pid, config) for pid in PROPERTIES]


def aggregate(reports, seed):
    return {
        "schema": SCHEMA,
        "seed": seed,
        "status": "fail" if any(r.failed for r in reports) else "pass",
        "reports": [r.to_dict() for r in reports],
    }
