"""Command line entry point: ``prodspec <command> RING [options]``.

Exit codes: 0 on success, 1 when a property or consistency check fails,
2 on usage, parse or input errors.
"""
import argparse
import json
import re
import sys

from . import dsl
from .boolean import BooleanRingView, SetRing, atoms, setring_primes, stone_iso
from .errors import ConsistencyError, RingError
from .ideals import ideal_from_generators, is_prime, jacobson_radical, nilradical
from .localization import MultiplicativeSet, filter_quotient_iso, localize
from .products import classify_prime
from .properties import PROPERTIES, RunConfig, aggregate, run_all, run_property
from .rings import ProductRing, QuotientRing, is_von_neumann_regular, set_size_guard
from .spectrum import connected_components, krull_dim, spec
from .ultrafilters import BasePrimeChoice, embedding_checks, m_star, principal_filter

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ideal_json(ideal):
    return {"generators": [str(g) for g in ideal.generators], "size": ideal.size}


def _require_product(r):
    if not isinstance(r, ProductRing):
        raise UsageError(f"{r} is not a direct product (write it as A x B ...)")


def _elements(ring, text):
    try:
        lits = dsl.parse_elements(text)
    except dsl.ParseError as exc:
        raise UsageError(f"element list {text!r}: {exc}") from None
    return [dsl.element(ring, lit, f"elements[{i}]") for i, lit in enumerate(lits)]


# ---------------------------------------------------------------------------
# commands; each returns (exit code, json payload, text lines)

def cmd_spec(r, args):
    s = spec(r)
    payload = {"ring": str(r), "primes": [_ideal_json(p) for p in s.primes]}
    lines = [f"Spec({r}): {len(s)} prime(s)"] + [f"  {p.describe()}  [{p.size} elements]" for p in s.primes]
    return EXIT_OK, payload, lines


def cmd_components(r, args):
    comps = connected_components(r)
    payload = {"ring": str(r), "components": [
        {"maxRegular": _ideal_json(c.ideal), "primes": [p.prime.describe() for p in c.component]} for c in comps]}
    lines = [f"{len(comps)} connected component(s) of Spec({r})"]
    for c in comps:
        pts = ", ".join(p.prime.describe() for p in c.component)
        lines.append(f"  V{c.ideal.describe()} = {{{pts}}}")
    return EXIT_OK, payload, lines


def cmd_boolean(r, args):
    view = BooleanRingView(r)
    ats = atoms(view)
    iso = stone_iso(view)
    names = {a.value: str(a) for a in ats}
    images = {}
    for i, e in enumerate(view.elements()):
        below = iso.target.encode(iso.mapping[i])
        images[str(e)] = [names[v] for v in iso.target.index_set if v in below]
    payload = {
        "ring": str(r),
        "idempotents": [str(e) for e in view.elements()],
        "atoms": [str(a) for a in ats],
        "stone": images,
    }
    lines = [f"B({r}): {len(view.carrier)} idempotent(s), {len(ats)} atom(s)",
             "  atoms: " + ", ".join(str(a) for a in ats)]
    for k, v in images.items():
        lines.append(f"  {k} -> {{{', '.join(v)}}}")
    return EXIT_OK, payload, lines


def cmd_classify(r, args):
    _require_product(r)
    if not args.prime:
        raise UsageError("classify needs --prime <generators>")
    P = ideal_from_generators(r, _elements(r, args.prime))
    if not is_prime(P):
        raise UsageError(f"the ideal {P.describe()} is not prime")
    c = classify_prime(r, P)
    payload = {"ring": str(r), "prime": _ideal_json(P), "classification": c.kind}
    if c.is_tame:
        payload["index"] = c.witness.index
        payload["factorPrime"] = _ideal_json(c.witness.factor_prime)
    return EXIT_OK, payload, [repr(c)]


_MULT_SET = re.compile(r"^\s*(complement|filter)\s*\((.*)\)\s*$", re.S)


def cmd_localize(r, args):
    if not args.mult_set:
        raise UsageError("localize needs --mult-set complement(<gens>) | filter(<subset>) | <elements>")
    m = _MULT_SET.match(args.mult_set)
    extra = []
    if m and m.group(1) == "complement":
        P = ideal_from_generators(r, _elements(r, m.group(2)))
        if not is_prime(P):
            raise UsageError(f"the ideal {P.describe()} is not prime")
        T = MultiplicativeSet.complement_of_prime(P)
        L = localize(r, T)
        what = f"complement of {P.describe()}"
    elif m:
        _require_product(r)
        try:
            subset = [int(x) for x in m.group(2).split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"filter subset must be indices in S: {m.group(2)!r}") from None
        F = principal_filter(r.index_set, subset)
        iso = filter_quotient_iso(r, F)
        L, T = iso.localized, iso.mult_set
        what = f"T_F for F = {F!r}"
        extra = [f"  kernel I_F = {iso.ideal.describe()}; R/I_F -> T^-1 R verified bijective"]
    else:
        T = MultiplicativeSet.generated(r, _elements(r, args.mult_set))
        L = localize(r, T)
        what = f"multiplicative set generated by {args.mult_set.strip()}"
    payload = {
        "ring": str(r),
        "multiplicativeSet": what,
        "size": L.size,
        "kernel": _ideal_json(L.kernel),
        "elements": [L.label(i) for i in range(L.size)],
    }
    lines = [f"localization of {r} at {what}: {L.size} element(s)",
             f"  kernel of R -> T^-1 R: {L.kernel.describe()}",
             "  elements: " + ", ".join(L.label(i) for i in range(L.size))] + extra
    return EXIT_OK, payload, lines


def cmd_ultra(r, args):
    _require_product(r)
    if args.base_primes:
        try:
            lits = dsl.parse_elements(args.base_primes)
        except dsl.ParseError as exc:
            raise UsageError(f"--base-primes: {exc}") from None
        if len(lits) != r.arity:
            raise UsageError(f"--base-primes needs one generator per factor ({r.arity})")
        primes = []
        for k, (f, lit) in enumerate(zip(r.factors, lits), start=1):
            p = ideal_from_generators(f, [dsl.element(f, lit, f"base[{k}]")])
            if not is_prime(p):
                raise UsageError(f"base prime for factor {k} ({p.describe()}) is not prime")
            primes.append(p)
        base = BasePrimeChoice(r, tuple(primes))
        source = "given"
    else:
        base = BasePrimeChoice.first(r)
        source = "default: first prime of each factor"
    report = embedding_checks(base)
    ps = SetRing(r.index_set)
    rows = [(M, m_star(M, base)) for M in setring_primes(ps)]
    payload = {
        "ring": str(r),
        "basePrimes": [p.describe() for p in base.primes],
        "basePrimesSource": source,
        "images": [{"powersetPrime": M.describe(), "mStar": _ideal_json(img)} for M, img in rows],
        "checks": {
            "injective": report.injective,
            "allPrime": report.all_prime,
            "continuity": report.continuity,
            "tameCorrespondence": report.tame_correspondence,
            "leftInverse": report.left_inverse,
        },
        "note": report.wild_direction,
    }
    lines = [f"base primes ({source}): " + ", ".join(p.describe() for p in base.primes)]
    lines += [f"  {M.describe()} -> {img.describe()}" for M, img in rows]
    lines.append("  checks: " + ", ".join(f"{k}={v}" for k, v in payload["checks"].items()))
    return (EXIT_OK if report.ok else EXIT_FAIL), payload, lines


def cmd_dim(r, args):
    d = krull_dim(r)
    N = nilradical(r)
    J = jacobson_radical(r)
    vnr = is_von_neumann_regular(QuotientRing(r, N))
    payload = {"ring": str(r), "krullDim": d, "nilradical": _ideal_json(N),
               "jacobsonRadical": _ideal_json(J), "reducedIsVonNeumannRegular": vnr}
    lines = [f"dim {r} = {d}", f"  nilradical {N.describe()}, Jacobson radical {J.describe()}",
             f"  R/N(R) von Neumann regular: {vnr}"]
    return EXIT_OK, payload, lines


RING_COMMANDS = {
    "spec": (cmd_spec, "list the prime ideals"),
    "components": (cmd_components, "connected components and their max-regular ideals"),
    "boolean": (cmd_boolean, "Boolean ring of idempotents and its Stone isomorphism"),
    "classify": (cmd_classify, "classify a prime of a product as tame or wild"),
    "localize": (cmd_localize, "localize at a multiplicative set"),
    "ultra": (cmd_ultra, "the embedding of Spec of the power set ring"),
    "dim": (cmd_dim, "Krull dimension and radicals"),
}


def cmd_verify(args):
    cfg = RunConfig(seed=args.seed, trials=args.trials, max_size=args.max_size, max_cover=args.max_cover)
    if args.property == "all":
        reports = run_all(cfg)
    elif args.property in PROPERTIES:
        reports = [run_property(args.property, cfg)]
    else:
        raise UsageError(f"unknown property {args.property!r}; known: all, {', '.join(PROPERTIES)}")
    failed = any(r.failed for r in reports)
    payload = aggregate(reports, args.seed) if args.property == "all" else reports[0].to_dict()
    lines = []
    for rep in reports:
        line = f"{rep.status.upper():8} {rep.property_id}: {rep.checked}/{rep.trials} checked in {rep.wall_time_ms:.0f} ms"
        lines.append(line)
        if rep.aborted:
            lines.append(f"         {len(rep.aborted)} instance(s) aborted by the size guard")
        if rep.counterexample:
            lines.append(f"         counterexample: {json.dumps(rep.counterexample['instance'])}")
            lines.append(f"         {rep.counterexample['message']}")
    return (EXIT_FAIL if failed else EXIT_OK), payload, lines


def build_parser():
    parser = argparse.ArgumentParser(prog="prodspec", description="Spectra and idempotents of finite commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--max-size", type=int, default=None, help="largest ring order")

    for name, (_, help_text) in RING_COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ring", help='ring expression, e.g. "Z/4 x Z/9"')
        common(p)
        if name == "classify":
            p.add_argument("--prime", help="generators of the prime, e.g. \"(2,1)\"")
        if name == "localize":
            p.add_argument("--mult-set", help="complement(<gens>) | filter(<subset>) | <elements>")
        if name == "ultra":
            p.add_argument("--base-primes", help="one generator per factor, e.g. \"2,5\"")
    p = sub.add_parser("verify", help="run property checks")
    p.add_argument("property", help="property id or 'all'")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--max-cover", type=int, default=4)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.seed < 0 or args.seed >= 2 ** 64:
                raise UsageError("--seed must fit in an unsigned 64-bit integer")
            code, payload, lines = cmd_verify(args)
        else:
            if args.max_size is not None:
                set_size_guard(args.max_size)
            try:
                r = dsl.ring_from_text(args.ring)
            except dsl.DSLError as exc:
                raise UsageError(str(exc)) from None
            code, payload, lines = RING_COMMANDS[args.command][0](r, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
