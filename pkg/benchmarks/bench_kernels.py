"""Compare the compiled and numpy kernel backends on ring tables.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--ring EXPR ...]

Every kernel is run on both backends with identical inputs; results are
checked equal before timings are reported.
"""
import argparse
import sys
import timeit

import numpy as np

from prodspec import kernels, ring_from_text
from prodspec.ideals import ideal_from_generators

DEFAULT_RINGS = ["Z/4 x Z/9 x Z/5", "Z/8 x Z/27", "(Z/32 x Z/16)/((8,0))", "Z/2 x Z/4 x Z/8 x Z/4"]


def cases(r):
    """(kernel name, argument tuple) pairs for ring ``r``."""
    add, mul = r.add_table, r.mul_table
    gens = [r.at(x) for x in _some_elements(r)]
    ideal = ideal_from_generators(r, gens)
    idx = np.asarray(ideal.indices, dtype=np.int32)
    units = np.flatnonzero(r.unit_mask).astype(np.int32)
    return [
        ("sum_masks", (add, ideal.mask, ideal.mask)),
        ("prime_witness", (mul, ideal.mask)),
        ("radical_mask", (mul, ideal.mask)),
        ("vn_regular_witness", (mul,)),
        ("coset_reps", (add, idx)),
        ("annihilated_mask", (mul, units[: max(1, len(units) // 4)], r.zero_index)),
        ("unit_mask", (mul, r.one_index)),
        ("associativity_witness", (mul,)),
        ("distributivity_witness", (add, mul)),
    ]


def _some_elements(r):
    rng = np.random.default_rng(0)
    return [int(i) for i in rng.choice(r.size, size=2, replace=False)]


def _same(a, b):
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--ring", action="append")
    args = parser.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; only the numpy backend is available", file=sys.stderr)
    names = sorted(backends)
    print(f"{'ring':28} {'kernel':24} " + " ".join(f"{n + ' ms':>12}" for n in names) + f" {'speedup':>8}")
    for text in args.ring or DEFAULT_RINGS:
        r = ring_from_text(text)
        for name, call_args in cases(r):
            results = {b: getattr(backends[b], name)(*call_args) for b in names}
            first = results[names[0]]
            if not all(_same(first, res) for res in results.values()):
                raise SystemExit(f"backends disagree on {name} for {text}")
            times = {}
            for b in names:
                fn = getattr(backends[b], name)
                times[b] = min(timeit.repeat(lambda: fn(*call_args), number=1, repeat=args.repeat)) * 1000
            speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
            print(f"{text[:28]:28} {name:24} " + " ".join(f"{times[b]:12.3f}" for b in names) + f" {speed:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
