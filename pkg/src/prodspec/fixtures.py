"""Named table rings that the modular/product/quotient constructions cannot reach.

Each is a finite algebra given by coefficient moduli and basis products; the
resulting tables go through ``TableRing`` validation like any user table.
"""
from functools import lru_cache
from itertools import product

import numpy as np

from .rings import TableRing


def algebra_table_ring(name, moduli, basis, products):
    """Table ring of ``sum c_i b_i`` with ``c_i mod moduli[i]`` and ``b_i b_j = products[i][j]``.

    ``basis[0]`` must be the unit.  Element index is mixed-radix with the
    first coefficient least significant, so 0 and 1 get indices 0 and 1.
    """
    dims = len(moduli)
    vectors = [tuple(reversed(v)) for v in product(*[range(m) for m in reversed(moduli)])]
    index = {v: i for i, v in enumerate(vectors)}
    n = len(vectors)

    def reduce(w):
        return tuple(c % m for c, m in zip(w, moduli))

    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, u in enumerate(vectors):
        for j, v in enumerate(vectors):
            add[i, j] = index[reduce([a + b for a, b in zip(u, v)])]
            w = [0] * dims
            for p, up in enumerate(u):
                if not up:
                    continue
                for q, vq in enumerate(v):
                    if vq:
                        for t, c in enumerate(products[p][q]):
                            w[t] += up * vq * c
            mul[i, j] = index[reduce(w)]
    return TableRing(add, mul, labels=[_label(v, basis) for v in vectors], name=name)


def _label(vector, basis):
    terms = []
    for c, b in zip(vector, basis):
        if c == 0:
            continue
        if b == "1":
            terms.append(str(c))
        else:
            terms.append(b if c == 1 else f"{c}{b}")
    return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def f2xy2():
    """``F_2[x, y]/(x, y)^2``: local, maximal ideal needs two generators."""
    z = (0, 0, 0)
    return algebra_table_ring(
        "F2xy2", (2, 2, 2), ("1", "x", "y"),
        [[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
         [(0, 1, 0), z, z],
         [(0, 0, 1), z, z]],
    )


@lru_cache(maxsize=None)
def z4x2():
    """``Z/4[x]/(2x, x^2)``: local of order 8 with non-principal maximal ideal ``(2, x)``."""
    return algebra_table_ring(
        "Z4x2", (4, 2), ("1", "x"),
        [[(1, 0), (0, 1)],
         [(0, 1), (0, 0)]],
    )


@lru_cache(maxsize=None)
def f2x2():
    """``F_2[x]/(x^2)``."""
    return algebra_table_ring("F2x2", (2, 2), ("1", "x"), [[(1, 0), (0, 1)], [(0, 1), (0, 0)]])


@lru_cache(maxsize=None)
def gf4():
    """``F_2[t]/(t^2 + t + 1)``."""
    return algebra_table_ring("GF4", (2, 2), ("1", "t"), [[(1, 0), (0, 1)], [(0, 1), (1, 1)]])


@lru_cache(maxsize=None)
def gf8():
    """``F_2[t]/(t^3 + t + 1)``."""
    return algebra_table_ring(
        "GF8", (2, 2, 2), ("1", "t", "t^2"),
        [[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
         [(0, 1, 0), (0, 0, 1), (1, 1, 0)],
         [(0, 0, 1), (1, 1, 0), (0, 1, 1)]],
    )


@lru_cache(maxsize=None)
def gf9():
    """``F_3[t]/(t^2 + 1)``."""
    return algebra_table_ring("GF9", (3, 3), ("1", "t"), [[(1, 0), (0, 1)], [(0, 1), (2, 0)]])


FIXTURES = {
    "F2xy2": f2xy2,
    "Z4x2": z4x2,
    "F2x2": f2x2,
    "GF4": gf4,
    "GF8": gf8,
    "GF9": gf9,
}


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
