"""Numpy implementations of the table-scan kernels.

Every function takes operation tables as C-contiguous ``int32`` arrays of
shape ``(n, n)`` and element subsets as ``uint8`` masks of shape ``(n,)``.
The compiled module ``_ckernels`` exposes the same functions with the same
return conventions; ``prodspec.kernels`` picks one at import time.
"""
import numpy as np

BACKEND = "python"

# rows per block for the O(n^3) axiom scans
_BLOCK = 16


def sum_masks(add, a_mask, b_mask):
    """Return the mask of ``{a + b : a in A, b in B}``."""
    a_idx = np.flatnonzero(a_mask)
    b_idx = np.flatnonzero(b_mask)
    out = np.zeros(add.shape[0], dtype=np.uint8)
    out[add[np.ix_(a_idx, b_idx)].ravel()] = 1
    return out


def prime_witness(mul, mask):
    """First pair ``(a, b)`` outside the mask whose product lies inside it."""
    outside = np.flatnonzero(mask == 0)
    if outside.size == 0:
        return None
    hits = mask[mul[np.ix_(outside, outside)]]
    pos = np.argwhere(hits)
    if pos.size == 0:
        return None
    i, j = pos[0]
    return int(outside[i]), int(outside[j])


def nilpotency_index(mul, a, zero):
    """Least ``d`` with ``a**d == 0``, or 0 when ``a`` is not nilpotent."""
    n = mul.shape[0]
    power = a
    for d in range(1, n + 1):
        if power == zero:
            return d
        power = int(mul[power, a])
    return 0


def radical_mask(mul, mask):
    """Mask of ``{a : a**m in I for some m >= 1}``."""
    n = mul.shape[0]
    out = mask.copy()
    power = np.arange(n, dtype=np.int64)
    base = power.copy()
    for _ in range(n):
        power = mul[power, base]
        out |= mask[power]
    return out


def vn_regular_witness(mul):
    """An element ``a`` with no ``x`` such that ``a == a*a*x``, else -1."""
    diag = np.diagonal(mul)
    n = mul.shape[0]
    hit = mul[diag] == np.arange(n)[:, None]
    bad = np.flatnonzero(~hit.any(axis=1))
    return int(bad[0]) if bad.size else -1


def coset_reps(add, ideal_idx):
    """Least element index of each coset ``a + I``."""
    return add[:, ideal_idx].min(axis=1).astype(np.int32)


def hom_witness(sadd, smul, tadd, tmul, mapping):
    """First ``(op, a, b)`` where the mapping fails to commute with op.

    ``op`` is ``"add"`` or ``"mul"``; ``None`` means the mapping respects both.
    """
    m = mapping
    for op, st, tt in (("add", sadd, tadd), ("mul", smul, tmul)):
        bad = m[st] != tt[np.ix_(m, m)]
        if bad.any():
            a, b = np.argwhere(bad)[0]
            return op, int(a), int(b)
    return None


def associativity_witness(table):
    """First triple with ``(ab)c != a(bc)``."""
    n = table.shape[0]
    for start in range(0, n, _BLOCK):
        a = np.arange(start, min(n, start + _BLOCK))
        left = table[table[a][:, :, None], np.arange(n)[None, None, :]]
        right = table[a[:, None, None], table[None, :, :]]
        bad = left != right
        if bad.any():
            i, j, k = np.argwhere(bad)[0]
            return int(a[i]), int(j), int(k)
    return None


def distributivity_witness(add, mul):
    """First triple with ``a(b + c) != ab + ac``."""
    n = add.shape[0]
    for start in range(0, n, _BLOCK):
        a = np.arange(start, min(n, start + _BLOCK))
        left = mul[a[:, None, None], add[None, :, :]]
        ab = mul[a]
        right = add[ab[:, :, None], ab[:, None, :]]
        bad = left != right
        if bad.any():
            i, j, k = np.argwhere(bad)[0]
            return int(a[i]), int(j), int(k)
    return None


def annihilated_mask(mul, t_idx, zero):
    """Mask of ``{a : a*t == 0 for some t in T}``."""
    if len(t_idx) == 0:
        return np.zeros(mul.shape[0], dtype=np.uint8)
    return (mul[:, t_idx] == zero).any(axis=1).astype(np.uint8)


def unit_mask(mul, one):
    return (mul == one).any(axis=1).astype(np.uint8)
