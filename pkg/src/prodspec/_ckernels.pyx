# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table-scan kernels. Same contract as ``_pykernels``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int32_t idx_t
ctypedef cnp.uint8_t flag_t


def sum_masks(const idx_t[:, ::1] add, const flag_t[::1] a_mask, const flag_t[::1] b_mask):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t i, j, na = 0, nb = 0
    cdef cnp.ndarray[idx_t, ndim=1] a_idx = np.empty(n, dtype=np.int32)
    cdef cnp.ndarray[idx_t, ndim=1] b_idx = np.empty(n, dtype=np.int32)
    out = np.zeros(n, dtype=np.uint8)
    cdef flag_t[::1] o = out
    for i in range(n):
        if a_mask[i]:
            a_idx[na] = i
            na += 1
        if b_mask[i]:
            b_idx[nb] = i
            nb += 1
    for i in range(na):
        for j in range(nb):
            o[add[a_idx[i], b_idx[j]]] = 1
    return out


def prime_witness(const idx_t[:, ::1] mul, const flag_t[::1] mask):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b
    for a in range(n):
        if mask[a]:
            continue
        for b in range(a, n):
            if not mask[b] and mask[mul[a, b]]:
                return a, b
    return None


def nilpotency_index(const idx_t[:, ::1] mul, Py_ssize_t a, Py_ssize_t zero):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t d, power = a
    for d in range(1, n + 1):
        if power == zero:
            return d
        power = mul[power, a]
    return 0


def radical_mask(const idx_t[:, ::1] mul, const flag_t[::1] mask):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, step, power
    out = np.zeros(n, dtype=np.uint8)
    cdef flag_t[::1] o = out
    for a in range(n):
        power = a
        for step in range(n):
            if mask[power]:
                o[a] = 1
                break
            power = mul[power, a]
    return out


def vn_regular_witness(const idx_t[:, ::1] mul):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, x, sq
    cdef bint found
    for a in range(n):
        sq = mul[a, a]
        found = False
        for x in range(n):
            if mul[sq, x] == a:
                found = True
                break
        if not found:
            return a
    return -1


def coset_reps(const idx_t[:, ::1] add, ideal_idx):
    cdef Py_ssize_t n = add.shape[0]
    cdef const idx_t[::1] ideal = np.ascontiguousarray(ideal_idx, dtype=np.int32)
    cdef Py_ssize_t m = ideal.shape[0]
    cdef Py_ssize_t a, j
    cdef idx_t best, v
    out = np.empty(n, dtype=np.int32)
    cdef idx_t[::1] o = out
    for a in range(n):
        best = add[a, ideal[0]]
        for j in range(1, m):
            v = add[a, ideal[j]]
            if v < best:
                best = v
        o[a] = best
    return out


def hom_witness(const idx_t[:, ::1] sadd, const idx_t[:, ::1] smul,
                const idx_t[:, ::1] tadd, const idx_t[:, ::1] tmul,
                const idx_t[::1] mapping):
    cdef Py_ssize_t n = sadd.shape[0]
    cdef Py_ssize_t a, b
    for a in range(n):
        for b in range(n):
            if mapping[sadd[a, b]] != tadd[mapping[a], mapping[b]]:
                return "add", a, b
    for a in range(n):
        for b in range(n):
            if mapping[smul[a, b]] != tmul[mapping[a], mapping[b]]:
                return "mul", a, b
    return None


def associativity_witness(const idx_t[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a, b], c] != table[a, table[b, c]]:
                    return a, b, c
    return None


def distributivity_witness(const idx_t[:, ::1] add, const idx_t[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return a, b, c
    return None


def annihilated_mask(const idx_t[:, ::1] mul, t_idx, Py_ssize_t zero):
    cdef Py_ssize_t n = mul.shape[0]
    cdef const idx_t[::1] ts = np.ascontiguousarray(t_idx, dtype=np.int32)
    cdef Py_ssize_t m = ts.shape[0]
    cdef Py_ssize_t a, j
    out = np.zeros(n, dtype=np.uint8)
    cdef flag_t[::1] o = out
    for a in range(n):
        for j in range(m):
            if mul[a, ts[j]] == zero:
                o[a] = 1
                break
    return out


def unit_mask(const idx_t[:, ::1] mul, Py_ssize_t one):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, b
    out = np.zeros(n, dtype=np.uint8)
    cdef flag_t[::1] o = out
    for a in range(n):
        for b in range(n):
            if mul[a, b] == one:
                o[a] = 1
                break
    return out
