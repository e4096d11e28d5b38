# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: antichain reduction and brute-force box scan.

Mirrors ``_kernels_py`` exactly.  Exponents fit in 32 bits by the core cap,
so all intermediate arithmetic is done in 64-bit integers.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset


def minimal_elements(vecs):
    cdef list cands = sorted(set(vecs), key=lambda v: (sum(v), v))
    cdef Py_ssize_t k = len(cands)
    if k == 0:
        return []
    cdef Py_ssize_t d = len(cands[0])
    cdef long long *flat = <long long *>malloc(k * d * sizeof(long long))
    cdef Py_ssize_t *kept = <Py_ssize_t *>malloc(k * sizeof(Py_ssize_t))
    if flat == NULL or kept == NULL:
        free(flat)
        free(kept)
        raise MemoryError()
    cdef Py_ssize_t i, j, t, nkept = 0
    cdef bint dominated, le
    cdef long long *u
    cdef long long *v
    try:
        for i in range(k):
            row = cands[i]
            for t in range(d):
                flat[i * d + t] = row[t]
        for i in range(k):
            v = flat + i * d
            dominated = False
            for j in range(nkept):
                u = flat + kept[j] * d
                le = True
                for t in range(d):
                    if u[t] > v[t]:
                        le = False
                        break
                if le:
                    dominated = True
                    break
            if not dominated:
                kept[nkept] = i
                nkept += 1
        return [cands[kept[j]] for j in range(nkept)]
    finally:
        free(flat)
        free(kept)


def scan_box(gens, box, long n):
    cdef Py_ssize_t d = len(box)
    cdef Py_ssize_t i, t, size = 1
    cdef long long *dims = <long long *>malloc(d * sizeof(long long))
    cdef long long *strides = <long long *>malloc(d * sizeof(long long))
    cdef long long *gamma = <long long *>malloc(d * sizeof(long long))
    cdef long long *beta = <long long *>malloc(d * sizeof(long long))
    cdef long long *lim = <long long *>malloc(d * sizeof(long long))
    if dims == NULL or strides == NULL or gamma == NULL or beta == NULL or lim == NULL:
        free(dims); free(strides); free(gamma); free(beta); free(lim)
        raise MemoryError()
    for i in range(d):
        dims[i] = box[i] + 1
    strides[d - 1] = 1
    for i in range(d - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    size = strides[0] * dims[0]

    table_obj = bytearray(size)
    out_obj = bytearray(size)
    cdef unsigned char[:] table = table_obj
    cdef unsigned char[:] out = out_obj
    cdef long long order = n - 1
    cdef long long off, s
    cdef Py_ssize_t idx
    cdef bint inside, ok

    try:
        for g in gens:
            inside = True
            off = 0
            for t in range(d):
                if g[t] > box[t]:
                    inside = False
                    break
                off += g[t] * strides[t]
            if inside:
                table[off] = 1

        # upward closure in row-major order
        memset(gamma, 0, d * sizeof(long long))
        for idx in range(size):
            if not table[idx]:
                for t in range(d):
                    if gamma[t] > 0 and table[idx - strides[t]]:
                        table[idx] = 1
                        break
            _advance(gamma, dims, d)

        memset(gamma, 0, d * sizeof(long long))
        for idx in range(size):
            if table[idx]:
                ok = True
                for t in range(d):
                    lim[t] = gamma[t] if gamma[t] < order else order
                    beta[t] = 0
                # odometer over beta <= lim with |beta| <= order
                while True:
                    s = 0
                    off = 0
                    for t in range(d):
                        s += beta[t]
                        off += beta[t] * strides[t]
                    if s <= order and not table[idx - off]:
                        ok = False
                        break
                    t = d - 1
                    while t >= 0:
                        if beta[t] < lim[t]:
                            beta[t] += 1
                            break
                        beta[t] = 0
                        t -= 1
                    if t < 0:
                        break
                if ok:
                    out[idx] = 1
            _advance(gamma, dims, d)
        return out_obj
    finally:
        free(dims); free(strides); free(gamma); free(beta); free(lim)


cdef inline void _advance(long long *gamma, long long *dims, Py_ssize_t d) noexcept:
    cdef Py_ssize_t t = d - 1
    while t >= 0:
        gamma[t] += 1
        if gamma[t] < dims[t]:
            return
        gamma[t] = 0
        t -= 1
