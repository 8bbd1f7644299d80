# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled majorization / conversion-probability kernels.

Mirrors ``_pykernels``; see that module for the contract of each
function.  The hot path is ``catalyst_scan``, which runs the whole
prune + tensor + sort + prefix-check loop in C.
"""

import numpy as np

from libc.math cimport fabs, INFINITY
from libc.stdlib cimport free, malloc, qsort


cdef int _cmp_desc(const void* pa, const void* pb) noexcept nogil:
    cdef double a = (<const double*> pa)[0]
    cdef double b = (<const double*> pb)[0]
    if a < b:
        return 1
    if a > b:
        return -1
    return 0


cdef void _tails_neumaier(const double* v, double* out, Py_ssize_t n) noexcept nogil:
    # Compensated suffix sums: out[l] = v[l] + ... + v[n-1].
    cdef double s = 0.0, comp = 0.0, x, t
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        x = v[i]
        t = s + x
        if fabs(s) >= fabs(x):
            comp += (s - t) + x
        else:
            comp += (x - t) + s
        s = t
        out[i] = s + comp


cdef double _pmax_from_tails(const double* ts, const double* tt,
                             Py_ssize_t n, double eps, Py_ssize_t* witness) noexcept nogil:
    cdef double best = INFINITY, r
    cdef Py_ssize_t l, wit = 0
    for l in range(n):
        if tt[l] > eps:
            r = ts[l] / tt[l]
            if r < best:
                best = r
                wit = l + 1
    witness[0] = wit
    return best


def tail_sums(const double[::1] v):
    cdef Py_ssize_t n = v.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    if n > 0:
        _tails_neumaier(&v[0], &o[0], n)
    return out


def prefix_first_violation(const double[::1] a, const double[::1] b, double eps):
    # Plain sequential prefixes, bit-identical to the fallback's cumsum.
    cdef Py_ssize_t n = a.shape[0], i
    cdef double pa = 0.0, pb = 0.0
    for i in range(n):
        pa += a[i]
        pb += b[i]
        if pb > pa + eps:
            return i + 1
    return 0


def pmax_witness(const double[::1] src, const double[::1] tgt, double eps):
    cdef Py_ssize_t n = src.shape[0]
    cdef double* buf = <double*> malloc(2 * n * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef double best
    cdef Py_ssize_t wit
    try:
        _tails_neumaier(&src[0], buf, n)
        _tails_neumaier(&tgt[0], buf + n, n)
        best = _pmax_from_tails(buf, buf + n, n, eps, &wit)
    finally:
        free(buf)
    return float(best), int(wit)


cdef void _outer_desc(const double* a, Py_ssize_t na,
                      const double* b, Py_ssize_t nb, double* out) noexcept nogil:
    cdef Py_ssize_t i, j
    for i in range(na):
        for j in range(nb):
            out[i * nb + j] = a[i] * b[j]
    qsort(out, na * nb, sizeof(double), _cmp_desc)


def outer_sorted(const double[::1] a, const double[::1] b):
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    out = np.empty(na * nb, dtype=np.float64)
    cdef double[::1] o = out
    _outer_desc(&a[0], na, &b[0], nb, &o[0])
    return out


def catalyst_scan(const double[::1] src, const double[::1] tgt, const double[:, ::1] cands,
                  double bound, double target_prob, double eps):
    cdef Py_ssize_t n = src.shape[0]
    cdef Py_ssize_t m = cands.shape[0]
    cdef Py_ssize_t p = cands.shape[1]
    cdef Py_ssize_t nc = n * p
    cdef double* buf = <double*> malloc(4 * nc * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef double* sc = buf
    cdef double* tc = buf + nc
    cdef double* ts = buf + 2 * nc
    cdef double* tt = buf + 3 * nc
    cdef Py_ssize_t i, k, wit
    cdef long tested = 0, pruned = 0, found = -1
    cdef double pa, pb, q
    cdef bint hit
    try:
        for i in range(m):
            if p * cands[i, p - 1] > bound + eps:
                pruned += 1
                continue
            tested += 1
            _outer_desc(&src[0], n, &cands[i, 0], p, sc)
            _outer_desc(&tgt[0], n, &cands[i, 0], p, tc)
            if target_prob >= 1.0:
                hit = True
                pa = 0.0
                pb = 0.0
                for k in range(nc):
                    pb = pb + tc[k]
                    pa = pa + sc[k]
                    if pa > pb + eps:
                        hit = False
                        break
            else:
                _tails_neumaier(sc, ts, nc)
                _tails_neumaier(tc, tt, nc)
                q = _pmax_from_tails(ts, tt, nc, eps, &wit)
                hit = q >= target_prob - eps
            if hit:
                found = i
                break
    finally:
        free(buf)
    return int(found), int(tested), int(pruned)
