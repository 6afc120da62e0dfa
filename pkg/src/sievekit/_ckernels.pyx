# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_kernels_py``.

Polynomial kernels keep Python ints (coefficients outgrow 64 bits) and only
type the loop machinery; the matching counter runs on C arrays.
"""

from libc.stdlib cimport malloc, free


def poly_mul(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef object x
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + x * b[j]
    return out


def poly_div_qint(list p, Py_ssize_t j):
    cdef Py_ssize_t n = len(p), i, k, deg
    cdef object c
    if j == 1:
        return list(p), True
    if n == 0:
        return [], True
    cdef list r = [0] * (n + 1)
    for i in range(n):
        c = p[i]
        r[i + 1] = r[i + 1] + c
        r[i] = r[i] - c
    deg = n
    if deg < j:
        return [], all(c == 0 for c in r)
    cdef list quot = [0] * (deg - j + 1)
    for k in range(deg, j - 1, -1):
        c = r[k]
        if c != 0:
            quot[k - j] = c
            r[k] = 0
            r[k - j] = r[k - j] + c
    for i in range(j):
        if r[i] != 0:
            return quot, False
    return quot, True


def poly_rem_monic(list p, list m):
    cdef Py_ssize_t dm = len(m) - 1, k, t, off
    cdef object c
    if dm == 0:
        return []
    cdef list rem = list(p)
    for k in range(len(rem) - 1, dm - 1, -1):
        c = rem[k]
        if c != 0:
            off = k - dm
            for t in range(dm):
                rem[off + t] = rem[off + t] - c * m[t]
            rem[k] = 0
    rem = rem[:dm]
    if len(rem) < dm:
        rem.extend([0] * (dm - len(rem)))
    return rem


def continuant(list xs, long sign):
    cdef object prev = 0, cur = 1, x
    for x in xs:
        prev, cur = cur, x * cur + sign * prev
    return cur


cdef long long _rec(int t, int npos, int* starts, int* flat, int* used,
                    int* cap):
    cdef long long total = 0
    cdef int q, f
    if t == npos:
        return 1
    for q in range(starts[t], starts[t + 1]):
        f = flat[q]
        if used[f] < cap[f]:
            used[f] += 1
            total += _rec(t + 1, npos, starts, flat, used, cap)
            used[f] -= 1
    return total


def count_matchings(list choices, list capacity):
    cdef int npos = len(choices), nf = len(capacity), total_len = 0
    cdef int i, q
    for row in choices:
        total_len += len(row)
    cdef int* starts = <int*>malloc((npos + 1) * sizeof(int))
    cdef int* flat = <int*>malloc((total_len + 1) * sizeof(int))
    cdef int* used = <int*>malloc((nf + 1) * sizeof(int))
    cdef int* cap = <int*>malloc((nf + 1) * sizeof(int))
    if not starts or not flat or not used or not cap:
        free(starts); free(flat); free(used); free(cap)
        raise MemoryError()
    try:
        q = 0
        for i in range(npos):
            starts[i] = q
            for f in choices[i]:
                flat[q] = f
                q += 1
        starts[npos] = q
        for i in range(nf):
            used[i] = 0
            cap[i] = capacity[i]
        return _rec(0, npos, starts, flat, used, cap)
    finally:
        free(starts); free(flat); free(used); free(cap)
