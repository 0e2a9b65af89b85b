# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: sparse-monomial products, scaled dict merges and
the inner row operations of the exact integer elimination.

Values stay arbitrary-precision Python objects (ints / Fractions / PPoly);
the speedup comes from removing interpreter overhead in the tight loops.
"""

from math import gcd


def cm_mul(tuple a, tuple b):
    cdef Py_ssize_t i = 0, j = 0, la = len(a), lb = len(b)
    cdef list out
    if la == 0:
        return b
    if lb == 0:
        return a
    out = []
    while i < la and j < lb:
        ia, ea = <tuple>a[i]
        ib, eb = <tuple>b[j]
        if ia == ib:
            out.append((ia, ea + eb))
            i += 1
            j += 1
        elif ia < ib:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


def tup_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = a[i] + b[i]
    return tuple(out)


def merge_scaled(dict dst, dict src, c):
    cdef object k, v, nv, cur
    for k, v in src.items():
        cur = dst.get(k)
        if cur is None:
            nv = c * v
        else:
            nv = cur + c * v
        if nv:
            dst[k] = nv
        elif cur is not None:
            del dst[k]


def row_update(dict row, dict piv, rv, pv):
    cdef object k, v, nv
    for k in list(row):
        row[k] = row[k] * pv
    for k, v in piv.items():
        nv = row.get(k, 0) - rv * v
        if nv:
            row[k] = nv
        elif k in row:
            del row[k]


def row_normalize(dict row):
    cdef object g = 0, v, k
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for k in row:
            row[k] = row[k] // g
