"""Exact rank of sparse rational matrices by integer fraction-free
elimination with sparsity-guided pivoting.

Rows are dicts mapping column index to a value.  Rank is invariant under
row scaling, so every row is cleared to integers and divided by its gcd
after each update, which keeps the entries small without ever rounding.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ._kernels import row_normalize, row_update


def _to_int_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    out = {}
    for k, v in row.items():
        iv = int(v * den) if isinstance(v, Fraction) else v * den
        if iv:
            out[k] = iv
    return out


def rank_rows(rows: list[dict]) -> int:
    """Rank of the sparse matrix given as a list of {col: value} rows."""
    work = [r for r in (_to_int_row(row) for row in rows) if r]
    for r in work:
        row_normalize(r)
    rank = 0
    while work:
        # pivot on the least-populated column, shortest row first
        col_count: dict[int, int] = {}
        for r in work:
            for c in r:
                col_count[c] = col_count.get(c, 0) + 1
        pc = min(col_count, key=lambda c: (col_count[c], c))
        cand = [r for r in work if pc in r]
        piv = min(cand, key=lambda r: (len(r), abs(r[pc])))
        work.remove(piv)
        pv = piv[pc]
        rest = []
        for r in work:
            rv = r.get(pc)
            if rv is not None:
                row_update(r, piv, rv, pv)
                row_normalize(r)
                if not r:
                    continue
            rest.append(r)
        work = rest
        rank += 1
    return rank


def rank_dense_oracle(rows: list[dict], ncols: int) -> int:
    """Plain Fraction Gaussian elimination; the independent cross-check."""
    mat = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col] / pv
            if f:
                for j in range(col, ncols):
                    mat[i][j] -= f * mat[rank][j]
        rank += 1
    return rank
