"""Pure-Python reference implementations of the hot kernels.

Semantics must match _speedups.pyx exactly; the test suite checks both
sides against each other.
"""

from math import gcd


def cm_mul(a: tuple, b: tuple) -> tuple:
    """Multiply two sparse parameter-monomials (sorted (idx, exp) tuples)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ia, ea = a[i]
        ib, eb = b[j]
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
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def tup_add(a: tuple, b: tuple) -> tuple:
    """Componentwise sum of two equal-length exponent tuples."""
    return tuple(x + y for x, y in zip(a, b))


def merge_scaled(dst: dict, src: dict, c) -> None:
    """dst += c * src for dicts with additive values; zero entries dropped."""
    for k, v in src.items():
        nv = dst.get(k)
        nv = c * v if nv is None else nv + c * v
        if nv:
            dst[k] = nv
        elif k in dst:
            del dst[k]


def row_update(row: dict, piv: dict, rv, pv) -> None:
    """row := pv*row - rv*piv over integer-valued sparse rows."""
    for k in list(row):
        row[k] *= pv
    for k, v in piv.items():
        nv = row.get(k, 0) - rv * v
        if nv:
            row[k] = nv
        elif k in row:
            del row[k]


def row_normalize(row: dict) -> None:
    """Divide an integer row by the gcd of its entries (sign-normalized)."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for k in row:
            row[k] //= g
