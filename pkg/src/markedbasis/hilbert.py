"""Hilbert functions and (affine) Hilbert polynomials of quotients by
strongly stable monomial ideals, by direct staircase counting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .borel import StronglyStableIdeal


class InterpolationUnstable(RuntimeError):
    pass


@dataclass(frozen=True)
class NumericalPolynomial:
    """Polynomial in one variable t with rational coefficients, ascending."""

    coeffs: tuple

    def __call__(self, t: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                body = str(c)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if c == 1 else (f"-{tpow}" if c == -1 else f"{c}*{tpow}")
            parts.append(body)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def hilbert_function(ideal: StronglyStableIdeal, t: int, affine: bool | None = None) -> int:
    """Graded: count of degree-t monomials outside the ideal.  Affine:
    count of all monomials of degree <= t outside it.  Defaults to the
    natural variant for the ideal's ring."""
    if t < 0:
        raise ValueError("degree must be >= 0")
    if affine is None:
        affine = not ideal.ring.has_x0
    if affine:
        return len(ideal.sous_escalier(t))
    return len(ideal._nonmembers_of_degree(t))


def _interpolate(points: list[tuple[int, int]]) -> NumericalPolynomial:
    """Newton forward differences on consecutive integer nodes."""
    ts = [t for t, _ in points]
    vals = [Fraction(v) for _, v in points]
    n = len(points)
    # divided differences (nodes are consecutive, keep the general form)
    table = list(vals)
    coeffs = [table[0]]
    for k in range(1, n):
        for i in range(n - k):
            table[i] = (table[i + 1] - table[i]) / (ts[i + k] - ts[i])
        coeffs.append(table[0])
    # expand the Newton form into monomial coefficients
    poly = [Fraction(0)] * n
    acc = [Fraction(1)] + [Fraction(0)] * (n - 1)  # running product (t - t0)...(t - tk-1)
    for k, ck in enumerate(coeffs):
        for e in range(n):
            poly[e] += ck * acc[e]
        if k < n - 1:
            new = [Fraction(0)] * n
            for e in range(n - 1):
                new[e + 1] += acc[e]
                new[e] += -ts[k] * acc[e]
            acc = new
    while len(poly) > 1 and not poly[-1]:
        poly.pop()
    return NumericalPolynomial(tuple(poly))


def hilbert_polynomial(ideal: StronglyStableIdeal, affine: bool | None = None) -> NumericalPolynomial:
    """Interpolate the counting function past the regularity and verify the
    polynomial on two extra points."""
    if affine is None:
        affine = not ideal.ring.has_x0
    reg = ideal.regularity
    nv = ideal.ring.nvars
    start = reg
    pts = [(t, hilbert_function(ideal, t, affine=affine)) for t in range(start, start + nv + 1)]
    poly = _interpolate(pts)
    for t in (start + nv + 1, start + nv + 2):
        if poly(t) != hilbert_function(ideal, t, affine=affine):
            raise InterpolationUnstable(
                f"interpolant disagrees with the count at t={t}")
    return poly
