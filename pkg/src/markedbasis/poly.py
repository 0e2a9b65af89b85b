"""Sparse polynomials in the x-variables with exact coefficients.

Coefficients are either Fractions (the scalar case) or PPoly values in
parameter variables; both satisfy the same arithmetic protocol, so one
polynomial type serves the concrete fixtures and the generic family runs.
"""

from __future__ import annotations

from fractions import Fraction

from ._kernels import merge_scaled, tup_add
from .coeffs import PPoly, coeff_degree
from .rings import Ring, mono_degree, sorted_for_print

Mono = tuple


class Poly:
    """Immutable-by-convention sparse polynomial: dict monomial -> coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict | None = None):
        self.ring = ring
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if len(m) != ring.nvars:
                    raise ValueError(f"monomial {m} does not fit ring with {ring.nvars} variables")
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: Ring, c) -> "Poly":
        if isinstance(c, int):
            c = Fraction(c)
        return cls(ring, {ring.one(): c})

    @classmethod
    def monomial(cls, ring: Ring, m: Mono, c=Fraction(1)) -> "Poly":
        return cls(ring, {m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[Mono]:
        return set(self.terms)

    def degree(self) -> int:
        """Total x-degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def coeff(self, m: Mono):
        return self.terms.get(m, Fraction(0))

    def _check_same_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        out = dict(self.terms)
        merge_scaled(out, other.terms, Fraction(1))
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        out = dict(self.terms)
        merge_scaled(out, other.terms, Fraction(-1))
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.ring)
        return Poly(self.ring, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, m: Mono, c=Fraction(1)) -> "Poly":
        if not c:
            return Poly(self.ring)
        return Poly(self.ring, {tup_add(m, mm): c * v for mm, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_same_ring(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tup_add(m1, m2)
                nv = out.get(m)
                nv = c1 * c2 if nv is None else nv + c1 * c2
                if nv:
                    out[m] = nv
                elif m in out:
                    del out[m]
        return Poly(self.ring, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        from .textio import format_poly

        return f"Poly({format_poly(self)})"

    def iter_sorted(self):
        """(monomial, coeff) pairs in canonical print order."""
        for m in sorted_for_print(self.terms):
            yield m, self.terms[m]

    def max_coeff_degree(self) -> int:
        return max((coeff_degree(c) for c in self.terms.values()), default=0)

    def substitute_point(self, values: dict[int, Fraction]) -> "Poly":
        """Evaluate every parametric coefficient at a parameter point."""
        out: dict = {}
        for m, c in self.terms.items():
            v = c.evaluate(values) if isinstance(c, PPoly) else c
            if v:
                out[m] = v
        return Poly(self.ring, out)

    def homogenize(self) -> "Poly":
        """x_0^(deg f) * f(x/x_0): a homogeneous polynomial in S of the same degree."""
        sring = self.ring.homogenized()
        d = self.degree()
        if d < 0:
            return Poly(sring)
        out = {}
        for m, c in self.terms.items():
            out[(d - mono_degree(m),) + m] = c
        return Poly(sring, out)

    def dehomogenize(self) -> "Poly":
        """Set x_0 := 1."""
        rring = self.ring.dehomogenized()
        out: dict = {}
        for m, c in self.terms.items():
            mm = m[1:]
            nv = out.get(mm)
            nv = c if nv is None else nv + c
            if nv:
                out[mm] = nv
            elif mm in out:
                del out[mm]
        return Poly(rring, out)

    def lower_part(self, t: int) -> tuple["Poly", "Poly"]:
        """Split into (degree <= t part, degree > t part)."""
        lo, hi = {}, {}
        for m, c in self.terms.items():
            (lo if mono_degree(m) <= t else hi)[m] = c
        return Poly(self.ring, lo), Poly(self.ring, hi)
