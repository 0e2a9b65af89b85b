"""Sparse polynomials in parameter variables, used as coefficients.

A scalar coefficient is a plain ``fractions.Fraction``.  A parametric
coefficient is a ``PPoly``: a dict mapping sparse parameter-monomials to
Fractions.  Parameter-monomials are sorted tuples of (var_index, exponent)
pairs, so the constant monomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction

from ._kernels import cm_mul

ZERO = Fraction(0)
ONE = Fraction(1)

CMono = tuple  # tuple[(int, int), ...] sorted by index


def cm_degree(cm: CMono) -> int:
    return sum(e for _, e in cm)


class PPoly(dict):
    """dict[CMono, Fraction] with exact ring arithmetic; no zero values stored."""

    __slots__ = ()

    @classmethod
    def const(cls, c) -> "PPoly":
        c = Fraction(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def var(cls, idx: int) -> "PPoly":
        return cls({((idx, 1),): ONE})

    def degree(self) -> int:
        return max((cm_degree(cm) for cm in self), default=0)

    def is_constant(self) -> bool:
        return not self or (len(self) == 1 and () in self)

    def constant_value(self) -> Fraction:
        return self.get((), ZERO)

    def _iadd_scaled(self, other: "PPoly", c: Fraction) -> None:
        for cm, v in other.items():
            nv = self.get(cm, ZERO) + c * v
            if nv:
                self[cm] = nv
            elif cm in self:
                del self[cm]

    def __add__(self, other):
        out = PPoly(self)
        out._iadd_scaled(_as_ppoly(other), ONE)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        out = PPoly(self)
        out._iadd_scaled(_as_ppoly(other), -ONE)
        return out

    def __rsub__(self, other):
        return _as_ppoly(other) - self

    def __neg__(self):
        return PPoly({cm: -v for cm, v in self.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return PPoly()
            return PPoly({cm: c * v for cm, v in self.items()})
        other = _as_ppoly(other)
        out = PPoly()
        for cm1, v1 in self.items():
            for cm2, v2 in other.items():
                cm = cm_mul(cm1, cm2)
                nv = out.get(cm, ZERO) + v1 * v2
                if nv:
                    out[cm] = nv
                elif cm in out:
                    del out[cm]
        return out

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PPoly.const(other)
        return dict.__eq__(self, other)

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def evaluate(self, values: dict[int, Fraction]) -> Fraction:
        """Substitute every parameter; missing indices default to 0."""
        total = ZERO
        for cm, v in self.items():
            term = v
            for idx, e in cm:
                x = values.get(idx, ZERO)
                if not x:
                    term = ZERO
                    break
                term *= x ** e
            total += term
        return total

    def partial(self, idx: int) -> "PPoly":
        """d/dC_idx."""
        out = PPoly()
        for cm, v in self.items():
            for k, (i, e) in enumerate(cm):
                if i == idx:
                    rest = cm[:k] + ((i, e - 1),) + cm[k + 1:] if e > 1 else cm[:k] + cm[k + 1:]
                    nv = out.get(rest, ZERO) + v * e
                    if nv:
                        out[rest] = nv
                    elif rest in out:
                        del out[rest]
                    break
        return out

    def substitute(self, idx: int, value: "PPoly | Fraction") -> "PPoly":
        """Replace one parameter variable by a constant or another PPoly."""
        out = PPoly()
        for cm, v in self.items():
            e_idx = 0
            rest = []
            for i, e in cm:
                if i == idx:
                    e_idx = e
                else:
                    rest.append((i, e))
            term = PPoly({tuple(rest): v})
            if e_idx:
                if isinstance(value, (int, Fraction)):
                    term = term * (Fraction(value) ** e_idx)
                else:
                    for _ in range(e_idx):
                        term = term * value
            out._iadd_scaled(term, ONE)
        return out


def _as_ppoly(x) -> PPoly:
    if isinstance(x, PPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return PPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to PPoly")


def coeff_is_zero(c) -> bool:
    return not c


def coeff_degree(c) -> int:
    return c.degree() if isinstance(c, PPoly) else 0
