"""Variable contexts, monomials as exponent tuples, and term orders.

Monomials are plain tuples of non-negative ints, index-aligned with the
ring's variables in *ascending* order: index 0 is the smallest variable.
In an affine ring R the variables are x_1 < x_2 < ... < x_n; in the
homogeneous ring S an extra smallest variable x_0 sits at index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement


@dataclass(frozen=True)
class Ring:
    """A polynomial-ring context: how many x-variables and their names.

    ``n`` is the number of top variables x_1..x_n; ``has_x0`` adds the
    extra smallest variable x_0 (the homogenization variable).
    """

    n: int
    has_x0: bool = False

    @property
    def nvars(self) -> int:
        return self.n + 1 if self.has_x0 else self.n

    @property
    def names(self) -> tuple[str, ...]:
        lo = 0 if self.has_x0 else 1
        return tuple(f"x{i}" for i in range(lo, self.n + 1))

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in {self}") from None

    def one(self) -> tuple[int, ...]:
        return (0,) * self.nvars

    def var(self, idx: int) -> tuple[int, ...]:
        e = [0] * self.nvars
        e[idx] = 1
        return tuple(e)

    def homogenized(self) -> "Ring":
        if self.has_x0:
            raise ValueError("ring already has x0")
        return Ring(self.n, has_x0=True)

    def dehomogenized(self) -> "Ring":
        if not self.has_x0:
            raise ValueError("ring has no x0")
        return Ring(self.n, has_x0=False)

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All monomials of total degree exactly d, in a fixed order."""
        out = []
        for combo in combinations_with_replacement(range(self.nvars), d):
            e = [0] * self.nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out


def mono_degree(m: tuple[int, ...]) -> int:
    return sum(m)


def mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True if a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    """num / den; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(num, den))


def mono_min_var(m: tuple[int, ...]) -> int:
    """Index of the smallest variable dividing m; None for 1."""
    for i, e in enumerate(m):
        if e:
            return i
    return None


def mono_max_var(m: tuple[int, ...]) -> int:
    """Index of the largest variable dividing m; None for 1."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i
    return None


def lex_key(m: tuple[int, ...]) -> tuple[int, ...]:
    """Sort key for Lex with the largest variable dominating."""
    return m[::-1]


def deglex_key(m: tuple[int, ...]):
    return (sum(m), m[::-1])


def degrevlex_key(m: tuple[int, ...]):
    # Larger in DegRevLex = higher degree, then *smaller* exponents on the
    # small variables read from the bottom up.
    return (sum(m), tuple(-e for e in m))


class TermOrder:
    """Total order on monomials: Lex, DegLex, DegRevLex or weighted.

    A weighted order compares weighted degree first and breaks ties with
    the given base order.  Public constructors take the weight vector
    listed for x_n down to x_1 (the convention used throughout the file
    formats and CLI); internally the weights are stored ascending.
    """

    LEX = "lex"
    DEGLEX = "deglex"
    DEGREVLEX = "degrevlex"

    def __init__(self, kind: str = DEGLEX, weights: tuple[int, ...] | None = None,
                 tie: str | None = None):
        if kind not in (self.LEX, self.DEGLEX, self.DEGREVLEX, "weighted"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.weights = weights  # ascending (index-aligned) when present
        self.tie = tie or self.DEGLEX
        if kind == "weighted" and not weights:
            raise ValueError("weighted order needs a weight vector")

    @classmethod
    def lex(cls) -> "TermOrder":
        return cls(cls.LEX)

    @classmethod
    def deglex(cls) -> "TermOrder":
        return cls(cls.DEGLEX)

    @classmethod
    def degrevlex(cls) -> "TermOrder":
        return cls(cls.DEGREVLEX)

    @classmethod
    def weighted(cls, weights_desc, tie: str | None = None) -> "TermOrder":
        """Weight vector given for x_n first, down to the smallest variable."""
        w = tuple(int(x) for x in weights_desc)
        if any(x <= 0 for x in w):
            raise ValueError("weights must be positive")
        return cls("weighted", weights=w[::-1], tie=tie)

    def key(self, m: tuple[int, ...]):
        if self.kind == self.LEX:
            return lex_key(m)
        if self.kind == self.DEGLEX:
            return deglex_key(m)
        if self.kind == self.DEGREVLEX:
            return degrevlex_key(m)
        wd = sum(w * e for w, e in zip(self.weights, m))
        base = TermOrder(self.tie)
        return (wd, base.key(m))

    def weighted_degree(self, m: tuple[int, ...]) -> int:
        if self.kind != "weighted":
            raise ValueError("not a weighted order")
        return sum(w * e for w, e in zip(self.weights, m))


def compare(a: tuple[int, ...], b: tuple[int, ...], order: TermOrder) -> int:
    """-1, 0 or +1.  Raises on mismatched variable counts."""
    if len(a) != len(b):
        raise ValueError(f"monomials live in different rings: {a} vs {b}")
    if order.kind == "weighted" and len(order.weights) != len(a):
        raise ValueError("weight vector length does not match ring")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# Canonical print order used everywhere text is emitted: DegLex descending.
def print_key(m: tuple[int, ...]):
    return deglex_key(m)


def sorted_for_print(monomials) -> list[tuple[int, ...]]:
    return sorted(monomials, key=print_key, reverse=True)


@lru_cache(maxsize=None)
def _ring_cached(n: int, has_x0: bool) -> Ring:
    return Ring(n, has_x0)


def R(n: int) -> Ring:
    """The affine ring K[x_1..x_n]."""
    return _ring_cached(n, False)


def S(n: int) -> Ring:
    """The graded ring K[x_0..x_n]."""
    return _ring_cached(n, True)
