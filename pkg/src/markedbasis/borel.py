"""Strongly stable ideals: validation, star decomposition, sous-escalier,
regularity/satiety, the well-order driving the division algorithm, and
segment tests.
"""

from __future__ import annotations

from .rings import (
    Ring,
    TermOrder,
    lex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_max_var,
    mono_min_var,
    print_key,
    sorted_for_print,
)


class EmptyBasis(ValueError):
    pass


class NotStronglyStable(ValueError):
    def __init__(self, witness, i, j, moved):
        self.witness = witness
        self.i = i
        self.j = j
        self.moved = moved
        super().__init__(
            f"not strongly stable: moving x{i}->x{j} in {witness} gives {moved}, not in the ideal"
        )


class DegreeMismatch(ValueError):
    pass


class NotInIdeal(ValueError):
    pass


class NotSaturated(ValueError):
    pass


def minimalize(monomials) -> list[tuple]:
    """Drop monomials divisible by another one (the Basis routine)."""
    ms = sorted(set(monomials), key=mono_degree)
    out = []
    for m in ms:
        if not any(mono_divides(b, m) for b in out):
            out.append(m)
    return out


def borel_compare(a: tuple, b: tuple) -> str:
    """Compare same-degree monomials in the Borel partial order.

    Returns 'equal', 'greater_B', 'less_B' or 'incomparable'.  Uses the
    partial-sum characterization: a >=_B b iff for every k the exponent
    mass of a on variables >= k dominates b's.
    """
    if len(a) != len(b):
        raise ValueError("monomials live in different rings")
    if mono_degree(a) != mono_degree(b):
        raise DegreeMismatch(f"{a} and {b} have different degrees")
    if a == b:
        return "equal"
    ge = le = True
    sa = sb = 0
    for k in range(len(a) - 1, -1, -1):
        sa += a[k]
        sb += b[k]
        if sa < sb:
            ge = False
        if sa > sb:
            le = False
    if ge:
        return "greater_B"
    if le:
        return "less_B"
    return "incomparable"


class StronglyStableIdeal:
    """A validated strongly stable monomial ideal, with cached combinatorics."""

    def __init__(self, ring: Ring, basis: list[tuple], _validated: bool = False):
        if not _validated:
            raise TypeError("use StronglyStableIdeal.validate(...)")
        self.ring = ring
        self.basis = frozenset(basis)
        self.basis_sorted = tuple(sorted_for_print(self.basis))
        self._member_cache: dict[tuple, bool] = {}
        self._star_cache: dict[tuple, tuple] = {}
        self._nonmember_by_deg: dict[int, list] = {}

    # -------------------------------------------------------- construction

    @classmethod
    def validate(cls, ring: Ring, basis) -> "StronglyStableIdeal":
        """Minimalize, then check closure under increasing elementary moves.

        Checking the moves of basis elements suffices: >_B is generated by
        single moves and ideals are closed under multiplication.
        """
        basis = minimalize(basis)
        if not basis:
            raise EmptyBasis("empty monomial basis")
        for m in basis:
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} does not fit {ring}")
        probe = cls(ring, basis, _validated=True)
        for m in basis:
            for i, e in enumerate(m):
                if not e:
                    continue
                for j in range(i + 1, len(m)):
                    moved = list(m)
                    moved[i] -= 1
                    moved[j] += 1
                    moved = tuple(moved)
                    if not probe.contains(moved):
                        raise NotStronglyStable(m, i + (0 if ring.has_x0 else 1),
                                                j + (0 if ring.has_x0 else 1), moved)
        return probe

    @classmethod
    def from_strings(cls, ring: Ring, strings) -> "StronglyStableIdeal":
        from .textio import parse_monomial

        return cls.validate(ring, [parse_monomial(s, ring) for s in strings])

    def __eq__(self, other):
        return (isinstance(other, StronglyStableIdeal)
                and self.ring == other.ring and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ring, self.basis))

    def __repr__(self):
        from .textio import format_monomial

        gens = ",".join(format_monomial(m, self.ring) for m in self.basis_sorted)
        return f"<ideal ({gens})>"

    # ---------------------------------------------------------- membership

    def contains(self, m: tuple) -> bool:
        hit = self._member_cache.get(m)
        if hit is None:
            hit = any(mono_divides(b, m) for b in self.basis)
            self._member_cache[m] = hit
        return hit

    def star(self, m: tuple) -> tuple[tuple, tuple]:
        """The unique (generator, cofactor) with gen*cof = m, min(gen) >= max(cof)."""
        hit = self._star_cache.get(m)
        if hit is not None:
            return hit
        if not self.contains(m):
            raise NotInIdeal(f"{m} is not in the ideal")
        for g in self.basis:
            if mono_divides(g, m):
                cof = mono_div(m, g)
                mx = mono_max_var(cof)
                if mx is None or mono_min_var(g) >= mx:
                    self._star_cache[m] = (g, cof)
                    return g, cof
        raise AssertionError(f"no star decomposition found for {m} (ideal not strongly stable?)")

    def star_key(self, m: tuple):
        """Sort key realizing the division algorithm's well-order on ideal monomials."""
        g, cof = self.star(m)
        return (lex_key(cof), lex_key(g))

    def star_order_compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.star_key(a), self.star_key(b)
        return (ka > kb) - (ka < kb)

    # -------------------------------------------------------- enumerations

    def _nonmembers_of_degree(self, d: int) -> list:
        hit = self._nonmember_by_deg.get(d)
        if hit is None:
            hit = [m for m in self.ring.monomials_of_degree(d) if not self.contains(m)]
            self._nonmember_by_deg[d] = hit
        return hit

    def sous_escalier(self, max_deg: int) -> list[tuple]:
        """Monomials of degree <= max_deg outside the ideal, in print order."""
        out = []
        for d in range(max_deg + 1):
            out.extend(self._nonmembers_of_degree(d))
        return sorted_for_print(out)

    def vspace(self, max_deg: int) -> list[tuple]:
        """Monomial basis of the ideal's degree <= max_deg slice, in print order."""
        out = []
        for d in range(max_deg + 1):
            out.extend(m for m in self.ring.monomials_of_degree(d) if self.contains(m))
        return sorted_for_print(out)

    def members_of_degree(self, d: int) -> list[tuple]:
        return [m for m in self.ring.monomials_of_degree(d) if self.contains(m)]

    # ------------------------------------------------------------ invariants

    @property
    def regularity(self) -> int:
        return max(mono_degree(m) for m in self.basis)

    @property
    def satiety(self) -> int:
        """Max degree of a basis monomial divisible by the smallest variable.

        0 when no generator involves it, i.e. the ideal is saturated.
        """
        degs = [mono_degree(m) for m in self.basis if m[0] > 0]
        return max(degs, default=0)

    @property
    def is_saturated(self) -> bool:
        return self.satiety == 0

    @property
    def is_artinian(self) -> bool:
        """Finite sous-escalier; equivalent to a pure power of the smallest
        variable sitting in the basis."""
        return any(m[0] > 0 and mono_degree(m) == m[0] for m in self.basis)

    def optimized_level(self, m: int) -> int:
        """Biggest m0 <= m with a basis monomial of degree m0+1 divisible by
        the smallest variable; floors at 1."""
        if m < 1:
            raise ValueError("level bound must be >= 1")
        best = 1
        for g in self.basis:
            if g[0] > 0:
                m0 = mono_degree(g) - 1
                if best < m0 <= m:
                    best = m0
        return best

    # ----------------------------------------------------------- operations

    def is_affine_segment(self, m: int, order: TermOrder) -> bool:
        """Every generator strictly omega-dominates the sous-escalier up to
        max(m, its degree)."""
        if order.kind != "weighted":
            raise ValueError("segment test needs a weighted order")
        if len(order.weights) != self.ring.nvars:
            raise ValueError("weight vector length does not match ring")
        for g in self.basis:
            t = max(m, mono_degree(g))
            wg = order.weighted_degree(g)
            for nm in self.sous_escalier(t):
                if wg <= order.weighted_degree(nm):
                    return False
        return True

    def homogenize(self) -> "StronglyStableIdeal":
        """Same basis read in S; the result is saturated."""
        if self.ring.has_x0:
            raise ValueError("already a homogeneous-ring ideal")
        sring = self.ring.homogenized()
        basis = [(0,) + m for m in self.basis]
        return StronglyStableIdeal(sring, basis, _validated=True)

    def dehomogenize(self) -> "StronglyStableIdeal":
        """Drop x_0; requires a saturated ideal in S."""
        if not self.ring.has_x0:
            raise ValueError("not a homogeneous-ring ideal")
        if not self.is_saturated:
            raise NotSaturated(f"satiety is {self.satiety}, not 0")
        rring = self.ring.dehomogenized()
        basis = [m[1:] for m in self.basis]
        return StronglyStableIdeal(rring, basis, _validated=True)

    def truncate(self, m: int) -> "StronglyStableIdeal":
        """Minimal generators of the degree >= m part."""
        gens = [g for g in self.basis if mono_degree(g) >= m]
        gens.extend(self.members_of_degree(m))
        return StronglyStableIdeal(self.ring, minimalize(gens), _validated=True)


def borel_reachable(a: tuple, b: tuple) -> bool:
    """BFS over increasing moves: is b reachable from a (so b >=_B a)?
    Exponential fallback used as the test oracle for borel_compare."""
    if mono_degree(a) != mono_degree(b):
        raise DegreeMismatch("different degrees")
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for m in frontier:
            if m == b:
                return True
            for i, e in enumerate(m):
                if not e:
                    continue
                for j in range(i + 1, len(m)):
                    mm = list(m)
                    mm[i] -= 1
                    mm[j] += 1
                    mm = tuple(mm)
                    if mm not in seen:
                        seen.add(mm)
                        nxt.append(mm)
        frontier = nxt
    return False
