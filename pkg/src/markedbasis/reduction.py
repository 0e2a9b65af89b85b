"""Marked polynomials and sets, the division algorithm with certificates,
completions, normal forms, the effective basis criterion and the linear
span oracle.

Reduction replaces an ideal monomial x^gamma = x^alpha * x^eta (the star
decomposition) by x^eta times the tail of the polynomial marked by
x^alpha.  Processing the largest ideal monomial first (in the cofactor-
lexicographic well-order) makes reduction linear in its input, so normal
forms of single monomials can be memoized and reused; the certificate
path replays the same strategy step by step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._kernels import merge_scaled, tup_add
from .borel import StronglyStableIdeal
from .coeffs import PPoly
from .poly import Poly
from .rings import mono_degree, mono_max_var, mono_min_var, sorted_for_print
from .textio import Params, format_monomial

ONE = Fraction(1)


class FuelExceeded(RuntimeError):
    pass


class NotABasis(ValueError):
    pass


class NoCompletion(ValueError):
    def __init__(self, witnesses, ring):
        self.witnesses = witnesses  # list of (head, reduced Poly), canonical order
        self.witness = witnesses[0][0]
        names = ", ".join(format_monomial(b, ring) for b, _ in witnesses)
        super().__init__(f"no completion at this level; overflowing heads: {names}")


@dataclass(frozen=True)
class MarkedPolynomial:
    """head - tail, with the head a designated ideal monomial."""

    head: tuple
    tail: Poly

    @classmethod
    def from_poly(cls, head: tuple, poly: Poly) -> "MarkedPolynomial":
        c = poly.coeff(head)
        if c != 1:
            raise ValueError(
                f"head {format_monomial(head, poly.ring)} must appear with coefficient 1, got {c}"
            )
        tail = Poly.monomial(poly.ring, head) - poly
        return cls(head, tail)

    def poly(self) -> Poly:
        return Poly.monomial(self.tail.ring, self.head) - self.tail

    @property
    def ring(self):
        return self.tail.ring


class MarkedSet:
    """Marked polynomials headed by the monomial basis of a strongly stable
    ideal.  With a level m the tails are degree-capped by max(m, deg head);
    with m=None it is a plain non-homogeneous marked set."""

    def __init__(self, ideal: StronglyStableIdeal, m: int | None, polys,
                 params: Params | None = None):
        self.ideal = ideal
        self.m = m
        self.params = params or Params()
        self.polys: dict[tuple, MarkedPolynomial] = {}
        for f in polys:
            if f.head in self.polys:
                raise ValueError(f"duplicate head {format_monomial(f.head, ideal.ring)}")
            self.polys[f.head] = f
        self._validate()
        self._engine = None

    def _validate(self) -> None:
        ring = self.ideal.ring
        if set(self.polys) != set(self.ideal.basis):
            missing = self.ideal.basis - set(self.polys)
            extra = set(self.polys) - self.ideal.basis
            parts = []
            if missing:
                parts.append("missing heads " + ", ".join(format_monomial(h, ring) for h in sorted_for_print(missing)))
            if extra:
                parts.append("extra heads " + ", ".join(format_monomial(h, ring) for h in sorted_for_print(extra)))
            raise ValueError("heads do not match the monomial basis: " + "; ".join(parts))
        if self.m is not None and self.m < 1:
            raise ValueError("level m must be a positive integer")
        for head, f in self.polys.items():
            if f.ring != ring:
                raise ValueError("marked polynomial in the wrong ring")
            for mm in f.tail.terms:
                if self.ideal.contains(mm):
                    raise ValueError(
                        f"tail of {format_monomial(head, ring)} meets the ideal at "
                        f"{format_monomial(mm, ring)}")
            if self.m is not None:
                cap = max(self.m, mono_degree(head))
                if f.tail.degree() > cap:
                    raise ValueError(
                        f"tail of {format_monomial(head, ring)} has degree "
                        f"{f.tail.degree()} > max(m, deg head) = {cap}")

    def items_sorted(self):
        for h in sorted_for_print(self.polys):
            yield h, self.polys[h]

    def engine(self) -> "NormalFormEngine":
        if self._engine is None:
            self._engine = NormalFormEngine(self)
        return self._engine

    def scalar(self) -> bool:
        return all(
            all(not isinstance(c, PPoly) for c in f.tail.terms.values())
            for f in self.polys.values()
        )

    def substitute_point(self, values: dict[int, Fraction]) -> "MarkedSet":
        polys = [MarkedPolynomial(f.head, f.tail.substitute_point(values))
                 for f in self.polys.values()]
        return MarkedSet(self.ideal, self.m, polys, params=Params())


class Completion:
    """Marked polynomials for the non-minimal ideal monomials of degree <= m,
    with tails of degree <= m."""

    def __init__(self, ideal: StronglyStableIdeal, m: int, polys):
        self.ideal = ideal
        self.m = m
        self.polys: dict[tuple, MarkedPolynomial] = {f.head: f for f in polys}
        expected = set(ideal.vspace(m)) - ideal.basis
        if set(self.polys) != expected:
            raise ValueError("completion heads must be exactly the non-minimal ideal "
                             "monomials of degree <= m")
        for f in self.polys.values():
            if f.tail.degree() > m:
                raise ValueError("completion tail exceeds degree m")
            for mm in f.tail.terms:
                if ideal.contains(mm):
                    raise ValueError("completion tail meets the ideal")

    def items_sorted(self):
        for h in sorted_for_print(self.polys):
            yield h, self.polys[h]


@dataclass(frozen=True)
class Step:
    gamma: tuple
    coeff: object
    eta: tuple
    alpha: tuple


@dataclass
class ReductionCertificate:
    """input - result = sum of c * x^eta * f_alpha over the recorded steps."""

    input: Poly
    result: Poly
    steps: list[Step] = field(default_factory=list)

    def re_expand(self, G: MarkedSet) -> Poly:
        total = Poly.zero(self.input.ring)
        for s in self.steps:
            total = total + G.polys[s.alpha].poly().mul_monomial(s.eta, s.coeff)
        return total + self.result

    def holds(self, G: MarkedSet) -> bool:
        return self.re_expand(G) == self.input


def reduce(g: Poly, G: MarkedSet, fuel: int = 10 ** 6,
           strategy: str = "largest") -> ReductionCertificate:
    """Run the division algorithm on g, recording one step per replaced
    monomial.  Terminates for every input; the fuel cap only guards
    against implementation bugs."""
    J = G.ideal
    if g.ring != J.ring:
        raise ValueError("polynomial is not in the marked set's ring")
    pick_last = strategy == "largest"
    if strategy not in ("largest", "smallest"):
        raise ValueError(f"unknown strategy {strategy!r}")
    work = dict(g.terms)
    steps: list[Step] = []
    while True:
        in_ideal = [m for m in work if J.contains(m)]
        if not in_ideal:
            break
        in_ideal.sort(key=J.star_key)
        gamma = in_ideal[-1] if pick_last else in_ideal[0]
        c = work.pop(gamma)
        alpha, eta = J.star(gamma)
        steps.append(Step(gamma, c, eta, alpha))
        tail = G.polys[alpha].tail
        for tau, ct in tail.terms.items():
            mm = tup_add(eta, tau)
            nv = work.get(mm)
            nv = c * ct if nv is None else nv + c * ct
            if nv:
                work[mm] = nv
            elif mm in work:
                del work[mm]
        if len(steps) > fuel:
            raise FuelExceeded(f"more than {fuel} reduction steps")
    return ReductionCertificate(g, Poly(J.ring, work), steps)


class NormalFormEngine:
    """Memoized monomial normal forms for one marked set.

    The largest-first strategy is linear, so the reduced form of any
    polynomial is the coefficient-weighted sum of its monomials' reduced
    forms; each ideal monomial's form is computed once.
    """

    def __init__(self, G: MarkedSet):
        self.G = G
        self.J = G.ideal
        self._memo: dict[tuple, dict] = {}

    def nf_monomial(self, m: tuple) -> dict:
        J = self.J
        if not J.contains(m):
            return {m: ONE}
        memo = self._memo
        if m in memo:
            return memo[m]
        stack = [m]
        while stack:
            g = stack[-1]
            if g in memo:
                stack.pop()
                continue
            alpha, eta = J.star(g)
            tail = self.G.polys[alpha].tail.terms
            pending = []
            for tau in tail:
                mm = tup_add(eta, tau)
                if J.contains(mm) and mm not in memo:
                    pending.append(mm)
            if pending:
                stack.extend(pending)
                continue
            out: dict = {}
            for tau, c in tail.items():
                mm = tup_add(eta, tau)
                if J.contains(mm):
                    merge_scaled(out, memo[mm], c)
                else:
                    nv = out.get(mm)
                    nv = c if nv is None else nv + c
                    if nv:
                        out[mm] = nv
                    elif mm in out:
                        del out[mm]
            memo[g] = out
            stack.pop()
        return memo[m]

    def nf(self, g: Poly) -> Poly:
        out: dict = {}
        for m, c in g.terms.items():
            merge_scaled(out, self.nf_monomial(m), c)
        return Poly(g.ring, out)


def completion_attempt(G: MarkedSet) -> list[tuple[tuple, Poly]]:
    """(head, reduced form) for every non-minimal ideal monomial of degree
    <= m, in canonical print order, with no degree filtering."""
    if G.m is None:
        raise ValueError("completion needs a level m")
    eng = G.engine()
    heads = [b for b in G.ideal.vspace(G.m) if b not in G.ideal.basis]
    return [(b, Poly(G.ideal.ring, dict(eng.nf_monomial(b)))) for b in heads]


def compute_completion(G: MarkedSet) -> Completion:
    attempt = completion_attempt(G)
    bad = [(b, nf) for b, nf in attempt if nf.degree() > G.m]
    if bad:
        raise NoCompletion(bad, G.ideal.ring)
    polys = [MarkedPolynomial(b, nf) for b, nf in attempt]
    return Completion(G.ideal, G.m, polys)


def syzygy_obligations(ideal: StronglyStableIdeal):
    """(alpha, i) pairs: every generator times every variable above its
    minimum, in canonical order (alpha print-descending, i descending)."""
    out = []
    for alpha in sorted_for_print(ideal.basis):
        lo = mono_min_var(alpha)
        for i in range(ideal.ring.nvars - 1, lo, -1):
            out.append((alpha, i))
    return out


@dataclass
class BasisVerdict:
    is_basis: bool
    syzygy_failures: list  # (alpha, i, residue Poly)
    completion_failures: list  # (beta, reduced Poly)
    completion_checked: bool
    artinian_shortcut: bool

    @property
    def syzygy_ok(self) -> bool:
        return not self.syzygy_failures

    @property
    def completion_witnesses(self) -> list:
        return [b for b, _ in self.completion_failures]

    @property
    def witness(self):
        if self.completion_failures:
            return self.completion_failures[0][0]
        if self.syzygy_failures:
            a, i, _ = self.syzygy_failures[0]
            return (a, i)
        return None


def syzygy_residue(G: MarkedSet, alpha: tuple, i: int) -> Poly:
    """Reduced form of x_i * f_alpha; zero exactly when the syzygy lifts."""
    f = G.polys[alpha]
    xi = G.ideal.ring.var(i)
    g = Poly.monomial(G.ideal.ring, tup_add(alpha, xi)) - f.tail.mul_monomial(xi)
    return G.engine().nf(g)


def check_marked_basis(G: MarkedSet) -> BasisVerdict:
    """Effective criterion: all syzygy reductions vanish, and (unless the
    ideal is Artinian with m >= reg-1, where it is automatic) every
    non-minimal ideal monomial of degree <= m reduces within degree m.

    For parametric coefficients a zero residue means the zero polynomial
    of the parameter ring, so 'basis' holds identically in the parameters.
    """
    if G.m is None:
        raise ValueError("the criterion needs a level m")
    syz_failures = []
    for alpha, i in syzygy_obligations(G.ideal):
        res = syzygy_residue(G, alpha, i)
        if not res.is_zero():
            syz_failures.append((alpha, i, res))
    shortcut = G.ideal.is_artinian and G.m >= G.ideal.regularity - 1
    comp_failures = []
    if not shortcut:
        comp_failures = [(b, nf) for b, nf in completion_attempt(G) if nf.degree() > G.m]
    return BasisVerdict(
        is_basis=not syz_failures and not comp_failures,
        syzygy_failures=syz_failures,
        completion_failures=comp_failures,
        completion_checked=not shortcut,
        artinian_shortcut=shortcut,
    )


def normal_form(g: Poly, G: MarkedSet, verify: bool = False) -> Poly:
    if verify and not check_marked_basis(G).is_basis:
        raise NotABasis("marked set fails the basis criterion")
    return G.engine().nf(g)


def syzygy_lift(G: MarkedSet, alpha: tuple, i: int, fuel: int = 10 ** 6):
    """Certificate that x_i * f_alpha rewrites to zero, as the explicit
    representation sum(c_k * x^delta_k * f_alpha_k)."""
    lo = mono_min_var(alpha)
    if i <= lo:
        raise ValueError("variable must exceed the generator's minimal variable")
    f = G.polys[alpha]
    xi = G.ideal.ring.var(i)
    g = Poly.monomial(G.ideal.ring, tup_add(alpha, xi)) - f.tail.mul_monomial(xi)
    cert = reduce(g, G, fuel=fuel)
    if not cert.result.is_zero():
        raise NotABasis(f"x{i + (0 if G.ideal.ring.has_x0 else 1)} * f does not reduce to zero")
    return [(s.coeff, s.eta, s.alpha) for s in cert.steps]


@dataclass
class DegreeReport:
    degree: int
    dim_ideal: int
    rank_star: int
    rank_full: int

    @property
    def ok(self) -> bool:
        return self.rank_star == self.dim_ideal == self.rank_full


@dataclass
class OracleReport:
    m: int
    max_degree: int
    per_degree: list[DegreeReport]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.per_degree)

    @property
    def first_failure(self) -> int | None:
        for r in self.per_degree:
            if not r.ok:
                return r.degree
        return None


def linear_oracle(G: MarkedSet, max_degree: int | None = None) -> OracleReport:
    """Degree-by-degree rank check of the homogenized marked set.

    At each degree the span of star-cofactor multiples and the span of all
    multiples must both hit exactly the ideal's dimension.  Necessary on
    bases; refutes non-bases empirically within the tested window.
    """
    from .linalg import rank_rows

    if G.m is None:
        raise ValueError("the oracle needs a level m")
    if not G.scalar():
        raise ValueError("the linear oracle needs scalar coefficients")
    m = G.m
    J_h = G.ideal.homogenize()
    J_trunc = J_h.truncate(m)
    sring = J_h.ring
    if max_degree is None:
        max_degree = max(G.ideal.regularity, m) + 3
    if max_degree < m:
        raise ValueError("degree bound must be >= m")

    lifted: list[tuple[tuple, Poly]] = []  # (nominal head in S, homogeneous poly)
    entries = [(h, f.poly()) for h, f in G.items_sorted()]
    entries += completion_attempt(G)
    for head, f in entries:
        d = max(f.degree(), mono_degree(head))
        m_f = max(0, m - d)
        F = f.homogenize()
        if m_f:
            F = F.mul_monomial((m_f,) + (0,) * (sring.nvars - 1))
        nominal = (m_f + d - mono_degree(head),) + head
        lifted.append((nominal, F))

    reports = []
    for ell in range(m, max_degree + 1):
        cols: dict[tuple, int] = {}
        star_rows = []
        full_rows = []
        for nominal, F in lifted:
            dF = mono_degree(nominal)
            if dF > ell:
                continue
            in_basis = nominal in J_trunc.basis
            lo = mono_min_var(nominal)
            for delta in sring.monomials_of_degree(ell - dF):
                row = {}
                for mm, c in F.mul_monomial(delta).terms.items():
                    row[cols.setdefault(mm, len(cols))] = c
                full_rows.append(row)
                mx = mono_max_var(delta)
                if in_basis and (mx is None or mx <= lo):
                    star_rows.append(row)
        dim_ideal = len(J_trunc.members_of_degree(ell))
        reports.append(DegreeReport(ell, dim_ideal, rank_rows(star_rows), rank_rows(full_rows)))
    return OracleReport(m, max_degree, reports)
