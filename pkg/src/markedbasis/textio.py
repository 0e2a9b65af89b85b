"""Canonical text grammar for polynomials plus the JSON file formats.

Grammar (canonical printing is bit-exact round-trippable):

    poly    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := rational | param | xvar | '(' parampoly ')'
    rational:= INT | INT '/' INT
    xvar    := 'x' INT ['^' INT]
    param   := NAME ['^' INT]          e.g.  t, T, c[0,1;2,0]

Terms are printed in DegLex-descending order of the x-monomial, variables
inside a monomial largest-first, '^1' and unit coefficients omitted.
Parameter coefficients with several terms are parenthesized.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .coeffs import PPoly, cm_degree
from .poly import Poly
from .rings import R, Ring, S


class Params:
    """An ordered catalogue of parameter-variable names."""

    def __init__(self, names=()):
        self.names = tuple(names)
        self._index = {n: i for i, n in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError("duplicate parameter names")

    def index(self, name: str) -> int:
        return self._index[name]

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, Params) and self.names == other.names


def cname(alpha: tuple, gamma: tuple) -> str:
    """Canonical parameter name for the tail coefficient of x^gamma in f_alpha."""
    return "c[%s;%s]" % (",".join(map(str, alpha)), ",".join(map(str, gamma)))


_CNAME_RE = re.compile(r"^c\[([0-9,]*);([0-9,]*)\]$")


def parse_cname(name: str) -> tuple[tuple, tuple]:
    m = _CNAME_RE.match(name)
    if not m:
        raise ValueError(f"not a catalogue parameter name: {name!r}")
    a = tuple(int(x) for x in m.group(1).split(",")) if m.group(1) else ()
    g = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    return a, g


# ---------------------------------------------------------------- printing

def format_monomial(m: tuple, ring: Ring) -> str:
    names = ring.names
    parts = []
    for i in range(len(m) - 1, -1, -1):
        e = m[i]
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts) if parts else "1"


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _cmono_str(cm: tuple, names) -> str:
    parts = []
    for idx, e in cm:
        n = names[idx]
        parts.append(n if e == 1 else f"{n}^{e}")
    return "*".join(parts)


def _cmono_sort_key(cm: tuple):
    return (-cm_degree(cm), cm)


def format_ppoly(p: PPoly, names) -> str:
    if not p:
        return "0"
    out = []
    for cm in sorted(p, key=_cmono_sort_key):
        q = p[cm]
        sign = "-" if q < 0 else "+"
        aq = abs(q)
        if not cm:
            body = _format_fraction(aq)
        elif aq == 1:
            body = _cmono_str(cm, names)
        else:
            body = f"{_format_fraction(aq)}*{_cmono_str(cm, names)}"
        out.append((sign, body))
    s, first = out[0]
    text = ("-" if s == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def _format_term(m: tuple, c, ring: Ring, names) -> tuple[str, str]:
    """Return (sign, body) with sign in {'+', '-'}."""
    mono = format_monomial(m, ring)
    if isinstance(c, int):
        c = Fraction(c)
    if isinstance(c, PPoly):
        if c.is_constant():
            c = c.constant_value()
    if isinstance(c, Fraction):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono == "1":
            return sign, _format_fraction(a)
        if a == 1:
            return sign, mono
        return sign, f"{_format_fraction(a)}*{mono}"
    # parametric coefficient
    if len(c) == 1:
        (cm, q), = c.items()
        sign = "-" if q < 0 else "+"
        aq = abs(q)
        if not cm:
            body = _format_fraction(aq)
        else:
            body = _cmono_str(cm, names)
            if aq != 1:
                body = f"{_format_fraction(aq)}*{body}"
        return (sign, body if mono == "1" else f"{body}*{mono}")
    body = f"({format_ppoly(c, names)})"
    return "+", (body if mono == "1" else f"{body}*{mono}")


def format_poly(p: Poly, names=()) -> str:
    if p.is_zero():
        return "0"
    pieces = [_format_term(m, c, p.ring, names) for m, c in p.iter_sorted()]
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


# ----------------------------------------------------------------- parsing

_TOKEN_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")
_PARAM_RE = re.compile(r"([A-Za-z_][A-Za-z_0-9]*(?:\[[0-9,;]*\])?)(?:\^(\d+))?$")
_RAT_RE = re.compile(r"(\d+)(?:/(\d+))?$")


class ParseError(ValueError):
    pass


def _split_top(s: str, seps: str) -> list[str]:
    """Split on separator chars not nested inside () or []."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {s!r}")
        if depth == 0 and ch in seps:
            out.append("".join(cur))
            cur = [ch]  # keep separator as first char of next chunk
        else:
            cur.append(ch)
    out.append("".join(cur))
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {s!r}")
    return out


def parse_ppoly(s: str, params: Params) -> PPoly:
    s = s.strip()
    if not s:
        raise ParseError("empty parameter polynomial")
    total = PPoly()
    for chunk in _split_top(s, "+-"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = Fraction(1)
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        coeff = sign
        cm: dict[int, int] = {}
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ParseError(f"empty factor in {s!r}")
            mr = _RAT_RE.match(factor)
            if mr and mr.end() == len(factor):
                coeff *= Fraction(int(mr.group(1)), int(mr.group(2) or 1))
                continue
            mp = _PARAM_RE.match(factor)
            if mp and mp.group(1) in params:
                idx = params.index(mp.group(1))
                cm[idx] = cm.get(idx, 0) + int(mp.group(2) or 1)
                continue
            raise ParseError(f"unknown factor {factor!r} in parameter polynomial")
        key = tuple(sorted(cm.items()))
        nv = total.get(key, Fraction(0)) + coeff
        if nv:
            total[key] = nv
        elif key in total:
            del total[key]
    return total


def parse_monomial(s: str, ring: Ring) -> tuple:
    s = s.strip()
    if s == "1":
        return ring.one()
    e = [0] * ring.nvars
    for factor in s.split("*"):
        factor = factor.strip()
        mv = _TOKEN_RE.match(factor)
        if not (mv and mv.end() == len(factor)):
            raise ParseError(f"bad monomial factor {factor!r}")
        i = int(mv.group(1))
        lo = 0 if ring.has_x0 else 1
        if not (lo <= i <= ring.n):
            raise ParseError(f"variable x{i} outside ring with n={ring.n}")
        e[i - lo] += int(mv.group(2) or 1)
    return tuple(e)


def parse_poly(s: str, ring: Ring, params: Params | None = None) -> Poly:
    params = params or Params()
    s = s.strip()
    if s in ("0", ""):
        return Poly.zero(ring)
    terms: dict = {}
    for chunk in _split_top(s, "+-"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:].strip()
        if not chunk:
            raise ParseError(f"dangling sign in {s!r}")
        coeff_scalar = Fraction(sign)
        coeff_param: PPoly | None = None
        expo = [0] * ring.nvars
        for factor in _split_top(chunk, "*"):
            factor = factor.strip().lstrip("*").strip()
            if not factor:
                raise ParseError(f"empty factor in {chunk!r}")
            if factor.startswith("("):
                if not factor.endswith(")"):
                    raise ParseError(f"bad parenthesized factor {factor!r}")
                sub = parse_ppoly(factor[1:-1], params)
                coeff_param = sub if coeff_param is None else coeff_param * sub
                continue
            mr = _RAT_RE.match(factor)
            if mr and mr.end() == len(factor):
                coeff_scalar *= Fraction(int(mr.group(1)), int(mr.group(2) or 1))
                continue
            mv = _TOKEN_RE.match(factor)
            if mv and mv.end() == len(factor):
                i = int(mv.group(1))
                lo = 0 if ring.has_x0 else 1
                if not (lo <= i <= ring.n):
                    raise ParseError(f"variable x{i} outside ring with n={ring.n}")
                expo[i - lo] += int(mv.group(2) or 1)
                continue
            mp = _PARAM_RE.match(factor)
            if mp and mp.end() == len(factor) and mp.group(1) in params:
                pp = PPoly({((params.index(mp.group(1)), int(mp.group(2) or 1)),): Fraction(1)})
                coeff_param = pp if coeff_param is None else coeff_param * pp
                continue
            raise ParseError(f"unknown factor {factor!r}")
        coeff = coeff_param * coeff_scalar if coeff_param is not None else coeff_scalar
        key = tuple(expo)
        cur = terms.get(key)
        nv = coeff if cur is None else cur + coeff
        if nv:
            terms[key] = nv
        elif key in terms:
            del terms[key]
    return Poly(ring, terms)


# ------------------------------------------------------------- file formats

def ring_to_json(ring: Ring) -> dict:
    return {"ring": "S" if ring.has_x0 else "R", "n": ring.n}


def ring_from_json(d: dict) -> Ring:
    kind = d.get("ring", "R")
    n = int(d["n"])
    if kind == "S":
        return S(n)
    if kind == "R":
        return R(n)
    raise ParseError(f"bad ring tag {kind!r}")


def ideal_to_json(ideal) -> dict:
    d = ring_to_json(ideal.ring)
    d["basis"] = [format_monomial(m, ideal.ring) for m in ideal.basis_sorted]
    return d


def ideal_from_json(d: dict):
    from .borel import StronglyStableIdeal

    ring = ring_from_json(d)
    basis = [parse_monomial(s, ring) for s in d["basis"]]
    return StronglyStableIdeal.validate(ring, basis)


def load_ideal(path: str | Path):
    return ideal_from_json(json.loads(Path(path).read_text()))


def save_ideal(ideal, path: str | Path) -> None:
    Path(path).write_text(json.dumps(ideal_to_json(ideal), indent=1) + "\n")


def marked_set_to_json(ms) -> dict:
    names = ms.params.names if ms.params else ()
    return {
        "ideal": ideal_to_json(ms.ideal),
        "m": ms.m,
        "params": list(names),
        "polys": [
            {"head": format_monomial(h, ms.ideal.ring), "poly": format_poly(f.poly(), names)}
            for h, f in ms.items_sorted()
        ],
    }


def marked_set_from_json(d: dict, base_dir: str | Path | None = None):
    from .reduction import MarkedPolynomial, MarkedSet

    ideal_field = d["ideal"]
    if isinstance(ideal_field, str):
        root = Path(base_dir) if base_dir else Path.cwd()
        ideal = load_ideal(root / ideal_field)
    else:
        ideal = ideal_from_json(ideal_field)
    params = Params(d.get("params", ()))
    polys = []
    for entry in d["polys"]:
        head = parse_monomial(entry["head"], ideal.ring)
        poly = parse_poly(entry["poly"], ideal.ring, params)
        polys.append(MarkedPolynomial.from_poly(head, poly))
    return MarkedSet(ideal, int(d["m"]), polys, params=params)


def load_marked_set(path: str | Path):
    p = Path(path)
    return marked_set_from_json(json.loads(p.read_text()), base_dir=p.parent)


def save_marked_set(ms, path: str | Path) -> None:
    Path(path).write_text(json.dumps(marked_set_to_json(ms), indent=1) + "\n")
