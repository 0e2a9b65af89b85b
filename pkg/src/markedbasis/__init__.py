"""Marked bases over strongly stable monomial ideals.

Exact division algorithm for non-homogeneous marked sets, the effective
marked-basis criterion, homogenization transport, marked-scheme equation
generation and Zariski tangent-space dimensions, over the rationals or
over rational parameter rings.
"""

from ._kernels import COMPILED
from .borel import StronglyStableIdeal, borel_compare
from .coeffs import PPoly
from .hilbert import hilbert_function, hilbert_polynomial
from .poly import Poly
from .reduction import (
    Completion,
    MarkedPolynomial,
    MarkedSet,
    check_marked_basis,
    compute_completion,
    linear_oracle,
    normal_form,
    reduce,
    syzygy_lift,
)
from .rings import R, Ring, S, TermOrder, compare
from .textio import Params, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "Completion",
    "MarkedPolynomial",
    "MarkedSet",
    "Params",
    "Poly",
    "PPoly",
    "R",
    "Ring",
    "S",
    "StronglyStableIdeal",
    "TermOrder",
    "borel_compare",
    "check_marked_basis",
    "compare",
    "compute_completion",
    "format_poly",
    "hilbert_function",
    "hilbert_polynomial",
    "linear_oracle",
    "normal_form",
    "parse_poly",
    "reduce",
    "syzygy_lift",
]
