"""Exact Hankel determinant calculus: truncated power series, Jacobi continued
fractions, congruences modulo prime powers and the chopping method."""

from .algebraic import BivarPoly, guess_algebraic, solve_quadratic, verify_equation
from .errors import (
    ComputationError,
    CoprimalityError,
    NotInvertibleError,
    ParameterError,
    RingMismatchError,
    SqrtError,
    StieltjesBreakdown,
    TruncationError,
    ZeroDenominatorError,
)
from .expr import expand, parse
from .generators import generate
from .hankel import HankelResult, hankel_det, hankel_det_naive, hankel_sequence
from .jfraction import (
    JFraction,
    chop,
    graft,
    graft_ratio_check,
    hankel_from_jfrac,
    jfrac_to_series,
    stieltjes_expand,
    uv_from_hankel,
)
from .modular import Modulus, first_incongruence, hankel_transfer_check, reduce_series, series_congruent
from .periodic import EPSeq, detect_periodicity, parse_star, render
from .series import QQ, Ring, Series, frobenius_check, series_arith, series_div, series_sqrt, subst_power

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
