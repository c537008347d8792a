"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from hankelcalc.series import QQ, Ring, Series

small_int = st.integers(min_value=-9, max_value=9)
rational = st.builds(
    Fraction, st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=12)
)


def int_series(order: int = 16, min_order: int | None = None):
    lo = order if min_order is None else min_order
    return st.lists(small_int, min_size=lo + 1, max_size=order + 1).map(lambda cs: Series(cs))


def rat_series(order: int = 12):
    return st.lists(rational, min_size=order + 1, max_size=order + 1).map(lambda cs: Series(cs))


def unit_series(order: int = 12):
    """Rational series with constant term 1."""
    return st.lists(rational, min_size=order, max_size=order).map(lambda cs: Series([1] + cs))


def residue_series(m: int, order: int = 16):
    r = Ring(m)
    return st.lists(st.integers(0, m - 1), min_size=order + 1, max_size=order + 1).map(
        lambda cs: Series(cs, r)
    )


def p_integral_series(p: int, order: int = 12):
    """Rational series whose denominators avoid ``p``."""
    dens = st.sampled_from([d for d in range(1, 16) if d % p])
    coeff = st.builds(Fraction, st.integers(-20, 20), dens)
    return st.lists(coeff, min_size=order + 1, max_size=order + 1).map(lambda cs: Series(cs))


QQ_RING = QQ
