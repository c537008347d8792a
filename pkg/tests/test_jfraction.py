from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hankelcalc.errors import ParameterError, StieltjesBreakdown, TruncationError, ZeroDenominatorError
from hankelcalc.expr import expand
from hankelcalc.hankel import hankel_sequence
from hankelcalc.jfraction import (
    JFraction,
    chop,
    graft,
    graft_ratio_check,
    hankel_from_jfrac,
    jfrac_to_series,
    stieltjes_expand,
    uv_from_hankel,
)
from hankelcalc.periodic import EPSeq, detect_periodicity, parse_star, render
from hankelcalc.series import Ring
from hankelcalc.verify.families import zfamily_jfrac, yz_series

from strategies import int_series, rational

P2_H = [1, 1, -2, 4, 8, -16, -32, -64, 128, -256, -1536, -3072]
nonzero_rational = rational.filter(lambda q: q != 0)


def test_stieltjes_p2():
    J = stieltjes_expand(expand("P2", 24), 12)
    assert J.vs(13) == [1, -2, 1, -1, -1, -1, 1, -1, 1, -3, Fraction(1, 3), Fraction(-1, 3), -3]


def test_stieltjes_s2():
    J = stieltjes_expand(expand("S2", 8), 4)
    assert J.us(4) == [-2, Fraction(7, 3), Fraction(23, 3), Fraction(-167, 21)]
    assert J.vs(5) == [1, -3, Fraction(-1, 9), -63, Fraction(-1, 441)]


def test_breakdown_index():
    with pytest.raises(StieltjesBreakdown) as exc:
        stieltjes_expand(expand("1/(1-x)", 6), 3)
    assert exc.value.n == 2


def test_jfrac_to_series_examples():
    cat = jfrac_to_series(JFraction.of("(0)^*", "(1)^*"), 8)
    assert list(cat.coeffs) == [1, 0, 1, 0, 2, 0, 5, 0, 14]
    geo = jfrac_to_series(JFraction.of("(-1, (0)^*)", "(1, (0)^*)"), 6)
    assert geo == expand("1/(1-x)", 6)
    with pytest.raises(TruncationError):
        jfrac_to_series(JFraction.of([1, 2], [1, 1, 1]), 10)


def test_zfamily_pattern_chops_to_f2():
    J = zfamily_jfrac(1, 60)
    f1 = jfrac_to_series(J, 18)
    assert all(f1[k] == 0 for k in range(1, 19, 2))
    f2 = jfrac_to_series(chop(J, 4), 18)
    assert [f2[k] for k in range(0, 19, 2)][:5] == [1, 2, 5, 12, 30]


def test_hankel_from_jfrac_examples():
    J = stieltjes_expand(expand("P2", 24), 12)
    assert hankel_from_jfrac(J, 11) == P2_H
    assert hankel_from_jfrac(JFraction.of("(0)^*", "(1)^*"), 6) == [1] * 7
    assert hankel_from_jfrac(zfamily_jfrac(1, 16), 11) == [1, 1, 1, 1, -1, -1, -2, -2, 1, 1, 3, 3]


def test_uv_from_hankel_agrees_on_p2():
    f = expand("P2", 40)
    H = hankel_sequence(f, 14)
    H1 = hankel_sequence(f, 13, 1)
    # H^(1)_3(P2) = 0, so the formulas are defined only up to u_3
    with pytest.raises(ZeroDenominatorError):
        uv_from_hankel(H, H1)
    us, vs = uv_from_hankel(H[:5], H1[:4])
    J = stieltjes_expand(f, 3)
    assert us == J.us(3)
    assert vs == J.vs(4)


def test_graft_examples():
    F = stieltjes_expand(expand("P2", 30), 14)
    G = JFraction.of("(1)^*", "(1)^*")
    bar = graft(F, G, 1)
    assert hankel_from_jfrac(bar, 12)[1:] == [(-2) ** (n - 1) for n in range(1, 13)]
    assert graft_ratio_check(F, bar, 2, 12)
    assert graft_ratio_check(F, F, 3, 12)
    assert graft(F, chop(F, 5), 5).vs(15) == F.vs(15)
    with pytest.raises(ParameterError):
        graft(F, JFraction.of("(1)^*", "(2)^*"), 1)


def test_graft_realizes_prefactor():
    # f = 1/(1 + 2x + 6x^2 g) is g grafted below u_1 = -2, v_1 = -6
    g = stieltjes_expand(expand("CATALAN", 30), 12)
    top = JFraction.of([-2], [1, -6])
    f = graft(top, g, 1)
    Hf = hankel_from_jfrac(f, 10)
    Hg = hankel_from_jfrac(g, 9)
    assert all(Hf[n] == (-6) ** (n - 1) * Hg[n - 1] for n in range(1, 11))


def test_chop_examples():
    J = zfamily_jfrac(1, 40)
    assert chop(J, 0).vs(20) == J.vs(20)
    assert chop(J, 4).vs(7) == [1, 2, Fraction(1, 2), Fraction(-1, 2), -2, 3, Fraction(1, 3)]
    assert chop(chop(J, 3), 5).vs(20) == chop(J, 8).vs(20)


def test_star_notation():
    s = parse_star("(1,(3,0)*)")
    assert s.preperiod == (1,) and s.period == (3, 0)
    assert render(s) == "(1, (3, 0)^*)"
    assert render(parse_star("pre: 1, -2 | per: 1, -1")) == "(1, -2, (1, -1)^*)"
    assert parse_star("(1, 1, (1)^*)") == parse_star("(1)^*")
    with pytest.raises(ParameterError):
        parse_star("1, 2")


def test_detect_periodicity_examples():
    h = hankel_sequence(expand("P3", 80, Ring(3)), 40)
    p = detect_periodicity(h)
    assert p.preperiod == (1,) and p.period == (1, 2) and p.conjectural
    assert detect_periodicity([1] * 10) == EPSeq((), (1,))
    h = hankel_sequence(expand("TM27", 160, Ring(3)), 80)
    assert render(detect_periodicity(h)) == "(1, (1, 1, 2, 2)^*)"
    assert detect_periodicity([1, 2, 3, 4]) is None


def test_jfraction_text_roundtrip():
    J = JFraction.of("(1, (3, 0)^*)", "(1, (1/2, -2)^*)")
    assert JFraction.parse(str(J)) == J


def test_breakdown_matches_zero_minor_p32():
    f = yz_series(0, 0, 40)
    H = hankel_sequence(f, 16)
    n0 = next(n for n, h in enumerate(H) if h == 0)
    with pytest.raises(StieltjesBreakdown) as exc:
        stieltjes_expand(f, 16)
    assert exc.value.n == n0


# properties


@given(int_series(24))
def test_roundtrip_a_and_fundamental_relation(f):
    assume(f[0] != 0)
    d = 12
    try:
        J = stieltjes_expand(f, d)
    except StieltjesBreakdown as exc:
        # breakdown at level n means H_n(f) = 0, and all smaller minors are nonzero
        H = hankel_sequence(f, exc.n)
        assert H[exc.n] == 0 and all(H[:exc.n])
        return
    assert jfrac_to_series(J, 2 * d) == f
    assert hankel_from_jfrac(J, d) == hankel_sequence(f, d)


@given(st.lists(rational, min_size=8, max_size=8), st.lists(nonzero_rational, min_size=9, max_size=9))
def test_roundtrip_b(us, vs):
    J = JFraction.of(us, vs)
    f = jfrac_to_series(J, 16)
    K = stieltjes_expand(f, 8)
    assert K.us(8) == J.us(8) and K.vs(9) == J.vs(9)


@given(st.lists(rational, min_size=7, max_size=7), st.lists(nonzero_rational, min_size=8, max_size=8))
def test_uv_from_hankel_inverts(us, vs):
    f = jfrac_to_series(JFraction.of(us, vs), 14)
    H = hankel_sequence(f, 8)
    H1 = hankel_sequence(f, 7, 1)
    assume(all(H1[:7]) and all(H))
    u2, v2 = uv_from_hankel(H, H1)
    J = stieltjes_expand(f, len(u2))
    assert u2 == J.us(len(u2)) and v2 == J.vs(len(v2))


@given(
    st.sampled_from([2, 3, 5]),
    st.lists(st.integers(-20, 20), min_size=10, max_size=10),
    st.lists(st.integers(-5, 5), min_size=10, max_size=10),
)
def test_congruent_v_give_congruent_hankel(p, v, noise):
    w = [a + p * b for a, b in zip(v, noise)]
    H = hankel_from_jfrac(JFraction.of([], v), 10)
    K = hankel_from_jfrac(JFraction.of([], w), 10)
    assert all((a - b) % p == 0 for a, b in zip(H, K))


@given(st.lists(nonzero_rational, min_size=12, max_size=12), st.integers(0, 5), st.integers(0, 5))
def test_chop_composes(vs, a, b):
    J = JFraction.of([0] * 11, vs)
    assert chop(chop(J, a), b).vs(12 - a - b) == chop(J, a + b).vs(12 - a - b)


@given(st.lists(st.integers(-3, 3), min_size=0, max_size=4), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_star_notation_roundtrip(pre, per):
    s = EPSeq(tuple(pre), tuple(per))
    assert parse_star(render(s)) == s
    seen = s.prefix(len(pre) + 4 * len(per))
    d = detect_periodicity(seen)
    assert d is not None and d.prefix(len(seen)) == seen
