"""Acceptance criteria 1-13, one test per criterion.

The conftest prints a "criterion N: PASS/FAIL" line for each in the
terminal summary.
"""

import random
from fractions import Fraction

import pytest

from hankelcalc.algebraic import BivarPoly, guess_algebraic, verify_equation
from hankelcalc.errors import StieltjesBreakdown
from hankelcalc.expr import expand
from hankelcalc.generators import catalan
from hankelcalc.hankel import hankel_det, hankel_det_naive, hankel_sequence
from hankelcalc.jfraction import JFraction, hankel_from_jfrac, jfrac_to_series, stieltjes_expand, uv_from_hankel
from hankelcalc.modular import first_incongruence, hankel_transfer_check, series_congruent
from hankelcalc.series import Ring, Series, subst_power
from hankelcalc.verify import run_check
from hankelcalc.verify.families import zfamily_series

from test_algebraic import F2, F3, F4, f_chopped, generic

acceptance = pytest.mark.acceptance


def _passes(check_id, order=None, **params):
    rep = run_check(check_id, order, **params)
    assert rep.status == "pass", (check_id, rep.witness)
    return rep


@acceptance(1, "Hankel tables of P2 (12 values) and S2 (15 values)")
def test_criterion_1_tables():
    assert hankel_sequence(expand("P2", 20), 11) == [1, 1, -2, 4, 8, -16, -32, -64, 128, -256, -1536, -3072]
    assert hankel_sequence(expand("S2", 26), 14) == [1, 1, -3, -1, 21, 1, -3, -9, 945, 9, -3, -1, 21, 9, -243]


@acceptance(2, "H_n(P2) != 0 and H_n(P2)/2^(n-1) odd for n <= 64")
def test_criterion_2_p2_nonvanishing():
    rep = _passes("T1.1", 64)
    assert rep.witness["checked_n"] == 64


@acceptance(3, "H_n(S2) == 1 mod 2 for n <= 128 in Z/2")
def test_criterion_3_s2_mod2():
    _passes("T1.2", 128)
    H = hankel_sequence(expand("S2", 256, Ring(2)), 128)
    assert all(h == 1 for h in H)


@acceptance(4, "H_n(P3) == 2^(n-1) mod 3 for n <= 128, and H_2(P3) = -1 by cofactors")
def test_criterion_4_p3_mod3():
    rep = _passes("T1.3", 128)
    H = hankel_sequence(expand("P3", 256, Ring(3)), 128)
    assert all(H[n] == pow(2, n - 1, 3) for n in range(1, 129))
    assert hankel_det_naive(expand("P3", 2), 2) == -1
    assert rep.witness["H_2_exact"] == -1


@acceptance(5, "both congruences to order 512, the mod-4 identity to 1024, Catalan parity to 1024")
def test_criterion_5_two_moduli():
    _passes("T1.4", 512)
    _passes("L4.1", 1024)
    C = catalan(1024)
    odd = {2**k - 1 for k in range(12)}
    assert all((C[n] % 2 == 1) == (n in odd) for n in range(1025))


def _random_series(rng: random.Random, order: int) -> Series:
    return Series([1] + [rng.randint(-5, 5) for _ in range(order)])


@acceptance(6, "fundamental relation roundtrip on P2, S2 and 20 seeded random series, n <= 20")
def test_criterion_6_fundamental_relation():
    rng = random.Random(6)
    cases = [expand("P2", 40), expand("S2", 40)]
    while len(cases) < 22:
        f = _random_series(rng, 40)
        if all(hankel_sequence(f, 20)):
            cases.append(f)
    for f in cases:
        J = stieltjes_expand(f, 20)
        assert hankel_from_jfrac(J, 20) == hankel_sequence(f, 20)
    # the Hankel-determinant formulas for u, v agree wherever their denominators are nonzero
    checked = 0
    for f in cases:
        H, H1 = hankel_sequence(f, 12), hankel_sequence(f, 11, 1)
        m = next((n for n in range(12) if H1[n] == 0), 12)
        if m < 2:
            continue
        us, vs = uv_from_hankel(H[: m + 1], H1[:m])
        J = stieltjes_expand(f, len(us))
        assert us == J.us(len(us)) and vs == J.vs(len(vs))
        checked += 1
    assert checked >= 20


@acceptance(7, "P2.x checks: parities, mod-3 patterns, nonvanishing and the mod-9 step")
def test_criterion_7_p2_checks():
    _passes("P2.3", 64)
    _passes("P2.4", 64)
    _passes("P2.6", 128)
    _passes("T2.7", 128)
    rep = _passes("P2.5", 48, identity_n=20, mod9_order=256)
    assert rep.witness["identity_n"] == 20 and rep.witness["mod9_order"] == 256


@acceptance(8, "P3.x checks: v pattern through v_41, mod-2 patterns for n <= 128, exact signed pattern n <= 48")
def test_criterion_8_p3_checks():
    f = expand("(1-sqrt(1-4*x^4/(1-x^2)))/(2*x^4)", 84)
    J = stieltjes_expand(f, 42)
    assert J.us(42) == [0] * 42
    want = [1]
    for k in range(11):
        want += [k + 1, Fraction(1, k + 1), Fraction(-1, k + 1), -(k + 1)]
    assert J.vs(42) == want[:42]
    _passes("P3.1", 48)
    _passes("P3.2", 48, mod_order=128)
    _passes("P3.6", 128, exact_n=48)
    _passes("P3.7", 128)
    _passes("P3.8", 128, exact_n=48)


@acceptance(9, "guessing recovers f_2, f_3, f_4 and the z-family at z = 5, 6 with margin 20")
def test_criterion_9_guessing():
    for k, text in ((2, F2), (3, F3), (4, F4)):
        assert guess_algebraic(f_chopped(k), 6, 2) == BivarPoly.parse(text, normalize=True)
    for z in (5, 6):
        f = zfamily_series(z, 80)
        P = guess_algebraic(f, 6, 2, margin=20)
        assert P == generic(z) and verify_equation(P, f, 80)


@acceptance(10, "parameterized families: residuals vanish to order 200, H(g) = alpha pattern for n <= 60")
def test_criterion_10_families():
    for cid in ("T3.3", "T3.4", "T3.5"):
        rep = _passes(cid, 200, hankel_n=60)
        assert rep.order == 200


@acceptance(11, "remark pair: congruent Hankel sequences mod 2 for n <= 32, series differ mod 2")
def test_criterion_11_remark_pair():
    f = expand("(1-sqrt(1-4*x^2/(1-x)))/(2*x^2)", 64)
    fhat = expand("(1-sqrt(1-4*x/(1-x)))/(2*x)", 64)
    assert hankel_transfer_check(f, fhat, 2, 32)
    k = first_incongruence(f, fhat, 2, 64)
    assert k == 1
    print(f"remark pair: first coefficient differing mod 2 at index {k}")


@acceptance(12, "some H_n(prod(1 - x^(4^k))) = 0 with n <= 20")
def test_criterion_12_remark_m4():
    rep = _passes("REMARK-M4", 20)
    n = rep.witness["first_zero_n"]
    assert 1 <= n <= 20
    assert hankel_det(expand("PM(4,-1)", 2 * n), n) == 0
    print(f"first vanishing H_n for m = 4: n = {n}")


CASES = 200


def _rat(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 12))


@acceptance(13, "module property suites on 200 seeded random cases each")
def test_criterion_13_properties():
    rng = random.Random(13)
    counts = dict.fromkeys(["ring", "oracle", "roundtrip_a", "roundtrip_b", "transfer", "frobenius"], 0)
    for _ in range(CASES):
        # ring axioms over Q and Z/9
        f, g, h = (Series([_rat(rng) for _ in range(9)]) for _ in range(3))
        assert (f + g) * h == f * h + g * h and (f * g) * h == f * (g * h)
        a, b, c = (Series([rng.randrange(9) for _ in range(9)], Ring(9)) for _ in range(3))
        assert (a + b) * c == a * c + b * c and (a * b) * c == a * (b * c)
        u = Series([1] + [_rat(rng) for _ in range(8)])
        assert u * (f / u) == f and u.sqrt() * u.sqrt() == u
        counts["ring"] += 1
        # oracle equivalence for n <= 7
        r = Series([rng.randint(-9, 9) for _ in range(15)])
        n = rng.randint(0, 7)
        assert hankel_det(r, n) == hankel_det_naive(r, n)
        counts["oracle"] += 1
        # roundtrip A (with the breakdown criterion) and the fundamental relation
        s = _random_series(rng, 16)
        try:
            J = stieltjes_expand(s, 8)
        except StieltjesBreakdown as exc:
            assert hankel_sequence(s, exc.n)[exc.n] == 0
        else:
            assert jfrac_to_series(J, 16) == s and hankel_from_jfrac(J, 8) == hankel_sequence(s, 8)
        counts["roundtrip_a"] += 1
        # roundtrip B
        us = [_rat(rng) for _ in range(6)]
        vs = [q if q else Fraction(1) for q in (_rat(rng) for _ in range(7))]
        K = stieltjes_expand(jfrac_to_series(JFraction.of(us, vs), 12), 6)
        assert K.us(6) == us and K.vs(7) == vs
        counts["roundtrip_b"] += 1
        # congruence transfer: f == g mod m implies H(f) == H(g) mod m
        m = rng.choice([2, 3, 4, 9])
        f0 = Series([rng.randint(-9, 9) for _ in range(15)])
        g0 = f0 + Series([m * rng.randint(-3, 3) for _ in range(15)])
        assert series_congruent(f0, g0, m, 14) and hankel_transfer_check(f0, g0, m, 8)
        counts["transfer"] += 1
        # f(x)^p == f(x^p) mod p
        p = rng.choice([2, 3, 5])
        assert series_congruent(f0**p, subst_power(f0, p, 14), p, 14)
        counts["frobenius"] += 1
    assert all(v >= 200 for v in counts.values()), counts
