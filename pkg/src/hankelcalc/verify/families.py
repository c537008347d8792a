"""Closed-form series of the parameterized families, evaluated at rational sample points.

Each function returns an exact truncated series over Q for fixed rational
parameters; the symbolic families are never manipulated as such.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebraic import BivarPoly
from ..generators import alpha_seq
from ..jfraction import JFraction, jfrac_to_series
from ..series import QQ, Series, qnorm


def _x(N: int) -> Series:
    return Series.x(N, QQ)


def _one(N: int) -> Series:
    return Series.constant(1, N, QQ)


def _finish(s: Series, N: int) -> Series:
    if s.order < N:
        raise ValueError(f"closed form reached order {s.order} < {N}")
    return s.truncate(N)


def zfamily_series(z, N: int, pad: int = 6) -> Series:
    """``(1 - (2z-1)x^2 - sqrt((1-x^2)(1-x^2-4x^4))) / (2x^2((1-z) + (1-z+z^2)x^2 - x^4))``."""
    z = Fraction(z)
    W = N + pad
    X = _x(W)
    X2 = X * X
    root = ((_one(W) - X2) * (_one(W) - X2 - X2 * X2 * 4)).sqrt()
    num = _one(W) - X2 * (2 * z - 1) - root
    den = (_one(W) * (1 - z) + X2 * (1 - z + z * z) - X2 * X2) * X2 * 2
    return _finish(num / den, N)


def zfamily_jfrac(z, depth: int) -> JFraction:
    """``u = (0)^*``, ``v_{4k+1..4k+4} = (z+k, 1/(z+k), -1/(z+k), -(z+k))``."""
    z = Fraction(z)
    vs = [1]
    k = 0
    while len(vs) < depth + 1:
        w = z + k
        vs.extend([w, 1 / w, -1 / w, -w])
        k += 1
    return JFraction.of([0] * depth, vs[: depth + 1])


def yz_series(y, z, N: int, pad: int = 6) -> Series:
    """``(1 - sqrt(1 - 4x^4/(1 - yx - zx^2))) / (2x^4)``."""
    W = N + pad
    X = _x(W)
    q = _one(W) - X * Fraction(y) - X * X * Fraction(z)
    root = (_one(W) - (X**4 * 4) / q).sqrt()
    return _finish((_one(W) - root) / (X**4 * 2), N)


def yzt_series(y, z, t, N: int, pad: int = 8) -> Series:
    """The two-parameter deformation whose J-fraction has ``v_{4k+1} = (t+k+1) z``."""
    y, z, t = Fraction(y), Fraction(z), Fraction(t)
    W = N + pad
    X = _x(W)
    X2 = X * X
    inner = X * y - 1 + X2 * z
    root = ((X2 * X2 * 4 + inner) * inner).sqrt()
    num = -(X2 * (2 * z * t + z) + X * y - 1 + root)
    den = (
        -(X2 * X2 * z) - X2 * X * y + X2 + X2 * (z * z * t) + X2 * (z * z * t * t) + X * (y * z * t) - z * t
    ) * X2 * 2
    return _finish(num / den, N)


def yzt_jfrac(y, z, t, depth: int) -> JFraction:
    y, z, t = Fraction(y), Fraction(z), Fraction(t)
    us = [(-y if k % 4 == 0 else 0) for k in range(depth)]
    vs = [1]
    k = 1
    while len(vs) < depth + 1:
        w = (t + k) * z
        vs.extend([w, 1 / w, -1 / w, -w])
        k += 1
    return JFraction.of(us, vs[: depth + 1])


def alpha_g_series(y, z, s, N: int, pad: int = 6) -> Series:
    """The series ``g(x; y, z, s)`` whose J-fraction is built from ``(1+zx)/(1+yx+x^2)``."""
    y, z, s = Fraction(y), Fraction(z), Fraction(s)
    W = N + pad
    X = _x(W)
    X2 = X * X
    A = X * s - X2 * y - 1
    root = (A * A - X2 * X2 * 4).sqrt()
    num = -(X2 * (2 * z)) - A - root
    den = (X2 + X2 * (z * z) + A * z) * X2 * 2
    return _finish(num / den, N)


def alpha_jfrac(alpha: list, n: int, s, depth: int) -> JFraction:
    """``u = (-s, 0)^*``, ``v_{2k+1} = alpha_{n+k+1}/alpha_{n+k}``, ``v_{2k+2}`` its inverse."""
    s = Fraction(s)
    us = [(-s if k % 2 == 0 else 0) for k in range(depth)]
    vs = [1]
    for k in range(depth):
        j = n + k // 2
        a, b = Fraction(alpha[j]), Fraction(alpha[j + 1])
        vs.append(qnorm(b / a) if k % 2 == 0 else qnorm(a / b))
    return JFraction.of(us, vs)


def alpha_series(alpha: list, n: int, s, N: int) -> Series:
    depth = (N + 1) // 2 + 1
    return jfrac_to_series(alpha_jfrac(alpha, n, s, depth), N)


def _gf(num: list, den: list, n: int) -> list:
    return list((Series.polynomial(num, n, QQ) / Series.polynomial(den, n, QQ)).coeffs)


def level_coefficients(y, z, n: int) -> dict:
    """``a_k, b_k, d_k, alpha_k`` for ``k <= n`` from their rational generating functions."""
    y, z = Fraction(y), Fraction(z)
    w = y * y - 2
    den = [1, -w - 1, w + 1, -1]  # (1-x)(1-(y^2-2)x+x^2)
    return {
        "a": _gf([(1 - y * z + z * z) * c for c in (1, -w, 1)], den, n),
        "b": _gf([-z, y * (y * z - 1), -z * (y * z - 1)], den, n),
        "d": _gf([-1, -(1 + z * z - 2 * y * z), -z * z], den, n),
        "alpha": alpha_seq(y, z, n),
    }


def closed_coefficients(t, z, K) -> tuple:
    """``(a(K), b(K), d(K), alpha(K))`` with ``gamma_1 = (t-1)(t+1)``, ``gamma_2 = zt-1``, ``gamma_3 = t-z``."""
    t, z, K = Fraction(t), Fraction(z), Fraction(K)
    g1, g2, g3 = (t - 1) * (t + 1), z * t - 1, t - z
    a = z * z - (t + 1 / t) * z + 1
    b = -(t * t + 1) * g2 * g3 / g1**2 - t * g2**2 / (K * K * g1**2) - K * K * g3**2 * t / g1**2
    d = -2 * t * g2 * g3 / g1**2 - g2**2 / (K * K * g1**2) - K * K * t * t * g3**2 / g1**2
    al = -g2 / ((1 - t * t) * K) - K * g3 * t / (1 - t * t)
    return tuple(qnorm(v) for v in (a, b, d, al))


def level_equation(a, b, d, y, s) -> BivarPoly:
    """``(a x^4 - s b x^3 + b x^2) f^2 + ((y d - 2b) x^2 - s d x + d) f - d``."""
    y, s = Fraction(y), Fraction(s)
    return BivarPoly.from_dict(
        {
            (4, 2): a,
            (3, 2): -s * b,
            (2, 2): b,
            (2, 1): y * d - 2 * b,
            (1, 1): -s * d,
            (0, 1): d,
            (0, 0): -d,
        },
        normalize=False,
    )


def closed_root_series(t, z, s, K, N: int, pad: int = 4) -> Series:
    """The closed-form root of the K-equation built from ``Q_0 .. Q_3``.

    ``sqrt(Q_0)`` is taken as ``t * sqrt(Q_0 / t^2)``, the branch with
    constant term ``t`` (the other branch leaves a pole at ``x = 0``).
    """
    t, z, s, K = Fraction(t), Fraction(z), Fraction(s), Fraction(K)
    W = N + pad
    X = _x(W)
    one = _one(W)
    g1 = (t - 1) * (t + 1)
    Q0 = (X * (s * t) - t - X * X * (1 + t) ** 2) * (X * (s * t) - t - X * X * (1 - t) ** 2)
    Q1 = -1 + z * t + K * K * t * t - K * K * z * t
    Q2 = K * K * t * t - z * t - K * K * z * t + 1
    Q3 = -K * K * z + z * t * t - t + K * K * t
    root = (Q0 * (1 / (t * t))).sqrt() * t
    num = ((X * s - 1) * (t * Q1) - X * X * (g1 * Q2) + root * Q1) * Q1
    den = ((one - X * s) * (t * Q3 * Q1) + X * X * (K * K * g1**2 * (z * t - 1) * (t - z))) * X * X * 2
    return _finish(num / den, N)


def one_level(f_next: Series, s, r) -> Series:
    """``1 / (1 - s x - r x^2 / (1 - x^2 f_next / r))``."""
    N = f_next.order
    X = _x(N)
    one = _one(N)
    inner = one - (X * X * f_next) * qnorm(1 / Fraction(r))
    return one / (one - X * Fraction(s) - (X * X * Fraction(r)) / inner)
