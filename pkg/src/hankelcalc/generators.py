"""Named generating functions.

Each generator returns its first ``n + 1`` coefficients over Q.  Infinite
products and sums stop at the first factor or term whose lowest exponent
exceeds ``n``, so the prefixes are exact.
"""

from __future__ import annotations

from typing import Callable

from .errors import ParameterError
from .series import QQ, Ring, Series, qnorm, to_rational


def _sparse_product(factors: list[dict[int, int]], n: int) -> list[int]:
    """Multiply sparse integer polynomials ``{exponent: coeff}`` modulo ``x^{n+1}``."""
    acc = [0] * (n + 1)
    acc[0] = 1
    for fac in factors:
        new = [0] * (n + 1)
        for e, c in fac.items():
            if e > n or not c:
                continue
            for i in range(n + 1 - e):
                if acc[i]:
                    new[i + e] += c * acc[i]
        acc = new
    return acc


def _powers_upto(base: int, n: int, start: int = 0):
    q = base ** start
    while q <= n:
        yield q
        q *= base


def pm_product(m: int, sign: int, n: int) -> list[int]:
    """Coefficients of ``prod_{k>=0} (1 + sign * x^{m^k})``."""
    if m < 2:
        raise ParameterError(f"PM base must be >= 2, got {m}")
    if sign not in (1, -1):
        raise ParameterError(f"PM sign must be +1 or -1, got {sign}")
    return _sparse_product([{0: 1, q: sign} for q in _powers_upto(m, n)], n)


def thue_morse(n: int) -> list[int]:
    """``P_2 = prod (1 - x^{2^k})``: ``(-1)^{popcount(k)}``."""
    return [-1 if bin(k).count("1") % 2 else 1 for k in range(n + 1)]


def p3(n: int) -> list[int]:
    return pm_product(3, -1, n)


def s2(n: int) -> list[int]:
    """``(1/x) sum_{k>=0} x^{2^k} / (1 - x^{2^k})``: coefficient ``j`` is ``v_2(j+1) + 1``.

    The sign inside the denominator is irrelevant modulo 2; this form is
    the one whose coefficients read 1, 2, 1, 3, 1, 2, 1, 4, ...
    """
    out = []
    for j in range(n + 1):
        e = j + 1
        out.append((e & -e).bit_length())
    return out


def tm27(n: int) -> list[int]:
    """``prod_{k>=0} (1 - x^{3^k} - x^{2*3^k})``."""
    return _sparse_product([{0: 1, q: -1, 2 * q: -1} for q in _powers_upto(3, n)], n)


def _geometric_sum(n: int, shift: int, terms) -> list[int]:
    """``x^{-shift} * sum_{(k, start, sign)} sum_{j>=start} sign^(j-start) x^{j 2^k}``."""
    out = [0] * (n + 1)
    for k, start, sign in terms:
        q = 2 ** k
        j = start
        while j * q - shift <= n:
            e = j * q - shift
            if e >= 0:
                out[e] += sign ** (j - start)
            j += 1
    return out


def s36(n: int) -> list[int]:
    """``(1/x^4) sum_{k>=1} x^{2^{k+1}} / (1 - x^{2^k})``."""
    ks = range(1, (n + 4).bit_length() + 1)
    return _geometric_sum(n, 4, [(k, 2, 1) for k in ks])


def s37(n: int) -> list[int]:
    """``(1/x^4) sum_{k>=0} x^{2^{k+2}} / (1 + x^{2^k})``."""
    ks = range(0, (n + 4).bit_length() + 1)
    return _geometric_sum(n, 4, [(k, 4, -1) for k in ks])


def s38(n: int) -> list[int]:
    """``(1/x^2) sum_{k>=0} x^{2^{k+1}} / (1 + x^{2^{k+1}})``."""
    ks = range(1, (n + 2).bit_length() + 1)
    return _geometric_sum(n, 2, [(k, 1, -1) for k in ks])


def delta_seq(n: int) -> list[int]:
    eta = thue_morse(n + 1)
    return [(eta[k] - eta[k + 1]) // 2 for k in range(n + 1)]


def gamma_seq(n: int) -> list[int]:
    eta = thue_morse(n + 2)
    return [(eta[k] - eta[k + 2]) // 2 for k in range(n + 1)]


def alpha_seq(y, z, n: int) -> list:
    """Coefficients of ``(1 + z x) / (1 + y x + x^2)``."""
    y, z = to_rational(y), to_rational(z)
    out = []
    for k in range(n + 1):
        num = 1 if k == 0 else (z if k == 1 else 0)
        prev1 = out[k - 1] if k >= 1 else 0
        prev2 = out[k - 2] if k >= 2 else 0
        out.append(qnorm(num - y * prev1 - prev2))
    return out


def catalan(n: int) -> list[int]:
    out = [1]
    for k in range(n):
        out.append(out[-1] * 2 * (2 * k + 1) // (k + 2))
    return out[: n + 1]


def prop25(n: int) -> list[int]:
    """``3 prod_{k>=1} (1 - x^{3^k}) - 2/(1-x)``."""
    prod = _sparse_product([{0: 1, q: -1} for q in _powers_upto(3, n, start=1)], n)
    return [3 * c - 2 for c in prod]


GeneratorFn = Callable[..., list]

#: name -> (number of parameters, coefficient function)
CATALOG: dict[str, tuple[int, GeneratorFn]] = {
    "P2": (0, thue_morse),
    "P3": (0, p3),
    "S2": (0, s2),
    "PM": (2, lambda m, sign, n: pm_product(_int_param(m), _int_param(sign), n)),
    "TM27": (0, tm27),
    "S36": (0, s36),
    "S37": (0, s37),
    "S38": (0, s38),
    "DELTA": (0, delta_seq),
    "GAMMA": (0, gamma_seq),
    "ALPHA": (2, alpha_seq),
    "CATALAN": (0, catalan),
    "PROP25": (0, prop25),
}


def _int_param(v) -> int:
    q = to_rational(v)
    if type(q) is not int:
        raise ParameterError(f"expected an integer parameter, got {q}")
    return q


def generate(name: str, params: tuple, n: int, ring: Ring = QQ) -> Series:
    try:
        arity, fn = CATALOG[name]
    except KeyError:
        raise ParameterError(f"unknown generator {name!r}") from None
    if len(params) != arity:
        raise ParameterError(f"{name} takes {arity} parameter(s), got {len(params)}")
    if n < 0:
        raise ParameterError("order must be >= 0")
    return Series(fn(*params, n), ring)
