"""Reduction of rational series modulo prime powers and congruence checks.

A fraction ``a/b`` reduces modulo ``p^e`` only when ``p`` does not divide
``b``; it then maps to ``a * b^{-1}``.  This is the fractional congruence
``a1/b1 == a2/b2  <=>  a1 b2 == a2 b1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CoprimalityError, TruncationError
from .hankel import hankel_sequence
from .series import Coeff, Ring, Series, prime_power


@dataclass(frozen=True)
class Modulus:
    m: int

    def __post_init__(self):
        prime_power(self.m)

    @property
    def p(self) -> int:
        return prime_power(self.m)[0]

    @property
    def e(self) -> int:
        return prime_power(self.m)[1]

    @property
    def ring(self) -> Ring:
        return Ring(self.m)

    def __int__(self):
        return self.m


def _mod(m) -> Modulus:
    if isinstance(m, Modulus):
        return m
    if isinstance(m, Ring):
        return Modulus(m.modulus)
    return Modulus(int(m))


def reduce_coeff(c: Coeff, m, index=None) -> int:
    return _mod(m).ring.coerce(c, index)


def reduce_series(f: Series, m) -> Series:
    """``f`` coefficientwise in Z/m; a bad denominator reports its index."""
    return f.reduce(_mod(m).ring)


def first_incongruence(f: Series, g: Series, m, N: int) -> int | None:
    """Smallest ``k <= N`` with ``f_k != g_k (mod m)``, or ``None``."""
    mod = _mod(m)
    if f.order < N or g.order < N:
        raise TruncationError(f"congruence to order {N} needs both series to that order", N)
    ring = mod.ring
    for k in range(N + 1):
        a = f[k] if f.ring.is_rational else f[k] % mod.m
        b = g[k] if g.ring.is_rational else g[k] % mod.m
        if ring.coerce(a, k) != ring.coerce(b, k):
            return k
    return None


def series_congruent(f: Series, g: Series, m, N: int) -> bool:
    return first_incongruence(f, g, m, N) is None


def _reduce_all(values, mod: Modulus) -> list[int]:
    return [mod.ring.coerce(v, n) for n, v in enumerate(values)]


def hankel_transfer_check(f: Series, g: Series, m, N: int) -> bool:
    """Whether ``H_n(f) == H_n(g) (mod m)`` for every ``n <= N``.

    Determinants are computed exactly in the rings of ``f`` and ``g`` and
    reduced afterwards.
    """
    mod = _mod(m)
    hf = _reduce_all(hankel_sequence(f, N), mod)
    hg = _reduce_all(hankel_sequence(g, N), mod)
    return hf == hg


def fractions_congruent(a: Coeff, b: Coeff, m) -> bool:
    """``a1/b1 == a2/b2 (mod m)`` by cross multiplication."""
    mod = _mod(m)
    a, b = Fraction(a), Fraction(b)
    for q in (a, b):
        if q.denominator % mod.p == 0:
            raise CoprimalityError(f"{q} has a denominator divisible by {mod.p}")
    return (a.numerator * b.denominator - b.numerator * a.denominator) % mod.m == 0
