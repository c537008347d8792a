"""Truncated formal power series with exact coefficients.

Two coefficient rings are supported: the rationals (coefficients are
``int`` or reduced ``Fraction``; integral values are always stored as
``int``) and residue rings Z/p^e (coefficients are ``int`` in ``[0, m)``).

A :class:`Series` knows how many of its coefficients are trustworthy.  Its
``order`` is the index of the last valid coefficient and every operation
propagates that bound; asking for anything beyond it raises
:class:`~hankelcalc.errors.TruncationError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from sympy import factorint

from .errors import (
    CoprimalityError,
    NotInvertibleError,
    ParameterError,
    RingMismatchError,
    SqrtError,
    TruncationError,
)

Coeff = Union[int, Fraction]


def prime_power(m: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``m == p**e``; raise if ``m`` is not a prime power."""
    if not isinstance(m, int) or m < 2:
        raise ParameterError(f"modulus must be an integer >= 2, got {m!r}")
    factors = factorint(m)
    if len(factors) != 1:
        raise ParameterError(f"modulus {m} is not a prime power")
    ((p, e),) = factors.items()
    return int(p), int(e)


def qnorm(v: Coeff) -> Coeff:
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


def qdiv(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int:
        return qnorm(Fraction(a, b))
    return qnorm(a / b)


def to_rational(value) -> Coeff:
    """Parse ints, Fractions and ``"p/q"`` strings into a normalized rational."""
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return qnorm(value)
    if isinstance(value, str):
        return qnorm(Fraction(value.strip()))
    raise TypeError(f"not an exact rational: {value!r}")


def format_coeff(c: Coeff) -> str:
    return str(qnorm(c)) if isinstance(c, Fraction) else str(c)


@dataclass(frozen=True)
class Ring:
    """The rationals (``modulus is None``) or Z/m with m a prime power."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            prime_power(self.modulus)

    @classmethod
    def residues(cls, m: int) -> "Ring":
        return cls(m)

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    @cached_property
    def _pe(self):
        return prime_power(self.modulus) if self.modulus else (None, None)

    @property
    def prime(self) -> int | None:
        return self._pe[0]

    @property
    def exponent(self) -> int | None:
        return self._pe[1]

    def __str__(self):
        return "Q" if self.modulus is None else f"Z/{self.modulus}"

    def __repr__(self):
        return f"Ring({self})"

    @classmethod
    def parse(cls, text: str) -> "Ring":
        text = text.strip()
        if text in ("Q", "QQ"):
            return QQ
        if text.startswith("Z/"):
            return cls(int(text[2:]))
        raise ParameterError(f"unknown ring {text!r}")

    def coerce(self, value, index=None) -> Coeff:
        """Map an exact rational (or residue) into this ring."""
        q = to_rational(value)
        if self.modulus is None:
            return q
        m = self.modulus
        if type(q) is int:
            return q % m
        num, den = q.numerator, q.denominator
        if den % self.prime == 0:
            where = "" if index is None else f" at index {index}"
            raise CoprimalityError(
                f"cannot reduce {q} modulo {m}: denominator divisible by {self.prime}{where}",
                index,
            )
        return num * pow(den, -1, m) % m

    def is_unit(self, c: Coeff) -> bool:
        if self.modulus is None:
            return c != 0
        return c % self.prime != 0

    def inverse(self, c: Coeff) -> Coeff:
        if not self.is_unit(c):
            raise NotInvertibleError(f"{c} is not invertible in {self}")
        if self.modulus is None:
            return qdiv(1, c)
        return pow(c, -1, self.modulus)

    def add(self, a, b):
        return (a + b) % self.modulus if self.modulus else qnorm(a + b)

    def sub(self, a, b):
        return (a - b) % self.modulus if self.modulus else qnorm(a - b)

    def mul(self, a, b):
        return a * b % self.modulus if self.modulus else qnorm(a * b)

    def div(self, a, b):
        if self.modulus is None:
            if b == 0:
                raise NotInvertibleError("division by zero")
            return qdiv(a, b)
        return a * self.inverse(b) % self.modulus

    def neg(self, a):
        return -a % self.modulus if self.modulus else -a


QQ = Ring()


def _normalize(values: list, ring: Ring) -> tuple:
    m = ring.modulus
    if m is None:
        return tuple(qnorm(v) for v in values)
    return tuple(v % m for v in values)


def _mul_coeffs(a: Sequence, b: Sequence, n: int, ring: Ring) -> tuple:
    """Cauchy product of ``a`` and ``b`` truncated to indices ``0..n``."""
    if sum(1 for v in a if v) > sum(1 for v in b if v):
        a, b = b, a
    out = [0] * (n + 1)
    b = list(b[: n + 1])
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        seg = b[: n + 1 - i]
        out[i:i + len(seg)] = [o + ai * bj for o, bj in zip(out[i:i + len(seg)], seg)]
    return _normalize(out, ring)


class Series:
    """An immutable truncated power series ``a_0 + a_1 x + ... + a_N x^N + O(x^{N+1})``."""

    __slots__ = ("ring", "_c")

    def __init__(self, coeffs: Iterable, ring: Ring = QQ):
        cs = tuple(ring.coerce(c, i) for i, c in enumerate(coeffs))
        if not cs:
            raise ParameterError("a series needs at least one coefficient")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_c", cs)

    @classmethod
    def _raw(cls, coeffs: tuple, ring: Ring) -> "Series":
        s = object.__new__(cls)
        object.__setattr__(s, "ring", ring)
        object.__setattr__(s, "_c", coeffs)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # construction helpers

    @classmethod
    def constant(cls, c, order: int, ring: Ring = QQ) -> "Series":
        return cls([c] + [0] * order, ring)

    @classmethod
    def x(cls, order: int, ring: Ring = QQ) -> "Series":
        return cls.monomial(1, order, ring)

    @classmethod
    def monomial(cls, k: int, order: int, ring: Ring = QQ, c=1) -> "Series":
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, ring)

    @classmethod
    def polynomial(cls, coeffs: Sequence, order: int, ring: Ring = QQ) -> "Series":
        """A polynomial is exact to any order; pad (or cut) it to ``order``."""
        cs = list(coeffs[: order + 1]) + [0] * max(0, order + 1 - len(coeffs))
        return cls(cs, ring)

    # access

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k):
        if isinstance(k, slice):
            stop = k.stop if k.stop is not None else len(self._c)
            if stop > len(self._c):
                raise TruncationError(
                    f"coefficient {stop - 1} requested beyond order {self.order}", stop - 1
                )
            return self._c[k]
        if k < 0:
            raise IndexError("negative coefficient index")
        if k > self.order:
            raise TruncationError(f"coefficient {k} requested beyond order {self.order}", k)
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self._c == other._c

    def __hash__(self):
        return hash((self.ring, self._c))

    def __repr__(self):
        head = ", ".join(format_coeff(c) for c in self._c[:12])
        more = ", ..." if len(self._c) > 12 else ""
        return f"Series([{head}{more}], ring={self.ring}, order={self.order})"

    def truncate(self, n: int) -> "Series":
        if n > self.order:
            raise TruncationError(f"cannot truncate order {self.order} series to {n}", n)
        return Series._raw(self._c[: n + 1], self.ring)

    def agrees(self, other: "Series", n: int | None = None) -> bool:
        """Coefficientwise equality up to ``n`` (default: the common order)."""
        n = min(self.order, other.order) if n is None else n
        return self[: n + 1] == other[: n + 1]

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def shift(self, k: int) -> "Series":
        """Drop the first ``k`` coefficients, i.e. ``(f - a_0 - ... ) / x^k``."""
        if k > self.order:
            raise TruncationError(f"cannot shift order {self.order} series by {k}", k)
        return Series._raw(self._c[k:], self.ring)

    def mul_x(self, k: int) -> "Series":
        """Multiply by ``x^k``; the valid order grows by ``k``."""
        return Series._raw((0,) * k + self._c, self.ring)

    # arithmetic

    def _lift_operand(self, other):
        if isinstance(other, Series):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return None

    def __add__(self, other):
        g = self._lift_operand(other)
        if g is None:
            cs = list(self._c)
            cs[0] = self.ring.add(cs[0], self.ring.coerce(other))
            return Series._raw(tuple(cs), self.ring)
        n = min(self.order, g.order)
        return Series._raw(_normalize([a + b for a, b in zip(self._c[: n + 1], g._c)], self.ring), self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(tuple(self.ring.neg(c) for c in self._c), self.ring)

    def __sub__(self, other):
        g = self._lift_operand(other)
        if g is None:
            return self + self.ring.neg(self.ring.coerce(other))
        n = min(self.order, g.order)
        return Series._raw(_normalize([a - b for a, b in zip(self._c[: n + 1], g._c)], self.ring), self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._lift_operand(other)
        if g is None:
            c = self.ring.coerce(other)
            return Series._raw(_normalize([c * a for a in self._c], self.ring), self.ring)
        n = min(self.order, g.order)
        return Series._raw(_mul_coeffs(self._c, g._c, n, self.ring), self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = self._lift_operand(other)
        if g is None:
            return self * self.ring.inverse(self.ring.coerce(other))
        return series_div(self, g)

    def __rtruediv__(self, other):
        num = Series.constant(other, self.order, self.ring)
        return series_div(num, self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ParameterError("series powers must be integers")
        if k < 0:
            return (1 / self) ** (-k)
        result = Series.constant(1, self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self) -> "Series":
        return series_sqrt(self)

    def subs_power(self, m: int, order: int | None = None) -> "Series":
        return subst_power(self, m, order)

    def reduce(self, m) -> "Series":
        """Coefficientwise reduction of a rational series into Z/m."""
        ring = m if isinstance(m, Ring) else Ring(int(m))
        if not self.ring.is_rational:
            if ring.modulus is None or self.ring.modulus % ring.modulus:
                raise RingMismatchError(f"cannot reduce from {self.ring} to {ring}")
            return Series._raw(tuple(c % ring.modulus for c in self._c), ring)
        return Series._raw(tuple(ring.coerce(c, i) for i, c in enumerate(self._c)), ring)

    def lift(self) -> "Series":
        """Residues as integer representatives in ``[0, m)``, over Q."""
        return Series._raw(self._c, QQ)

    def is_p_integral(self, p: int) -> bool:
        return all(type(c) is int or c.denominator % p for c in self._c)

    # text exchange format

    def to_text(self) -> str:
        lines = [f"# ring={self.ring} order={self.order}"]
        lines.extend(format_coeff(c) for c in self._c)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Series":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("#"):
            raise ParameterError("missing '# ring=... order=...' header")
        fields = dict(tok.split("=", 1) for tok in lines[0][1:].split() if "=" in tok)
        ring = Ring.parse(fields.get("ring", "Q"))
        cs = lines[1:]
        if "order" in fields and int(fields["order"]) != len(cs) - 1:
            raise ParameterError(
                f"header says order={fields['order']} but {len(cs)} coefficients follow"
            )
        return cls([Fraction(c) for c in cs], ring)


def series_arith(f: Series, g: Series, op: str) -> Series:
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ParameterError(f"unknown series operation {op!r}")


def series_div(f: Series, g: Series) -> Series:
    """``h`` with ``h * g == f``.

    A common power of ``x`` is cancelled first: if ``g`` starts with ``v``
    zero coefficients then so must ``f``, and the result has order
    ``min(order f, order g) - v``.
    """
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")
    ring = g.ring
    v = 0
    if g[0] == 0:
        v = g.valuation()
        if v is None:
            raise NotInvertibleError("division by a series that vanishes to its order")
        lead = f._c[:v]
        if len(lead) < v or any(lead):
            raise NotInvertibleError(
                f"division by a series of valuation {v} whose numerator does not vanish to order {v - 1}"
            )
        f, g = f.shift(v), g.shift(v)
    if not ring.is_unit(g[0]):
        raise NotInvertibleError(f"constant term {g[0]} is not invertible in {ring}")
    n = min(f.order, g.order)
    inv0 = ring.inverse(g[0])
    gs = [(i, gi) for i, gi in enumerate(g._c[1 : n + 1], start=1) if gi]
    fc = f._c
    h = []
    m = ring.modulus
    for k in range(n + 1):
        s = fc[k]
        for i, gi in gs:
            if i > k:
                break
            s -= gi * h[k - i]
        if m is None:
            h.append(s if inv0 == 1 else qnorm(s * inv0))
        else:
            h.append(s * inv0 % m)
    return Series._raw(_normalize(h, ring) if m is None else tuple(h), ring)


def series_sqrt(f: Series) -> Series:
    """The square root with constant term 1 of a series with constant term 1."""
    ring = f.ring
    if f[0] != 1:
        raise SqrtError(f"square root needs constant term 1, got {format_coeff(f[0])}")
    if ring.modulus is not None and ring.prime == 2:
        raise SqrtError("square roots are not taken in Z/2^e; compute over Q and reduce")
    n = f.order
    m = ring.modulus
    half = Fraction(1, 2) if m is None else pow(2, -1, m)
    fc = f._c
    g = [1]
    for k in range(1, n + 1):
        s = 0
        for i in range(1, (k + 1) // 2):
            s += g[i] * g[k - i]
        s *= 2
        if k % 2 == 0:
            s += g[k // 2] * g[k // 2]
        r = fc[k] - s
        if m is None:
            g.append(qnorm(r * half) if r else 0)
        else:
            g.append(r * half % m)
    return Series._raw(tuple(g), ring)


def subst_power(f: Series, m: int, order: int | None = None) -> Series:
    """``f(x^m)``; valid to order ``m*order(f) + m - 1`` unless capped lower."""
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"substitution exponent must be >= 1, got {m!r}")
    top = m * f.order + m - 1
    if order is None:
        order = top
    elif order > top:
        raise TruncationError(f"f(x^{m}) is only valid to order {top}", order)
    cs = [0] * (order + 1)
    for k, c in enumerate(f._c):
        if m * k > order:
            break
        cs[m * k] = c
    return Series._raw(tuple(cs), f.ring)


def frobenius_check(f: Series, p: int, n: int) -> bool:
    """Whether ``f(x)^p == f(x^p)`` modulo ``p`` through ``x^n``."""
    if not f.is_p_integral(p):
        bad = next(i for i, c in enumerate(f.coeffs) if type(c) is not int and c.denominator % p == 0)
        raise CoprimalityError(f"coefficient {bad} of f is not {p}-integral", bad)
    fr = f.reduce(p) if f.ring.is_rational else f.reduce(p)
    lhs = (fr.truncate(n)) ** p
    rhs = subst_power(fr, p, n)
    return lhs.agrees(rhs, n)
