"""The chopping method: delete J-fraction levels, guess an algebraic equation
``P(x, f) = 0`` for the tail, and solve quadratic equations back to series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt, lcm

from .errors import NotInvertibleError, ParameterError, SqrtError, TruncationError
from .jfraction import chop
from .series import QQ, Coeff, Series, format_coeff, qnorm, to_rational

__all__ = [
    "BivarPoly",
    "chop",
    "guess_algebraic",
    "verify_equation",
    "solve_quadratic",
    "nullspace",
]


def _mono_key(mono: tuple[int, int]) -> tuple:
    i, j = mono
    return (i + j, j, i)


@dataclass(frozen=True)
class BivarPoly:
    """``sum c_{ij} x^i f^j`` with exact rational coefficients.

    Stored normalized: integer coefficients with content 1 and a positive
    coefficient on the leading monomial (graded by ``i + j``, ties broken
    by the power of ``f``).
    """

    terms: tuple  # ((i, j, c), ...) in decreasing monomial order
    nullity: int = field(default=1, compare=False)

    @classmethod
    def from_dict(cls, coeffs: dict, normalize: bool = True, nullity: int = 1) -> "BivarPoly":
        items = {(int(i), int(j)): to_rational(c) for (i, j), c in coeffs.items()}
        items = {k: c for k, c in items.items() if c != 0}
        if not items:
            raise ParameterError("the zero polynomial is not a valid equation")
        if normalize:
            den = lcm(*(Fraction(c).denominator for c in items.values()))
            ints = {k: int(Fraction(c) * den) for k, c in items.items()}
            g = 0
            for c in ints.values():
                g = gcd(g, c)
            lead = max(ints, key=_mono_key)
            sign = 1 if ints[lead] > 0 else -1
            items = {k: sign * c // g for k, c in ints.items()}
        ordered = sorted(items.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)
        return cls(tuple((i, j, c) for (i, j), c in ordered), nullity)

    def as_dict(self) -> dict:
        return {(i, j): c for i, j, c in self.terms}

    @property
    def dx(self) -> int:
        return max(i for i, _, _ in self.terms)

    @property
    def df(self) -> int:
        return max(j for _, j, _ in self.terms)

    def coefficient_poly(self, j: int) -> list:
        """Coefficients (in x) of ``f^j``."""
        d = self.as_dict()
        return [d.get((i, j), 0) for i in range(self.dx + 1)]

    def normalized(self) -> "BivarPoly":
        return BivarPoly.from_dict(self.as_dict(), nullity=self.nullity)

    def __str__(self):
        return to_text(self)

    @classmethod
    def parse(cls, text: str, normalize: bool = False) -> "BivarPoly":
        return from_text(text, normalize)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("f" if j == 1 else f"f^{j}")
    return "*".join(parts)


def to_text(P: BivarPoly) -> str:
    out = []
    for n, (i, j, c) in enumerate(P.terms):
        mono = _monomial_text(i, j)
        neg = c < 0
        mag = -c if neg else c
        if mono:
            body = mono if mag == 1 else f"{format_coeff(mag)}*{mono}"
        else:
            body = format_coeff(mag)
        if n == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TERM = re.compile(r"([+-])?\s*([^+-]+)")


def from_text(text: str, normalize: bool = False) -> BivarPoly:
    """Parse ``c*x^i*f^j`` sums such as ``x^6*f^2 - 3*x^4*f^2 + f - 1``."""
    s = text.replace(" ", "")
    if not s:
        raise ParameterError("empty polynomial")
    coeffs: dict = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParameterError(f"cannot parse polynomial near {s[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        c: Coeff = sign
        i = j = 0
        for fac in m.group(2).split("*"):
            base, _, exp = fac.partition("^")
            e = int(exp) if exp else 1
            if base == "x":
                i += e
            elif base == "f":
                j += e
            elif re.fullmatch(r"\d+(/\d+)?", base) and not exp:
                # a rational written as p/q arrives split by '/', which the regex keeps
                c = qnorm(c * Fraction(base))
            else:
                raise ParameterError(f"bad factor {fac!r}")
        coeffs[(i, j)] = qnorm(coeffs.get((i, j), 0) + c)
    return BivarPoly.from_dict(coeffs, normalize=normalize)


# linear algebra over Q


def nullspace(rows: list[list], ncols: int) -> list[list]:
    """A basis of ``{v : rows . v = 0}`` by Gauss-Jordan elimination over Q."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                fct = a[i][c]
                a[i] = [x - fct * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][fc]
        basis.append(v)
    return basis


def _rref_last(vectors: list[list]) -> list:
    """The combination of ``vectors`` whose first nonzero entry is as late as possible."""
    a = [v[:] for v in vectors]
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                fct = a[i][c]
                a[i] = [x - fct * y for x, y in zip(a[i], a[r])]
        r += 1
    return a[r - 1]


def _powers(f: Series, df: int) -> list[Series]:
    out = [Series.constant(1, f.order, f.ring)]
    for _ in range(df):
        out.append(out[-1] * f)
    return out


def _try_bounds(powers, N: int, dx: int, df: int, margin: int) -> BivarPoly | None:
    monos = sorted(
        ((i, j) for j in range(df + 1) for i in range(dx + 1)), key=_mono_key, reverse=True
    )
    def row(k):
        return [powers[j][k - i] if k >= i else 0 for i, j in monos]

    solve_rows = [row(k) for k in range(N - margin + 1)]
    basis = nullspace(solve_rows, len(monos))
    if not basis:
        return None
    vec = _rref_last(basis) if len(basis) > 1 else basis[0]
    coeffs = {mono: c for mono, c in zip(monos, vec) if c != 0}
    if all(j == 0 for _, j in coeffs):
        return None
    for k in range(N - margin + 1, N + 1):
        if sum(c * v for c, v in zip(vec, row(k))) != 0:
            return None
    return BivarPoly.from_dict(coeffs, nullity=len(basis))


def guess_algebraic(f: Series, dx: int, df: int, margin: int = 20) -> BivarPoly | None:
    """The smallest ``P(x, f)`` with ``x``-degree ``<= dx`` and ``f``-degree ``<= df``
    that kills ``f`` to its full order.

    Bounds are tried ``f``-degree first, then ``x``-degree; each candidate is
    solved on all but the last ``margin`` coefficients and must also vanish
    on those.  Returns ``None`` when nothing fits.
    """
    if dx < 0 or df < 1 or margin < 0:
        raise ParameterError("need dx >= 0, df >= 1, margin >= 0")
    N = f.order
    need = (dx + 1) * (df + 1) + margin
    if N < need:
        raise TruncationError(
            f"guessing with dx={dx}, df={df}, margin={margin} needs order {need}, series has {N}",
            need,
        )
    if not f.ring.is_rational:
        raise ParameterError("guessing works over Q")
    powers = _powers(f, df)
    for d_f in range(1, df + 1):
        for d_x in range(dx + 1):
            P = _try_bounds(powers, N, d_x, d_f, margin)
            if P is not None:
                return P
    return None


def residual(P: BivarPoly, f: Series, N: int) -> Series:
    """``P(x, f(x))`` to order ``N``."""
    f = f.truncate(N)
    powers = _powers(f, P.df)
    acc = Series.constant(0, N, f.ring)
    for i, j, c in P.terms:
        acc = acc + powers[j].mul_x(i).truncate(N) * c
    return acc


def verify_equation(P: BivarPoly, f: Series, N: int) -> bool:
    if f.order < N:
        raise TruncationError(f"verifying to order {N} needs f to that order", N)
    return residual(P, f, N).is_zero()


def _rational_sqrt(q: Coeff) -> Coeff:
    q = Fraction(q)
    if q <= 0:
        raise SqrtError(f"{q} has no positive rational square root")
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a != q.numerator or b * b != q.denominator:
        raise SqrtError(f"{q} is not a rational square")
    return qnorm(Fraction(a, b))


def _poly(coeffs: list, N: int) -> Series:
    return Series.polynomial(coeffs, N, QQ)


def solve_quadratic(P: BivarPoly, init, N: int | None = None) -> Series:
    """The series root of ``A f^2 + B f + C = 0`` whose first coefficients are ``init``.

    Uses ``f = (-B +- sqrt(B^2 - 4AC)) / (2A)``; both signs are tried and
    exactly one must match ``init``.
    """
    if P.df > 2:
        raise ParameterError("solve_quadratic needs an equation of degree <= 2 in f")
    init = [to_rational(c) for c in init]
    if N is None:
        N = max(len(init) - 1, 0)
    A, B, C = (P.coefficient_poly(j) for j in (2, 1, 0))
    vA = next((i for i, c in enumerate(A) if c), None)
    work = N + (vA or 0) + (next((i for i, c in enumerate(B) if c), 0) if vA is None else 0)
    if vA is None:
        return _truncate_checked(-_poly(C, work) / _poly(B, work), N)
    candidates = []
    for _ in range(8):
        a, b, c = _poly(A, work), _poly(B, work), _poly(C, work)
        disc = b * b - a * c * 4
        if disc[0] == 0:
            raise SqrtError("discriminant vanishes at x = 0")
        root0 = _rational_sqrt(disc[0])
        s = (disc * qnorm(Fraction(1) / disc[0])).sqrt() * root0
        candidates = []
        for sign in (1, -1):
            try:
                candidates.append((-b + s * sign) / (a * 2))
            except NotInvertibleError:
                pass
        if candidates and min(c.order for c in candidates) >= N:
            break
        work += N - min((c.order for c in candidates), default=N - 1) if candidates else 1
    matches = [
        r.truncate(N) for r in candidates if r.order >= N and list(r[: len(init)]) == init[: r.order + 1]
    ]
    if not matches:
        raise ParameterError(f"no branch of the quadratic starts with {init}")
    if len(matches) > 1 and matches[0] != matches[1]:
        raise ParameterError(f"both branches start with {init}; give more initial terms")
    return matches[0]


def _truncate_checked(s: Series, N: int) -> Series:
    if s.order < N:
        raise TruncationError(f"could not reach order {N}", N)
    return s.truncate(N)
