"""Jacobi continued fractions

    v_0 / (1 + u_1 x - v_1 x^2 / (1 + u_2 x - v_2 x^2 / (1 + u_3 x - ...)))

Index convention: ``u`` starts at ``u_1``, ``v`` at ``v_0``, and
``H_n = v_0^n v_1^(n-1) ... v_{n-1}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    CoprimalityError,
    ParameterError,
    StieltjesBreakdown,
    TruncationError,
    ZeroDenominatorError,
)
from .periodic import EPSeq, detect_periodicity, parse_star, render
from .series import QQ, Coeff, Ring, Series, prime_power, qnorm

__all__ = [
    "JFraction",
    "stieltjes_expand",
    "jfrac_to_series",
    "hankel_from_jfrac",
    "uv_from_hankel",
    "graft",
    "graft_ratio_check",
    "detect_periodicity",
    "eseq_tail",
    "chop",
]


def eseq_tail(s: EPSeq, j: int) -> EPSeq:
    """``s`` with its first ``j`` terms removed."""
    pre = s.preperiod
    if j <= len(pre):
        return EPSeq(pre[j:], s.period)
    if not s.period:
        raise TruncationError(f"cannot drop {j} terms from a sequence of length {len(pre)}", j)
    r = (j - len(pre)) % len(s.period)
    return EPSeq((), s.period[r:] + s.period[:r])


def _as_eseq(values, ring: Ring) -> EPSeq:
    if isinstance(values, str):
        values = parse_star(values)
    if isinstance(values, EPSeq):
        return EPSeq(
            tuple(ring.coerce(c) for c in values.preperiod),
            tuple(ring.coerce(c) for c in values.period),
            values.conjectural,
        )
    return EPSeq.finite([ring.coerce(c) for c in values])


@dataclass(frozen=True)
class JFraction:
    """The pair ``(u, v)``; ``u[0]`` holds ``u_1`` and ``v[0]`` holds ``v_0``."""

    u: EPSeq
    v: EPSeq
    ring: Ring = field(default=QQ)

    @classmethod
    def of(cls, u, v, ring: Ring = QQ) -> "JFraction":
        """Build from lists, :class:`EPSeq` values or star-notation strings."""
        return cls(_as_eseq(u, ring), _as_eseq(v, ring), ring)

    @property
    def known_depth(self) -> float:
        """Number of trusted levels ``(u_n, v_n)``, ``n >= 1``; ``inf`` if periodic."""
        return min(self.u.known_length, self.v.known_length - 1)

    def u_at(self, n: int) -> Coeff:
        if n < 1:
            raise IndexError("u starts at u_1")
        return self.u[n - 1]

    def v_at(self, n: int) -> Coeff:
        return self.v[n]

    def us(self, d: int) -> list:
        return self.u.prefix(d)

    def vs(self, d: int) -> list:
        return self.v.prefix(d)

    def truncated(self, d: int) -> "JFraction":
        """The finite fraction keeping levels ``1..d`` (``v_0..v_d``)."""
        if d > self.known_depth:
            raise TruncationError(f"fraction only has {self.known_depth} levels", d)
        return JFraction(EPSeq.finite(self.us(d)), EPSeq.finite(self.vs(d + 1)), self.ring)

    def reduce(self, m) -> "JFraction":
        ring = m if isinstance(m, Ring) else Ring(int(m))
        return JFraction.of(self.u, self.v, ring)

    def __str__(self):
        return f"J[u={render(self.u)} / v={render(self.v)}]"

    @classmethod
    def parse(cls, text: str, ring: Ring = QQ) -> "JFraction":
        m = re.fullmatch(r"\s*J\[\s*u\s*=\s*(.*?)\s*/\s*v\s*=\s*(.*?)\s*\]\s*", text)
        if not m:
            raise ParameterError(f"not a J-fraction: {text!r}")
        return cls.of(parse_star(m.group(1)), parse_star(m.group(2)), ring)


def stieltjes_expand(f: Series, depth: int) -> JFraction:
    """``u_1..u_depth`` and ``v_0..v_depth`` of the J-fraction of ``f``.

    Each level inverts the current tail: ``v/g = 1 + u x - v' x^2 g'``.
    Raises :class:`StieltjesBreakdown` with index ``n`` when ``v_{n-1}``
    vanishes (not a unit, over Z/p^e) before level ``depth`` is reached.
    """
    if depth < 0:
        raise ParameterError("depth must be >= 0")
    if f.order < 2 * depth:
        raise TruncationError(
            f"J-fraction depth {depth} needs order {2 * depth}, series has order {f.order}",
            2 * depth,
        )
    ring = f.ring
    v0 = f[0]
    if not ring.is_unit(v0):
        raise StieltjesBreakdown(1)
    us, vs = [], [v0]
    g = f.truncate(2 * depth) * ring.inverse(v0)
    for level in range(1, depth + 1):
        r = 1 / g
        u = r[1]
        v = ring.neg(r[2]) if g.order >= 2 else None
        us.append(u)
        vs.append(v)
        if level == depth:
            break
        if not ring.is_unit(v):
            raise StieltjesBreakdown(level + 1)
        tail = (r - 1 - Series.monomial(1, r.order, ring, u)).shift(2)
        g = tail * ring.inverse(ring.neg(v))
    return JFraction(EPSeq.finite(us), EPSeq.finite(vs), ring)


def jfrac_to_series(J: JFraction, N: int) -> Series:
    """The power series of ``J`` to order ``N``.

    Uses the convergent recurrences ``A_l = (1 + u_l x) A_{l-1} - v_{l-1} x^2 A_{l-2}``
    (same for ``B``) over levels ``1..L``, ``L = ceil(N/2)``, closing the last
    level with ``1 + u_L x - v_L x^2``; the result ``A/B`` is exact through ``x^N``.
    """
    ring = J.ring
    if N < 0:
        raise ParameterError("order must be >= 0")
    L = (N + 1) // 2
    if L > J.known_depth:
        raise TruncationError(
            f"order {N} needs {L} levels, the fraction provides {J.known_depth}", N
        )
    one = Series.constant(1, N, ring)
    zero = Series.constant(0, N, ring)
    x = Series.x(N, ring)
    # A_{-1}, A_0 and B_{-1}, B_0
    a_prev, a_cur = one, zero
    b_prev, b_cur = zero, one
    levels = [(J.u_at(l), J.v_at(l - 1)) for l in range(1, L + 1)]
    if L:
        levels.append((0, J.v_at(L)))
    for idx, (u, vprev) in enumerate(levels, start=1):
        bl = one + x * u if u else one
        if idx == 1:
            a_next = bl * a_cur + a_prev * vprev
            b_next = bl * b_cur + b_prev * vprev
        else:
            coef = ring.neg(ring.coerce(vprev))
            a_next = bl * a_cur + (a_prev.mul_x(2).truncate(N) * coef)
            b_next = bl * b_cur + (b_prev.mul_x(2).truncate(N) * coef)
        a_prev, a_cur = a_cur, a_next
        b_prev, b_cur = b_cur, b_next
    if not L:
        return Series.constant(J.v_at(0), N, ring)
    return a_cur / b_cur


def hankel_from_jfrac(J: JFraction, N: int) -> list:
    """``H_0 .. H_N`` from the fundamental relation ``H_n = prod_{i<n} v_i^{n-i}``."""
    if N > J.v.known_length:
        raise TruncationError(f"H_{N} needs v_0..v_{N - 1}", N)
    ring = J.ring
    out = [ring.coerce(1)]
    prefix = ring.coerce(1)
    for n in range(1, N + 1):
        prefix = ring.mul(prefix, J.v_at(n - 1))
        out.append(ring.mul(out[-1], prefix))
    return out


def uv_from_hankel(H: Sequence, H1: Sequence) -> tuple[list, list]:
    """``(u_1..u_m, v_0..v_m)`` from ``H_n = H_n^{(0)}`` and ``H1_n = H_n^{(1)}``.

    ``u_n = -(H_{n-1} H1_n / H_n + H_n H1_{n-2} / H_{n-1}) / H1_{n-1}`` (with
    ``H1_{-1} = 0``) and ``v_n = H_{n+1} H_{n-1} / H_n^2``, ``v_0 = H_1``.
    ``H`` must run through ``H_{m+1}`` and ``H1`` through ``H1_m``.
    """
    H = [Fraction(h) for h in H]
    H1 = [Fraction(h) for h in H1]
    m = min(len(H) - 2, len(H1) - 1)
    if m < 0 or not H or H[0] != 1:
        raise TruncationError("need H_0 = 1, H_1 and H1_0", 0)
    vs = [qnorm(H[1])]
    us = []
    for n in range(1, m + 1):
        if H[n] == 0:
            raise ZeroDenominatorError(f"H_{n} = 0 (needed for u_{n}, v_{n})", n)
        if H1[n - 1] == 0:
            raise ZeroDenominatorError(f"H^(1)_{n - 1} = 0 (needed for u_{n})", n)
        back = H[n] * H1[n - 2] / H[n - 1] if n >= 2 else 0
        us.append(qnorm(-(H[n - 1] * H1[n] / H[n] + back) / H1[n - 1]))
        vs.append(qnorm(H[n + 1] * H[n - 1] / H[n] ** 2))
    return us, vs


def graft(F: JFraction, G: JFraction, k: int) -> JFraction:
    """``F |^k G``: the first ``k`` levels of ``F`` followed by the levels of ``G``."""
    if F.ring != G.ring:
        raise ParameterError("cannot graft fractions over different rings")
    if G.v_at(0) != F.ring.coerce(1):
        raise ParameterError(f"grafted fraction must have v_0 = 1, got {G.v_at(0)}")
    if k < 0 or F.known_depth < k:
        raise TruncationError(f"graft of order {k} needs {k} levels of F", k)
    u = EPSeq(tuple(F.us(k)) + G.u.preperiod, G.u.period)
    gv = eseq_tail(G.v, 1)
    v = EPSeq(tuple(F.vs(k + 1)) + gv.preperiod, gv.period)
    return JFraction(u, v, F.ring)


def chop(J: JFraction, k: int) -> JFraction:
    """Delete levels ``1..k``: the tail fraction with ``v_0`` reset to 1."""
    if k < 0:
        raise ParameterError("k must be >= 0")
    if k and J.known_depth <= k:
        raise TruncationError(f"cannot chop {k} levels from a fraction of depth {J.known_depth}", k)
    u = eseq_tail(J.u, k)
    vt = eseq_tail(J.v, k + 1)
    v = EPSeq((J.ring.coerce(1),) + vt.preperiod, vt.period)
    return JFraction(u, v, J.ring)


def graft_ratio_check(F: JFraction, Fbar: JFraction, m: int, N: int) -> bool:
    """Whether ``H_n(F) / H_n(Fbar) == 1 (mod m)`` for ``1 <= n <= N``."""
    p, _ = prime_power(m)
    hf = hankel_from_jfrac(F, N)
    hb = hankel_from_jfrac(Fbar, N)
    for n in range(1, N + 1):
        if hb[n] == 0:
            raise CoprimalityError(f"H_{n}(Fbar) = 0", n)
        ratio = Fraction(hf[n]) / Fraction(hb[n])
        if ratio.numerator % p == 0 or ratio.denominator % p == 0:
            raise CoprimalityError(f"H_{n}(F)/H_{n}(Fbar) = {ratio} is not a {p}-unit", n)
        if (ratio.numerator - ratio.denominator) % m:
            return False
    return True
