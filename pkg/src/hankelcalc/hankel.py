"""Hankel determinants ``H_n^{(k)}(f) = det(a_{k+i+j})_{0 <= i, j < n}``.

Over Q the matrix rows are scaled to integers and the determinant is found
by Bareiss fraction-free elimination.  Without pivoting, the Bareiss pivots
of a Hankel matrix are exactly its leading principal minors, so a whole
sequence ``H_0 .. H_N`` costs a single elimination as long as no minor
vanishes; after a zero minor the remaining sizes are done one at a time
with pivoting.  Over Z/p the same split applies with ordinary elimination
mod p; over Z/p^e (e > 1) pivots must be units, with the fallbacks listed
in :func:`hankel_det`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm

import numpy as np

from .errors import ParameterError, TruncationError
from .series import Coeff, Ring, Series, qnorm

NAIVE_MAX = 8


@dataclass(frozen=True)
class HankelResult:
    n: int
    k: int
    value: Coeff


def _need(f: Series, n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ParameterError("Hankel size and offset must be non-negative")
    need = k + 2 * n - 2
    if n and f.order < need:
        raise TruncationError(
            f"H_{n}^({k}) needs coefficients through a_{need}, series has order {f.order}", need
        )


def _integer_rows(coeffs, n: int, k: int, width: int):
    """Hankel rows scaled to integers, with the per-row scale factors."""
    rows, scales = [], []
    for i in range(n):
        row = coeffs[k + i : k + i + width]
        dens = [c.denominator for c in row if type(c) is Fraction]
        den = lcm(*dens) if dens else 1
        rows.append(list(row) if den == 1 else [int(c * den) for c in row])
        scales.append(den)
    return rows, scales


def bareiss_det(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination with row pivoting."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for c in range(n - 1):
        if a[c][c] == 0:
            swap = next((r for r in range(c + 1, n) if a[r][c] != 0), None)
            if swap is None:
                return 0
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        piv = a[c][c]
        rowc = a[c]
        for r in range(c + 1, n):
            rowr = a[r]
            arc = rowr[c]
            if arc == 0:
                if piv != prev:
                    a[r] = rowr[: c + 1] + [piv * x // prev for x in rowr[c + 1 :]]
                continue
            a[r] = rowr[: c + 1] + [
                (piv * x - arc * y) // prev for x, y in zip(rowr[c + 1 :], rowc[c + 1 :])
            ]
        prev = piv
    return sign * a[n - 1][n - 1]


def _leading_minors_int(rows: list[list[int]]) -> list[int]:
    """Leading principal minors ``D_1, D_2, ...`` by pivot-free Bareiss.

    Stops (returning fewer values) right after the first zero minor.
    """
    a = [row[:] for row in rows]
    n = len(a)
    minors = []
    prev = 1
    for c in range(n):
        piv = a[c][c]
        minors.append(piv)
        if piv == 0:
            break
        rowc = a[c]
        for r in range(c + 1, n):
            rowr = a[r]
            arc = rowr[c]
            a[r] = rowr[: c + 1] + [
                (piv * x - arc * y) // prev for x, y in zip(rowr[c + 1 :], rowc[c + 1 :])
            ]
        prev = piv
    return minors


def _det_rational(f: Series, n: int, k: int) -> Coeff:
    rows, scales = _integer_rows(f.coeffs, n, k, n)
    scale = 1
    for d in scales:
        scale *= d
    return qnorm(Fraction(bareiss_det(rows), scale))


# residue rings


def _det_mod_prime(mat: np.ndarray, p: int) -> int:
    a = mat.copy() % p
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            a[[c, r]] = a[[r, c]]
            det = -det
        piv = int(a[c, c])
        det = det * piv % p
        inv = pow(piv, -1, p)
        factors = a[c + 1 :, c] * inv % p
        a[c + 1 :, c:] = (a[c + 1 :, c:] - np.outer(factors, a[c, c:])) % p
    return det % p


def _det_mod_prime_power(mat: list[list[int]], ring: Ring) -> int | None:
    """Elimination with unit pivots only; ``None`` when no unit pivot exists."""
    m, p = ring.modulus, ring.prime
    a = [[x % m for x in row] for row in mat]
    n = len(a)
    det = 1
    for c in range(n):
        r = next((r for r in range(c, n) if a[r][c] % p), None)
        if r is None:
            if all(a[r][c] == 0 for r in range(c, n)):
                return 0
            return None
        if r != c:
            a[c], a[r] = a[r], a[c]
            det = -det
        piv = a[c][c]
        det = det * piv % m
        inv = pow(piv, -1, m)
        for rr in range(c + 1, n):
            fct = a[rr][c] * inv % m
            if fct:
                a[rr] = [(x - fct * y) % m for x, y in zip(a[rr], a[c])]
    return det % m


def _use_numpy(m: int) -> bool:
    return m < 3_000_000_000


def _det_residue(f: Series, n: int, k: int) -> int:
    ring = f.ring
    m = ring.modulus
    mat = [list(f.coeffs[k + i : k + i + n]) for i in range(n)]
    if n == 0:
        return 1 % m
    if ring.exponent == 1 and _use_numpy(m):
        return _det_mod_prime(np.array(mat, dtype=np.int64), m)
    d = _det_mod_prime_power(mat, ring)
    if d is not None:
        return d
    if n <= NAIVE_MAX:
        return _leibniz(mat, ring)
    return bareiss_det(mat) % m


def _leibniz(mat, ring: Ring) -> Coeff:
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= mat[i][perm[i]]
            if not prod:
                break
        total += prod
    return total % ring.modulus if ring.modulus else qnorm(total)


def hankel_det(f: Series, n: int, k: int = 0) -> Coeff:
    """The Hankel determinant ``H_n^{(k)}(f)`` in the ring of ``f``.

    Over Z/p^e with e > 1 a column without a unit entry sends the
    computation to the Leibniz formula (n <= 8) or to the integer lift of
    the residues, whose determinant is then reduced.
    """
    _need(f, n, k)
    if n == 0:
        return f.ring.coerce(1)
    if f.ring.is_rational:
        return _det_rational(f, n, k)
    return _det_residue(f, n, k)


def hankel_det_naive(f: Series, n: int, k: int = 0) -> Coeff:
    """Leibniz-formula determinant, an independent oracle for ``n <= 8``."""
    if n > NAIVE_MAX:
        raise ParameterError(f"naive determinant is limited to n <= {NAIVE_MAX}, got {n}")
    _need(f, n, k)
    mat = [[f[k + i + j] for j in range(n)] for i in range(n)]
    return _leibniz(mat, f.ring)


def _sequence_rational(f: Series, N: int, k: int) -> list:
    rows, scales = _integer_rows(f.coeffs, N, k, N)
    minors = _leading_minors_int(rows)
    out = [1]
    scale = 1
    for n, d in enumerate(minors, start=1):
        scale *= scales[n - 1]
        out.append(qnorm(Fraction(d, scale)))
    for n in range(len(out), N + 1):
        out.append(_det_rational(f, n, k))
    return out


def _leading_minors_mod(mat: np.ndarray, ring: Ring) -> list[int]:
    """Leading minors mod m by pivot-free elimination; stops after a non-unit pivot."""
    m, p = ring.modulus, ring.prime
    a = mat.copy() % m
    n = a.shape[0]
    minors, acc = [], 1
    for c in range(n):
        piv = int(a[c, c])
        acc = acc * piv % m
        minors.append(acc)
        if piv % p == 0:
            break
        inv = pow(piv, -1, m)
        factors = a[c + 1 :, c] * inv % m
        a[c + 1 :, c:] = (a[c + 1 :, c:] - np.outer(factors, a[c, c:])) % m
    return minors


def _sequence_residue(f: Series, N: int, k: int) -> list:
    ring = f.ring
    out = [1 % ring.modulus]
    if N == 0:
        return out
    if _use_numpy(ring.modulus):
        mat = np.array([f.coeffs[k + i : k + i + N] for i in range(N)], dtype=np.int64)
        out.extend(_leading_minors_mod(mat, ring))
    for n in range(len(out), N + 1):
        out.append(_det_residue(f, n, k))
    return out


def hankel_sequence(f: Series, N: int, k: int = 0) -> list:
    """``[H_0^{(k)}, H_1^{(k)}, ..., H_N^{(k)}]`` with ``H_0 = 1``."""
    _need(f, N, k)
    if f.ring.is_rational:
        return _sequence_rational(f, N, k)
    return _sequence_residue(f, N, k)


def hankel_csv(rows: list[HankelResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "H"])
    for r in rows:
        w.writerow([r.n, r.k, str(r.value)])
    return buf.getvalue()
