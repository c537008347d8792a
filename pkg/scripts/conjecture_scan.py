#!/usr/bin/env python3
"""Exploratory scans: first vanishing Hankel determinant of prod(1 - x^(m^k)),
and nonvanishing of H_k for 3 prod_(n>=1)(1 + x^(3^n)) - 2/(1-x).

Both results are finite evidence only.
"""

import argparse

from hankelcalc import expand, hankel_sequence


def first_zero(expr: str, n: int):
    H = hankel_sequence(expand(expr, 2 * n), n)
    return next((k for k in range(1, n + 1) if H[k] == 0), None)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=40, help="largest Hankel size scanned")
    ap.add_argument("--moduli", type=int, nargs="*", default=[2, 3, 4, 5, 7, 8, 9])
    args = ap.parse_args()

    print(f"first n <= {args.n} with H_n(prod(1 - x^(m^k))) = 0")
    for m in args.moduli:
        z = first_zero(f"PM({m},-1)", args.n)
        print(f"  m = {m}: {z if z is not None else 'none'}")
    z = first_zero("3*PM(3,1)/(1+x)-2/(1-x)", args.n)
    print(f"1 + x^(3^n) variant: {'nonzero through ' + str(args.n) if z is None else 'first zero at ' + str(z)}")


if __name__ == "__main__":
    main()
