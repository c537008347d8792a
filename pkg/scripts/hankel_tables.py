#!/usr/bin/env python3
"""Print Hankel determinant tables and J-fractions for the named generators."""

import argparse

from hankelcalc import expand, hankel_sequence, stieltjes_expand
from hankelcalc.errors import StieltjesBreakdown
from hankelcalc.periodic import detect_periodicity, render
from hankelcalc.series import QQ, Ring

DEFAULTS = ["P2", "S2", "P3", "TM27", "DELTA", "GAMMA", "PROP25", "S36", "S37", "S38"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("exprs", nargs="*", default=DEFAULTS)
    ap.add_argument("--n", type=int, default=16, help="largest Hankel size")
    ap.add_argument("--mod", type=int, help="also show H_n mod m and its eventual pattern")
    ap.add_argument("--depth", type=int, default=8, help="J-fraction depth")
    args = ap.parse_args()

    for text in args.exprs:
        f = expand(text, 2 * args.n)
        H = hankel_sequence(f, args.n)
        print(f"{text}")
        print(f"  H     = {H}")
        if args.mod:
            Hm = hankel_sequence(expand(text, 2 * args.n, Ring(args.mod)), args.n)
            pat = detect_periodicity(Hm)
            print(f"  H mod {args.mod} = {Hm}  pattern (conjectural): {render(pat) if pat is not None else 'none'}")
        try:
            J = stieltjes_expand(expand(text, 2 * args.depth, QQ), args.depth)
            print(f"  u     = {[str(c) for c in J.us(args.depth)]}")
            print(f"  v     = {[str(c) for c in J.vs(args.depth + 1)]}")
        except StieltjesBreakdown as exc:
            print(f"  J-fraction breaks down at level {exc.n}")


if __name__ == "__main__":
    main()
