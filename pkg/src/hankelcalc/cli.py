"""Command-line front end.

Exit status: 0 success, 1 a verify check failed, 2 usage error,
3 computation error (breakdown, coprimality, insufficient order).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .algebraic import guess_algebraic
from .errors import ComputationError, ParameterError
from .expr import ExprSyntaxError, expand, parse
from .hankel import HankelResult, hankel_csv, hankel_sequence
from .jfraction import stieltjes_expand
from .periodic import detect_periodicity, render
from .series import QQ, Ring, format_coeff, prime_power

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _modulus(text: str) -> int:
    try:
        m = int(text)
        prime_power(m)
    except (ValueError, ParameterError) as exc:
        raise argparse.ArgumentTypeError(f"--mod must be a prime power >= 2 ({exc})") from None
    return m


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=_nonneg, help="series order / check order N")
    common.add_argument("--mod", type=_modulus, help="work in Z/m (m a prime power)")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="hankelcalc", description="Exact Hankel determinant calculus.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="expand a series expression")
    e.add_argument("expr")

    h = sub.add_parser("hankel", parents=[common], help="Hankel determinants H_0..H_N")
    h.add_argument("expr")
    h.add_argument("--n", type=_nonneg, required=True, help="largest size N")
    h.add_argument("--offset", type=_nonneg, default=0, help="offset k")

    j = sub.add_parser("jfrac", parents=[common], help="J-fraction by the Stieltjes algorithm")
    j.add_argument("expr")
    j.add_argument("--depth", type=_nonneg, required=True)
    j.add_argument("--detect-period", action="store_true", help="render u, v in star notation")

    g = sub.add_parser("guess", parents=[common], help="guess an algebraic equation P(x, f) = 0")
    g.add_argument("expr")
    g.add_argument("--dx", type=_nonneg, required=True)
    g.add_argument("--df", type=_nonneg, default=2)
    g.add_argument("--margin", type=_nonneg, default=20)

    v = sub.add_parser("verify", parents=[common], help="run catalog checks (all by default)")
    v.add_argument("ids", nargs="*")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON output")

    sub.add_parser("list", parents=[common], help="list the check catalog")
    return p


def _ring(args) -> Ring:
    return Ring(args.mod) if args.mod else QQ


def _parse_expr(text: str):
    try:
        return parse(text)
    except ExprSyntaxError as exc:
        raise UsageError(f"cannot parse expression: {exc}") from None


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _cmd_expand(args) -> tuple[str, int]:
    if args.order is None:
        raise UsageError("expand needs --order")
    s = expand(_parse_expr(args.expr), args.order, _ring(args))
    if args.format == "json":
        return json.dumps({"ring": str(s.ring), "order": s.order, "coeffs": [format_coeff(c) for c in s.coeffs]}) + "\n", 0
    if args.format == "csv":
        return _csv([["k", "a_k"]] + [[k, format_coeff(c)] for k, c in enumerate(s.coeffs)]), 0
    return s.to_text(), 0


def _cmd_hankel(args) -> tuple[str, int]:
    need = args.offset + max(2 * args.n - 2, 0)
    order = max(need, args.order or 0)
    f = expand(_parse_expr(args.expr), order, _ring(args))
    H = hankel_sequence(f, args.n, args.offset)
    rows = [HankelResult(n, args.offset, h) for n, h in enumerate(H)]
    if args.format == "json":
        return json.dumps([{"n": r.n, "k": r.k, "H": format_coeff(r.value)} for r in rows]) + "\n", 0
    return hankel_csv(rows), 0


def _cmd_jfrac(args) -> tuple[str, int]:
    order = max(2 * args.depth, args.order or 0)
    f = expand(_parse_expr(args.expr), order, _ring(args))
    J = stieltjes_expand(f, args.depth)
    us, vs = J.us(args.depth), J.vs(args.depth + 1)
    u_txt = v_txt = None
    if args.detect_period:
        pu, pv = detect_periodicity(us), detect_periodicity(vs)
        u_txt = render(pu) if pu is not None else None
        v_txt = render(pv) if pv is not None else None
    if args.format == "json":
        out = {"u": [format_coeff(c) for c in us], "v": [format_coeff(c) for c in vs]}
        if args.detect_period:
            out.update({"u_pattern": u_txt, "v_pattern": v_txt, "conjectural": True})
        return json.dumps(out) + "\n", 0
    if args.format == "csv":
        rows = [["n", "u_n", "v_n"]]
        for n in range(args.depth + 1):
            rows.append([n, format_coeff(us[n - 1]) if n else "", format_coeff(vs[n])])
        return _csv(rows), 0
    text = str(J) + "\n"
    if args.detect_period:
        text += f"u pattern (conjectural): {u_txt or 'none'}\nv pattern (conjectural): {v_txt or 'none'}\n"
    return text, 0


def _cmd_guess(args) -> tuple[str, int]:
    if args.df < 1:
        raise UsageError("--df must be >= 1")
    need = (args.dx + 1) * (args.df + 1) + args.margin
    order = max(need, args.order or 0)
    f = expand(_parse_expr(args.expr), order, QQ)
    P = guess_algebraic(f, args.dx, args.df, args.margin)
    if args.format == "json":
        out = {"equation": str(P) if P else None, "nullity": P.nullity if P else None, "order": order}
        return json.dumps(out) + "\n", 0
    return (f"{P} = 0\n" if P else "none\n"), 0


def _cmd_verify(args) -> tuple[str, int]:
    from .verify import CATALOG_ORDER, CheckSpec, run_check

    ids = args.ids or list(CATALOG_ORDER)
    unknown = [i for i in ids if i not in CATALOG_ORDER]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    if args.order is not None and args.order < 1:
        raise UsageError("--order must be positive")
    reports = [run_check(CheckSpec(i, {}, args.order)) for i in ids]
    code = EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK
    if args.format == "json":
        return json.dumps([r.to_dict(timing=args.timing) for r in reports]) + "\n", code
    if args.format == "csv":
        rows = [["id", "order", "status", "witness"]]
        rows += [[r.id, r.order, r.status, json.dumps(r.to_dict()["witness"])] for r in reports]
        return _csv(rows), code
    lines = []
    for r in reports:
        w = r.to_dict()["witness"]
        extra = f"index {w['index']}: {w['detail']}" if r.status == "fail" else json.dumps(w)
        lines.append(f"{r.id:<11} {r.status:<11} N={r.order:<5} {extra}")
    return "\n".join(lines) + "\n", code


def _cmd_list(args) -> tuple[str, int]:
    from .verify import catalog, list_checks

    entries = catalog()
    specs = list_checks()
    if args.format == "json":
        out = [
            {"id": s.id, "default_order": s.order, "params": _jsonable(s.params), "anchor": e.anchor}
            for s, e in zip(specs, entries)
        ]
        return json.dumps(out) + "\n", 0
    if args.format == "csv":
        return _csv([["id", "default_order", "anchor"]] + [[s.id, s.order, e.anchor] for s, e in zip(specs, entries)]), 0
    return "".join(f"{s.id:<11} N={s.order:<5} {e.anchor}\n" for s, e in zip(specs, entries)), 0


def _jsonable(v):
    from .verify.registry import jsonable

    return jsonable(v)


COMMANDS = {
    "expand": _cmd_expand,
    "hankel": _cmd_hankel,
    "jfrac": _cmd_jfrac,
    "guess": _cmd_guess,
    "verify": _cmd_verify,
    "list": _cmd_list,
}


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputationError as exc:
        idx = getattr(exc, "index", None)
        suffix = f" [index {idx}]" if idx is not None and str(idx) not in str(exc) else ""
        print(f"error: {exc}{suffix}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
