#!/usr/bin/env python3
"""Run the verification catalog and write a JSON report plus a summary table."""

import argparse
import json
import time

from hankelcalc.verify import list_checks, run_check


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("ids", nargs="*", help="check ids (default: whole catalog)")
    ap.add_argument("--order", type=int, help="override every default order")
    ap.add_argument("--json", default="catalog_report.json", help="where to write the reports")
    args = ap.parse_args()

    ids = args.ids or [s.id for s in list_checks()]
    reports = []
    t0 = time.perf_counter()
    for cid in ids:
        r = run_check(cid, args.order)
        reports.append(r)
        extra = f"index {r.witness['index']}: {r.witness['detail']}" if r.status == "fail" else ""
        print(f"{r.id:<11} {r.status:<11} N={r.order:<5} {r.elapsed_ms:9.0f} ms  {extra}")
    print(f"total {time.perf_counter() - t0:.1f} s")
    with open(args.json, "w", encoding="utf-8") as fh:
        json.dump([r.to_dict() for r in reports], fh, indent=2)
    print(f"reports written to {args.json}")


if __name__ == "__main__":
    main()
