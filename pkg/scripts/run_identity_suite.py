#!/usr/bin/env python3
"""Run the full generating-function identity suite and print a timing
table plus the JSON reports.

Usage: python scripts/run_identity_suite.py [--order 20] [--qmax 8] [--jmax J]
Exit status is nonzero if any identity fails.
"""

import argparse
import json
import sys
import time

from catwords import genfun


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=20)
    parser.add_argument("--qmax", type=int, default=8)
    parser.add_argument("--jmax", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="dump raw reports")
    args = parser.parse_args()

    t0 = time.perf_counter()
    reports = genfun.verify_all(args.order, args.qmax, args.jmax)
    total = time.perf_counter() - t0

    width = max(len(r.identity) for r in reports)
    for r in reports:
        print(f"{r.identity:{width}s}  {r.status:4s}  {r.millis:9.1f} ms")
    print(f"{'total':{width}s}        {total * 1000:9.1f} ms")

    if args.json:
        print(json.dumps([r.to_jsonable() for r in reports], sort_keys=True, indent=2))

    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"FAILED {r.identity}: {r.mismatch}", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
