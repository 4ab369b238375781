#!/usr/bin/env python3
"""Print the word-statistic distributions computed by every available
route, side by side, so disagreements would be obvious at a glance.

Usage: python scripts/distribution_report.py [--max-n 10]
"""

import argparse
import time

from catwords import counting as ct
from catwords import genfun as gf
from catwords.cli import count_table


def report(table: str, n: int, i=None) -> None:
    from catwords.cli import _TABLE_SOURCES

    rows = {}
    for source in _TABLE_SOURCES[table]:
        t0 = time.perf_counter()
        rows[source] = count_table(table, n, i, source)
        dt = (time.perf_counter() - t0) * 1000
        print(f"  {source:10s} {len(rows[source]):4d} rows  {dt:8.1f} ms")
    reference = next(iter(rows.values()))
    agree = all(r == reference for r in rows.values())
    print(f"  -> all routes agree: {agree}")
    if not agree:
        raise SystemExit(f"route disagreement in table {table} at n={n}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()

    for n in range(2, args.max_n + 1):
        total = ct.catalan_number(n - 1)
        print(f"n = {n}  ({total} words)")
        for table in ("zeros", "ones", "zeros-descents", "max-letter"):
            print(f" {table}:")
            report(table, n)
        print(" letter (i=2):")
        report("letter", n, i=2)
        print()

    print("fine numbers, three routes, n <= %d:" % args.max_n)
    fine_gf = gf.gf_fine(args.max_n)
    for n in range(1, args.max_n + 1):
        enum = count_table("fine", n, None, "enum")[()]
        rec = ct.fine_number(n)
        ser = fine_gf.coeff_int(n)
        flag = "" if enum == rec == ser else "  <-- MISMATCH"
        print(f"  n={n:3d}  enum={enum}  recurrence={rec}  series={ser}{flag}")


if __name__ == "__main__":
    main()
