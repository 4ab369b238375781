"""Batch command-line surface: enumerate, count, series, verify.

Exit codes: 0 success / all identities pass, 1 verification failure,
2 usage error.  Stdout carries data; stderr carries diagnostics.  All
counts print as decimal strings since they outgrow 64 bits quickly.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import counting, genfun, words
from .series import Caps, MultiSeries, catalan_series

TABLES = ("zeros", "zeros-descents", "ones", "ones-zeros", "letter", "max-letter", "fine")
SOURCES = ("enum", "recurrence", "closed", "genfun")
FORMATS = ("lines", "csv", "json")
SERIES_NAMES = ("catalan", "A", "Am", "B", "fine", "A-lemma", "A4", "A0")

# Which computation routes exist for each table.
_TABLE_SOURCES = {
    "zeros": ("enum", "recurrence", "closed", "genfun"),
    "zeros-descents": ("enum", "recurrence"),
    "ones": ("enum", "recurrence", "closed", "genfun"),
    "ones-zeros": ("enum", "recurrence", "closed"),
    "letter": ("enum", "recurrence", "genfun"),
    "max-letter": ("enum", "recurrence"),
    "fine": ("enum", "recurrence", "genfun"),
}


def _tally_filtered(n: int, specs, keep) -> dict[tuple[int, ...], int]:
    table = words.tally(n, specs)
    return {key: c for key, c in table.items() if keep(key)}


def count_table(table: str, n: int, i: int | None, source: str) -> dict[tuple[int, ...], int]:
    """Nonzero rows of the requested table, keyed by statistic tuples.

    Every source fills the same key domain (the one the arrays are
    defined on), so tables are byte-identical across sources.
    """
    spec = words.StatisticSpec
    if table == "zeros":
        if source == "enum":
            return _tally_filtered(n, [spec("zeros")], lambda k: True)
        if source == "recurrence":
            rows = {(m,): counting.a_zeros(n, m) for m in range(1, n + 1)}
        elif source == "closed":
            rows = {(m,): counting.a_zeros_closed(n, m) for m in range(1, n + 1)}
        else:
            a = genfun.gf_A(n)
            rows = {(m,): a.coeff_int(n, v=m) for m in range(1, n + 1)}
    elif table == "zeros-descents":
        if source == "enum":
            return _tally_filtered(n, [spec("zeros"), spec("descents")], lambda k: True)
        rows = {
            (m, k): counting.a_desc(n, m, k)
            for m in range(1, n + 1)
            for k in range(0, n)
        }
    elif table == "ones":
        if source == "enum":
            return _tally_filtered(n, [spec("ones")], lambda k: True)
        if source == "recurrence":
            rows = {(m,): counting.b_ones(n, m) for m in range(0, n)}
        elif source == "closed":
            rows = {(0,): 1}  # boundary value; the closed sum starts at m = 1
            rows.update({(m,): counting.b_ones_closed(n, m) for m in range(1, n)})
        else:
            b = genfun.gf_B(n)
            rows = {(m,): b.coeff_int(n, v=m) for m in range(0, n)}
    elif table == "ones-zeros":
        # domain of the refined array: m ones >= 1, i zeros >= 2
        if source == "enum":
            return _tally_filtered(
                n, [spec("ones"), spec("zeros")], lambda k: k[0] >= 1 and k[1] >= 2
            )
        if n < 3:
            return {}
        if source == "recurrence":
            rows = {
                (m, i): counting.b_ones_zeros(n, m, i)
                for m in range(1, n - 1)
                for i in range(2, n - m + 1)
            }
        else:
            rows = {
                (m, i): (counting.binomial(i + m - 1, m) - 1)
                * counting.a_zeros_closed(n - i, m)
                for m in range(1, n - 1)
                for i in range(2, n - m + 1)
            }
    elif table == "letter":
        if i is None or i < 1:
            raise ValueError("table 'letter' needs --i >= 1")
        if source == "enum":
            return _tally_filtered(
                n, [spec("letter", i), spec("zeros")], lambda k: True
            )
        if source == "recurrence":
            rows = {
                (s, t): counting.a_letter(i, n, s, t)
                for t in range(1, n + 1)
                for s in range(0, n - t + 1)
            }
        else:
            a4 = genfun.gf_A4(n, i, n + 2)
            a0 = genfun.gf_A0(n, i, n + 2)
            rows = {}
            for t in range(1, n + 1):
                rows[(0, t)] = a0.coeff_int(n, w=t, q=i)
                for s in range(1, n - t + 1):
                    rows[(s, t)] = a4.coeff_int(n, w=t, v=s, q=i)
    elif table == "max-letter":
        if source == "enum":
            return _tally_filtered(n, [spec("max-letter")], lambda k: True)
        rows = {(j,): counting.max_letter_count(n, j) for j in range(0, n)}
    elif table == "fine":
        if source == "enum":
            zeros = words.tally(n, [spec("zeros")])
            return {(): sum(c for (m,), c in zeros.items() if m % 2 == 1)}
        if source == "recurrence":
            return {(): counting.fine_number(n)}
        return {(): genfun.gf_fine(n).coeff_int(n)}
    else:
        raise ValueError(f"unknown table {table!r}")
    return {key: c for key, c in rows.items() if c}


def _emit_table(rows: dict[tuple[int, ...], int], fmt: str, meta: dict) -> str:
    ordered = sorted(rows.items())
    if fmt == "json":
        payload = {
            **meta,
            "rows": [{"key": list(k), "count": str(c)} for k, c in ordered],
        }
        return json.dumps(payload, sort_keys=True)
    sep = "," if fmt == "csv" else " "
    return "\n".join(sep.join([*(str(p) for p in key), str(c)]) for key, c in ordered)


def _emit_series(ms: MultiSeries, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(ms.to_jsonable(), sort_keys=True)
    lines = []
    sep = "," if fmt == "csv" else " "
    for item in ms.to_jsonable():
        lines.append(sep.join([*(str(e) for e in item["exponents"]), item["num"], item["den"]]))
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catwords",
        description="Catalan-word enumeration, exact statistics and identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list all words of a given length")
    p_enum.add_argument("--n", type=int, required=True, help="word length (>= 1)")
    p_enum.add_argument("--format", choices=FORMATS, default="lines")

    p_count = sub.add_parser("count", help="print a statistic table")
    p_count.add_argument("--table", choices=TABLES, required=True)
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--i", type=int, help="letter for --table letter")
    p_count.add_argument("--source", choices=SOURCES, default="recurrence")
    p_count.add_argument("--format", choices=FORMATS, default="lines")

    p_series = sub.add_parser("series", help="print a generating function")
    p_series.add_argument("--name", choices=SERIES_NAMES, required=True)
    p_series.add_argument("--order", type=int, required=True, help="x truncation order")
    p_series.add_argument("--m", type=int, help="slice index for --name Am")
    p_series.add_argument("--qmax", type=int, help="q cap, required for A4/A0")
    p_series.add_argument("--jmax", type=int, help="sum terms (default order + 2)")
    p_series.add_argument("--format", choices=FORMATS, default="json")

    p_verify = sub.add_parser("verify", help="check the identities")
    p_verify.add_argument("--identity", choices=("all",) + genfun.IDENTITIES, default="all")
    p_verify.add_argument("--order", type=int, default=20)
    p_verify.add_argument("--qmax", type=int, default=8)
    p_verify.add_argument("--jmax", type=int, help="sum terms (default order + 2)")
    return parser


def _cmd_enumerate(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.format == "json":
        out = [list(word) for word in words.enumerate_words(args.n)]
        print(json.dumps(out))
    else:
        for word in words.enumerate_words(args.n):
            print(word)
    return 0


def _cmd_count(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.source not in _TABLE_SOURCES[args.table]:
        parser.error(f"table {args.table!r} has no {args.source!r} route")
    if args.table == "letter" and (args.i is None or args.i < 1):
        parser.error("--table letter needs --i >= 1")
    rows = count_table(args.table, args.n, args.i, args.source)
    meta = {"table": args.table, "n": args.n, "source": args.source}
    if args.i is not None:
        meta["i"] = args.i
    print(_emit_table(rows, args.format, meta))
    return 0


def _cmd_series(args, parser) -> int:
    if args.order < 1:
        parser.error("--order must be >= 1")
    jmax = args.jmax if args.jmax is not None else args.order + 2
    name = args.name
    if name in ("A4", "A0") and args.qmax is None:
        parser.error(f"--name {name} needs --qmax")
    if name == "Am" and (args.m is None or args.m < 1):
        parser.error("--name Am needs --m >= 1")
    if name == "catalan":
        ms = catalan_series(Caps.of(args.order))
    elif name == "A":
        ms = genfun.gf_A(args.order)
    elif name == "Am":
        ms = genfun.gf_A_m(args.m, args.order)
    elif name == "B":
        ms = genfun.gf_B(args.order)
    elif name == "fine":
        ms = genfun.gf_fine(args.order)
    elif name == "A-lemma":
        ms = genfun.gf_A_via_lemma(args.order, jmax)
    elif name == "A4":
        ms = genfun.gf_A4(args.order, args.qmax, jmax)
    else:
        ms = genfun.gf_A0(args.order, args.qmax, jmax)
    print(_emit_series(ms, args.format))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.order < 1:
        parser.error("--order must be >= 1")
    jmax = args.jmax if args.jmax is not None else args.order + 2
    if args.identity == "all":
        reports = genfun.verify_all(args.order, args.qmax, jmax)
    else:
        reports = [genfun.run_identity(args.identity, args.order, args.qmax, jmax)]
    payload = [r.to_jsonable() for r in reports]
    print(json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True))
    return 0 if all(r.passed for r in reports) else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "count": _cmd_count,
        "series": _cmd_series,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, parser)
    except (ValueError, genfun.StabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
