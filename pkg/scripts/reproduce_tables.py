#!/usr/bin/env python3
"""Reproduce the reference tables end to end and print them as markdown.

By default the heavy 10^12 sieve cells are served from recorded reference
values (labeled "reference" in the output); pass --allow-long-run to recompute
everything, which takes hours and tens of GB of cache.

Examples:
    python3 scripts/reproduce_tables.py              # tables 2..7 at default scale
    python3 scripts/reproduce_tables.py --tables 2 5
    python3 scripts/reproduce_tables.py --tables 6 7 --allow-long-run
"""

from __future__ import annotations

import argparse
import sys
import time

from twosquares import tables


def render_md(header, rows, meta) -> str:
    lines = [f"<!-- {k}={v} -->" for k, v in meta.items()]
    lines.append("| " + " | ".join(str(h) for h in header) + " |")
    lines.append("|" + "---|" * len(header))
    for r in rows:
        lines.append("| " + " | ".join("" if c is None else str(c) for c in r) + " |")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tables", type=int, nargs="+", default=[2, 3, 4, 5, 6, 7],
                    help="table ids to reproduce (1..7; 1 sieves to 10^12)")
    ap.add_argument("--allow-long-run", action="store_true")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--cache-dir", default=None)
    args = ap.parse_args(argv)

    for tid in args.tables:
        kwargs = {}
        if tid in (1, 2):
            kwargs = {"allow_long_run": args.allow_long_run,
                      "threads": args.threads, "cache_dir": args.cache_dir}
        elif tid in (6, 7):
            kwargs = {"allow_long_run": args.allow_long_run}
        t0 = time.time()
        header, rows, meta = tables.reproduce_table(tid, **kwargs)
        print(f"\n## Table {tid}  ({time.time() - t0:.1f}s)\n")
        print(render_md(header, rows, meta))
    return 0


if __name__ == "__main__":
    sys.exit(main())
