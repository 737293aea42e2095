#!/usr/bin/env python3
"""Tabulate open-sequence counts per order and their growth ratios.

The per-order counts of open Skolem sequences grow by a factor settling
around 3.7-3.8; this script prints the exact counts, the ratios, and the
running time per level, so a regression in either the walker or its
asymptotics is visible at a glance.

    python3 scripts/open_level_growth.py --max-n 15
"""

import argparse
import sys
import time

from skolemgen.engine import iter_open_counts


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument(
        "--method",
        choices=("dfs", "levels"),
        default="dfs",
        help="depth-first recount per level (default) or one level-synchronised sweep",
    )
    args = ap.parse_args(argv)
    if args.max_n < 1:
        ap.error("--max-n must be >= 1")

    print(f"{'n':>3} {'count':>12} {'ratio':>7} {'sec':>8}")
    prev = None
    t_start = time.perf_counter()
    for n, count in enumerate(iter_open_counts(args.max_n, method=args.method), start=1):
        now = time.perf_counter()
        ratio = f"{count / prev:.3f}" if prev else "-"
        print(f"{n:>3} {count:>12} {ratio:>7} {now - t_start:>8.2f}")
        prev = count
    return 0


if __name__ == "__main__":
    sys.exit(main())
