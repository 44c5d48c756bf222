#!/usr/bin/env python3
"""Sweep census runs over a range of group orders and write row files.

Example:
    python scripts/run_census.py --orders 2:21 --max-genus 12 --out-dir out \
        --format csv --up-to-aut --verify
"""

import argparse
import sys
from pathlib import Path

from necfix import run_census
from necfix.census import write_census_csv, write_census_jsonl


def parse_orders(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi)))
    return [int(x) for x in text.split(",")]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="2:21",
                        help="lo:hi range (hi exclusive) or comma list, default 2:21")
    parser.add_argument("--max-genus", type=int, default=12)
    parser.add_argument("--out-dir", default="census-out")
    parser.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    parser.add_argument("--up-to-aut", action="store_true")
    parser.add_argument("--verify", action="store_true")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    writer = write_census_csv if args.format == "csv" else write_census_jsonl
    total = 0
    extremal = 0
    for order in parse_orders(args.orders):
        rows, disagreements = run_census(
            order,
            args.max_genus,
            up_to_aut=args.up_to_aut,
            verify=args.verify,
            workers=args.workers,
        )
        if disagreements:
            print(f"order {order}: ORACLE DISAGREEMENT {disagreements[0]}", file=sys.stderr)
            return 3
        path = out_dir / f"census-M{order}.{args.format}"
        with open(path, "w", encoding="utf-8") as fh:
            writer(rows, fh)
        hits = sum(1 for r in rows if r.scherrer_equality)
        total += len(rows)
        extremal += hits
        print(f"order {order:>3}: {len(rows):>6} rows, {hits:>4} Scherrer-extremal -> {path}")
    print(f"total: {total} rows, {extremal} Scherrer-extremal")
    return 0


if __name__ == "__main__":
    sys.exit(main())
