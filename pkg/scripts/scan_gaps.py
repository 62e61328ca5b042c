#!/usr/bin/env python
"""Scan H(mn) - H(m) - H(n) over coprime pairs and print the tallies.

Example:
    python scripts/scan_gaps.py --max 500
"""

import argparse

from entropia import laws


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=300, help="scan m, n up to this bound")
    args = parser.parse_args()

    summary = laws.scan_product_inequality(args.max, args.max)
    total = summary.pairs
    print(f"coprime pairs with 2 <= m, n <= {args.max}: {total}")
    for rel in ("LESS", "EQUAL", "GREATER"):
        count = summary.counts[rel]
        print(f"  {rel:<8} {count:>10}  ({count / total:.4%})")
    if summary.witness_greater:
        m, n, gap = summary.witness_greater
        print(f"largest positive gap: ({m}, {n}) -> {gap:.6f}")
    if summary.witness_less:
        m, n, gap = summary.witness_less
        print(f"largest negative gap: ({m}, {n}) -> {gap:.6f}")
    for message in summary.violations:
        print(f"family-shape violation: {message}")
    return 1 if summary.violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
