"""Nordhaus-Gaddum sums for single brooms: bounds and the values their witnesses reach.

Usage: python scripts/broom_ng.py [--max-n 12]
"""

import argparse

from weighted_avec.graph import broom_graph
from weighted_avec.nordhaus_gaddum import ng_bounds, ng_witnesses


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()
    print(f"{'n':>3}{'sum lower':>14}{'achieved':>14}{'sum upper':>14}{'achieved':>14}{'n(n-1)/2':>10}")
    for n in range(5, args.max_n + 1):
        b = broom_graph(n)
        r = ng_bounds(b)
        lo = ng_witnesses(b, "sum_lower").achieved
        hi = ng_witnesses(b, "sum_upper").achieved
        print(f"{n:>3}{r.sum_lower:>14.10f}{lo:>14.10f}{r.sum_upper:>14.6f}{hi:>14.6f}{n * (n - 1) // 2:>10}")


if __name__ == "__main__":
    main()
