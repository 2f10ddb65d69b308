"""Closed-form avec_min / avec_max next to local-search estimates.

Usage: python scripts/extremes_table.py [--max-n 7] [--restarts 20] [--seed 42]
"""

import argparse

from weighted_avec import families
from weighted_avec.extremal import closed_form_bounds
from weighted_avec.graph import is_tree
from weighted_avec.optimizer import local_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--graphs", action="store_true", help="also run connected non-trees (n <= 5)")
    args = ap.parse_args()

    print(f"{'kind':<8}{'n':>3}{'m':>4}  {'min (closed)':>14}{'min (search)':>14}{'max (closed)':>14}{'max (search)':>14}")
    pool = [g for n in range(2, args.max_n + 1) for g in families.trees(n)]
    if args.graphs:
        pool += [g for n in range(3, min(args.max_n, 5) + 1) for g in families.connected_nontrees(n)]
    for g in pool:
        lo, hi = closed_form_bounds(g)
        smin = local_search(g, "min", args.restarts, args.seed).best_value
        smax = local_search(g, "max", args.restarts, args.seed).best_value
        kind = "tree" if is_tree(g) else "graph"
        print(f"{kind:<8}{g.n:>3}{g.m:>4}  {lo:>14.8f}{smin:>14.8f}{hi:>14.8f}{smax:>14.8f}")


if __name__ == "__main__":
    main()
