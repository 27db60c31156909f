#!/usr/bin/env python3
"""Exhaustive verdicts for short paths under strict and lax spectrum modes.

For each (n, m) the oracle searches the whole grid {1..G} and reports
whether any labeling with exactly m distinct edge sums exists.  This is
where the two readings of "m distinct constants" part ways: strict mode
needs (n-1)/m consecutive edges per constant, lax mode does not.
"""

import argparse
import time

from mmagic.oracle import brute_force_search

CASES = [(3, 1), (3, 2), (4, 1), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 2), (7, 3)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid", type=int, default=10)
    args = parser.parse_args()

    print(f"{'n':>3} {'m':>3}  {'strict':<15} {'lax':<15} seconds")
    for n, m in CASES:
        start = time.perf_counter()
        verdicts = [brute_force_search(n, m, args.grid, 2, mode, limit=1).verdict for mode in ("strict", "lax")]
        print(f"{n:>3} {m:>3}  {verdicts[0]:<15} {verdicts[1]:<15} {time.perf_counter() - start:.2f}")


if __name__ == "__main__":
    main()
