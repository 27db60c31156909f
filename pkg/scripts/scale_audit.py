#!/usr/bin/env python3
"""Check the d tables: for which admissible (n, m) do labels leave (0, 1]?

For every n up to --max-n and every m with m | (n - 1) and 2m + 1 <= n, the
generator runs at the tabulated scale and any LabelRangeError is counted.
Prints the first failing n per family, and per band the largest label seen
relative to 1.
"""

import argparse
from collections import defaultdict

from mmagic import scale_band
from mmagic.constructions import bipolar_m_magic_units, m_magic_units


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=2000)
    parser.add_argument("--max-m", type=int, default=None, help="cap on m (default: all admissible)")
    args = parser.parse_args()

    for kind, units in (("anti-fuzzy", m_magic_units), ("bipolar", bipolar_m_magic_units)):
        failures = []
        worst = defaultdict(float)
        for n in range(3, args.max_n + 1):
            p = scale_band(n, kind)
            top = (n - 1) // 2 if args.max_m is None else min(args.max_m, (n - 1) // 2)
            for m in range(1, top + 1):
                if (n - 1) % m:
                    continue
                sigma, mu = units(n, m)
                largest = max(max(sigma), max(mu))
                worst[p] = max(worst[p], largest / 10**p)
                if largest > 10**p:
                    failures.append((n, m, p, largest))
        print(f"{kind}: {len(failures)} failing (n, m) pairs up to n = {args.max_n}")
        for n, m, p, largest in failures[:5]:
            print(f"  n={n} m={m} p={p}: largest label {largest} units > {10**p}")
        for p in sorted(worst):
            print(f"  p={p}: largest label / 1 = {worst[p]:.3f}")


if __name__ == "__main__":
    main()
