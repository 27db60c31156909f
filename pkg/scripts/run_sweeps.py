#!/usr/bin/env python3
"""Write the m-magic and bipolar m-magic sweep CSVs.

    python scripts/run_sweeps.py --m-range 3..8 --a-range 0..5 --out-dir results
"""

import argparse
import csv
import time
from pathlib import Path

from mmagic import Scheme
from mmagic.cli import SWEEP_HEADER, _range, sweep_rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m-range", type=_range, default=(3, 8))
    parser.add_argument("--a-range", type=_range, default=(0, 5))
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for scheme in (Scheme.M_MAGIC, Scheme.BIPOLAR_M_MAGIC):
        start = time.perf_counter()
        rows = sweep_rows(scheme, args.m_range, args.a_range)
        path = args.out_dir / f"sweep_{scheme.value}.csv"
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SWEEP_HEADER)
            writer.writerows(rows)
        failed = sum(r[-1] != "true" for r in rows)
        print(f"{scheme.value:16s} {len(rows):4d} rows, {failed} failed, "
              f"{time.perf_counter() - start:.2f}s -> {path}")


if __name__ == "__main__":
    main()
