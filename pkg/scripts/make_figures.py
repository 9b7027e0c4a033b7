#!/usr/bin/env python3
"""Emit the five canned figure datasets as CSV files.

Usage: python scripts/make_figures.py [--out-dir figures] [--samples 400]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from expcross.figures import FIGURE_NAMES, figure_samples, write_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("figures"))
    parser.add_argument("--samples", type=int, default=400)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name in FIGURE_NAMES:
        rows = figure_samples(name, args.samples)
        path = args.out_dir / f"{name}.csv"
        with open(path, "w", newline="") as stream:
            write_csv(rows, stream)
        print(f"wrote {path} ({len(rows)} samples)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
