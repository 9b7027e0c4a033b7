#!/usr/bin/env python3
"""Probe very small bases for off-diagonal intersections of b**x and log_b(x).

The bisectrix argument yields exactly one diagonal solution for 0 < b < 1,
but for b below exp(-e) ~ 0.0659 the decreasing exponential can cross its
inverse off the diagonal as well (a 2-cycle of x -> b**x).  This script
runs the brute-force oracle at two scan resolutions and freezes what it
finds into tests/data/uniqueness_probe.json, which the test suite then
holds the oracle to (self-consistency, not adjudication).

Usage: python scripts/uniqueness_probe.py [--base 0.05] [--out tests/data/uniqueness_probe.json]
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from expcross.compare import compare_with_closed_form


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--base", type=float, default=0.05)
    parser.add_argument("--samples", type=int, default=200000)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "tests" / "data" / "uniqueness_probe.json",
    )
    args = parser.parse_args()

    coarse = compare_with_closed_form(args.base, n=args.samples)
    fine = compare_with_closed_form(args.base, n=2 * args.samples)
    if len(coarse.oracle_roots) != len(fine.oracle_roots):
        print(
            f"WARNING: root count changed with resolution "
            f"({len(coarse.oracle_roots)} at n={args.samples}, "
            f"{len(fine.oracle_roots)} at n={2 * args.samples}); not frozen",
            file=sys.stderr,
        )
        return 1

    record = {
        "base": args.base,
        "x_max": coarse.x_max,
        "samples": args.samples,
        "root_count": len(coarse.oracle_roots),
        "oracle_roots": list(coarse.oracle_roots),
        "closed_form_roots": list(coarse.closed_form_roots),
        "count_mismatch": coarse.count_mismatch,
        "exp_minus_e_threshold": math.exp(-math.e),
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(record, indent=2) + "\n")

    print(f"base {args.base} (exp(-e) ~ {math.exp(-math.e):.6f})")
    print(f"oracle roots ({len(coarse.oracle_roots)}): {list(coarse.oracle_roots)}")
    print(f"closed-form diagonal roots: {list(coarse.closed_form_roots)}")
    print(f"count mismatch: {coarse.count_mismatch}")
    print(f"frozen to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
