#!/usr/bin/env python3
"""Run the verification sweep on the full default grid and write JSONL.

    python scripts/run_sweep.py --out results/sweep.jsonl --jobs 4

Prints a per-property agreement table and exits 1 if any record disagrees.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from edgeideals.sweep import SweepConfig, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/sweep.jsonl")
    ap.add_argument("--jobs", type=int, default=None)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--perturb", action="store_true", help="flip the balance rule (harness self-test)")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    cfg = SweepConfig(max_n=args.max_n, jobs=args.jobs, out=args.out, perturb=args.perturb)
    t0 = time.perf_counter()
    summary, _ = run_sweep(cfg, progress=lambda label: logging.info("done %s", label))
    elapsed = time.perf_counter() - t0

    width = max(len(k) for k in summary.per_property)
    print(f"{'check':<{width}}  agree  disagree")
    for name, (yes, no) in sorted(summary.per_property.items()):
        print(f"{name:<{width}}  {yes:5d}  {no:8d}")
    print(f"\n{summary.specs} specs, {summary.records} records, "
          f"{summary.disagreements} disagreements, {len(summary.field_mismatches)} field mismatches, "
          f"{elapsed:.1f}s -> {args.out}")
    return 0 if summary.ok else 1


if __name__ == "__main__":
    sys.exit(main())
