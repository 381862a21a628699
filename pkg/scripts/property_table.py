#!/usr/bin/env python3
"""Print the closed-form classification next to the oracle verdicts for one field.

    python scripts/property_table.py --field f2 --max-n 6

One row per spec in the grid; columns are the oracle values, with a '!'
suffix wherever the closed form disagrees.
"""

from __future__ import annotations

import argparse

from edgeideals.sweep import SweepConfig, evaluate_spec, grid

COLUMNS = ("unmixed", "cm", "1-buchsbaum", "gorenstein", "almost_ci", "seq_cm", "chordal", "tight")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", default="q")
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    cfg = SweepConfig(max_n=args.max_n, fields=(args.field,), l_values=(1,), r_values=(2,))

    print(f"{'s':>2} {'sides':<14}" + "".join(f"{c:>13}" for c in COLUMNS))
    for spec in grid(cfg):
        (rec,), _ = evaluate_spec(spec, cfg)
        cells = []
        for c in COLUMNS:
            chk = rec["checks"].get(c)
            if chk is None:
                cells.append(f"{'-':>13}")
            else:
                mark = "" if chk["agree"] else "!"
                cells.append(f"{str(chk['oracle']) + mark:>13}")
        print(f"{spec.s:>2} {','.join(map(str, spec.sides)):<14}" + "".join(cells))


if __name__ == "__main__":
    main()
