#!/usr/bin/env python3
"""Run the non-convergent Cauchy-sequence experiment and print the gap table.

Defaults reproduce the 1x2 worked example with seed [1, 2]; the gap
column should match the closed form to ~1e-15 relative.
"""

import argparse
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from semitensor import (
    CauchyConfig,
    FLOAT64,
    cauchy_sequence,
    fill_value,
    from_rows,
    gap_reports,
    nonconvergence_probe,
    tail_bound,
)
from semitensor.io import gap_reports_to_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a1", default="[[1, 2]]", help="seed matrix as a JSON array, all nonzero")
    ap.add_argument("--nmax", type=int, default=7, help="sequence length (<= 9)")
    ap.add_argument("--out", default=None, help="also write the gap table as CSV")
    args = ap.parse_args()

    rows = json.loads(args.a1)
    if rows and not isinstance(rows[0], list):
        rows = [rows]
    seq = cauchy_sequence(CauchyConfig(from_rows(rows, FLOAT64), args.nmax))
    p, q = seq[0].rep.shape

    reports = gap_reports(seq)
    print(f"{'n':>2} {'size':>9} {'gap measured':>16} {'gap predicted':>16} {'rel err':>10}")
    for r in reports:
        print(
            f"{r.n:>2} {r.rows:>4}x{r.cols:<4} {r.gap_measured:>16.9e} "
            f"{r.gap_predicted:>16.9e} {r.rel_err:>10.2e}"
        )

    gaps = [r.gap_measured for r in reports]
    for n in range(1, len(seq)):
        bound = tail_bound(n, p, q)
        print(f"tail from n={n}: sum of gaps {sum(gaps[n - 1:]):.6e} <= bound {bound:.6e}")

    for m in range(1, len(seq) - 1):
        values = nonconvergence_probe(seq, m)
        floor = fill_value(m + 1)
        print(
            f"probe m={m}: distances {['%.4e' % v for v in values]} "
            f"all > {floor:.4e}: {all(v > floor for v in values)}"
        )

    if args.out:
        Path(args.out).write_text(gap_reports_to_csv(reports))
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
