#!/usr/bin/env python3
"""Rate-bound slack table and concentration tail check.

Sweeps the validity domain of the asymptotic bound (q = r > 1/2, l >= 2)
and runs the empirical deviation-frequency experiment against the
sub-Gaussian tail bound at multiples of T_q.
"""

import argparse
from pathlib import Path

from fourier_minnorm.cli import main as cli_main


def run(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--seed", type=int, default=2025)
    ap.add_argument("--trials", type=int, default=2000)
    args = ap.parse_args(argv)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    rc = cli_main([
        "bound-check",
        "--r-values", "0.6,0.75,1.0,1.5",
        "--n-values", "8,16,32",
        "--l-values", "2,4",
        "--tau-multipliers", "2,4",
        "--out", str(outdir / "bound_check.csv"),
    ])
    assert rc == 0

    rc = cli_main([
        "concentration", "-D", "256", "-n", "16", "-p", "32",
        "--r", "1.0", "--q", "1.0",
        "--t-multipliers", "0.5,1,2",
        "--trials", str(args.trials), "--seed", str(args.seed),
        "--out", str(outdir / "concentration.csv"),
    ])
    assert rc == 0


if __name__ == "__main__":
    run()
