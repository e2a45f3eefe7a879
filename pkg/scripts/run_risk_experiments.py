#!/usr/bin/env python3
"""Theoretical and Monte Carlo risk curves for the discrete Fourier models.

Desk scale by default (D=256, n=16); ``--full`` switches to the original
experiment size (D=1024, n=64, 100 runs, r = q in {0.3, 0.5, 1.0}).
Outputs land in --outdir as risk_curve_*.csv and mc_risk_*.csv.
"""

import argparse
from pathlib import Path

from fourier_minnorm.cli import main as cli_main


def run(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--full", action="store_true", help="original size: D=1024, n=64")
    ap.add_argument("--seed", type=int, default=2025)
    ap.add_argument("--trials", type=int, default=100)
    args = ap.parse_args(argv)

    D, n = (1024, 64) if args.full else (256, 16)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    for r in (0.3, 0.5, 1.0):
        tag = f"D{D}_n{n}_r{r}"
        rc = cli_main([
            "risk-curve", "-D", str(D), "-n", str(n),
            "--r-values", str(r), "--q-values", f"0.0,{r}",
            "--out", str(outdir / f"risk_curve_{tag}.csv"),
        ])
        assert rc == 0
        rc = cli_main([
            "mc-risk", "-D", str(D), "-n", str(n),
            "--r-values", str(r), "--q-values", f"0.0,{r}",
            "--trials", str(args.trials), "--seed", str(args.seed),
            "--out", str(outdir / f"mc_risk_{tag}.csv"),
        ])
        assert rc == 0


if __name__ == "__main__":
    run()
