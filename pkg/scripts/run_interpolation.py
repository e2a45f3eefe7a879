#!/usr/bin/env python3
"""Function-interpolation panels: 1-D stage and cubic targets, 2-D cosine.

1-D (n=15, D=1000): least squares at p in {1, 7, 15}, then full-width plain
and weighted min-norm fits (q=1.5 for the stage target, q=2 for the cubic;
the cubic also gets a noisy variant with sigma = 0.1, about a tenth of its
amplitude).  2-D cosine (n=10 per axis): least squares at p=3 per axis and
min-norm fits at p=41 per axis with q in {1, 2, 4}.
"""

import argparse
from pathlib import Path

from fourier_minnorm.cli import main as cli_main


def run(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--seed", type=int, default=2025)
    args = ap.parse_args(argv)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    def interp(out, *extra):
        rc = cli_main(["interp", "--out", str(outdir / out), *extra])
        assert rc == 0

    for target, q in (("stage1d", 1.5), ("cubic1d", 2.0)):
        for p in (1, 7, 15):
            interp(f"{target}_ls_p{p}", "--target", target, "--n-axis", "15",
                   "--p-axis", str(p), "--d-axis", "1000", "--q", str(q),
                   "--methods", "least-squares", "--eval-points", "1000")
        interp(f"{target}_minnorm", "--target", target, "--n-axis", "15",
               "--p-axis", "1000", "--d-axis", "1000", "--q", str(q),
               "--methods", "weighted-min-norm,plain-min-norm", "--eval-points", "1000")

    interp("cubic1d_noisy_minnorm", "--target", "cubic1d", "--n-axis", "15",
           "--p-axis", "1000", "--d-axis", "1000", "--q", "2.0",
           "--noise-sigma", "0.1", "--seed", str(args.seed),
           "--methods", "weighted-min-norm,plain-min-norm", "--eval-points", "1000")

    interp("cos2d_ls_p3", "--target", "cos2d", "--n-axis", "10", "--p-axis", "3",
           "--d-axis", "100", "--q", "2.0", "--methods", "least-squares",
           "--eval-points", "101")
    for q in ("1.0", "2.0", "4.0"):
        interp(f"cos2d_minnorm_q{q}", "--target", "cos2d", "--n-axis", "10",
               "--p-axis", "41", "--d-axis", "100", "--q", q,
               "--methods", "weighted-min-norm,plain-min-norm", "--eval-points", "101")


if __name__ == "__main__":
    run()
