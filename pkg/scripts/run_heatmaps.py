#!/usr/bin/env python3
"""Heat-map sheets of theoretical risks over (r, p).

One sheet with the matched weighting q = r and one with the plain
estimator q = 0, per sample count.  Desk scale uses D=256 and n=16;
``--full`` reproduces D=1024 with n in {16, 64, 128} and r from 0 to 2
in steps of 0.1.
"""

import argparse
from pathlib import Path

from fourier_minnorm.cli import main as cli_main


def run(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--full", action="store_true")
    args = ap.parse_args(argv)

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    D = 1024 if args.full else 256
    n_list = (16, 64, 128) if args.full else (16,)
    r_values = ",".join(f"{0.1 * i:.1f}" for i in range(21))

    for n in n_list:
        base = ["heatmap", "-D", str(D), "-n", str(n), "--r-values", r_values]
        rc = cli_main(base + ["--q-rule", "match-r",
                              "--out", str(outdir / f"heatmap_weighted_D{D}_n{n}.csv")])
        assert rc == 0
        rc = cli_main(base + ["--q-rule", "fixed", "--q-fixed", "0.0",
                              "--out", str(outdir / f"heatmap_plain_D{D}_n{n}.csv")])
        assert rc == 0


if __name__ == "__main__":
    run()
