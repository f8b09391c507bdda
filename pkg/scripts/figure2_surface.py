"""Divergence surface over an (alpha, lambda) grid for one binomial pair."""
import argparse
import sys

import numpy as np

from geoskew.cli import load_source, sweep_rows, write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figure2.csv")
    ap.add_argument("--alpha-min", type=float, default=-5.0)
    ap.add_argument("--alpha-max", type=float, default=10.0)
    ap.add_argument("--steps", type=int, default=61)
    args = ap.parse_args(argv)
    p, q = load_source("binomial:10:0.3"), load_source("binomial:10:0.7")
    alphas = np.round(np.linspace(args.alpha_min, args.alpha_max, args.steps), 12).tolist()
    lams = np.round(np.linspace(0.0, 1.0, 51), 12).tolist()
    rows = list(sweep_rows(alphas, lams, p, q))
    write_csv(args.out, ("alpha", "lambda", "divergence"), rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
