"""Divergence from a fixed Gaussian to a family with growing mean and variance."""
import argparse
import sys

from geoskew.cli import main as cli_main


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figure4.csv")
    ap.add_argument("--count", type=int, default=10)
    args = ap.parse_args(argv)
    return cli_main(["gaussian-sweep", "--count", str(args.count), "--out", args.out])


if __name__ == "__main__":
    sys.exit(main())
