"""Time the determinant engines on N(n) and write a CSV.

    python scripts/bench_engines.py --sizes 8,32,128,512,2048,10000 --out bench.csv
"""
import argparse
import csv
import sys

from pellmat.cli import DET_ENGINES, bench_rows

FIELDS = ["engine", "n", "status", "seconds", "digits", "agree"]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="8,16,32,64,128,256,1024,4096,10000")
    ap.add_argument("--engines", default=",".join(DET_ENGINES))
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--out", help="CSV path (stdout if omitted)")
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, FIELDS, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for row in bench_rows(sizes, args.engines.split(","), args.repeat):
            w.writerow(row)
            fh.flush()
    finally:
        if args.out:
            fh.close()


if __name__ == "__main__":
    main()
