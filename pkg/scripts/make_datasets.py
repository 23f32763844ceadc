"""Dump the benchmark datasets to CSV files for use with the CLI.

Writes wisconsin.csv, iris.csv, and digits.csv (scikit-learn's bundled
copies) into the given directory, each with named feature columns and a
final ``class`` column.

Usage: python scripts/make_datasets.py [--out-dir data]
"""

import argparse
import csv
from pathlib import Path

from sklearn.datasets import load_breast_cancer, load_digits, load_iris


def dump(name, data, out_dir):
    names = getattr(data, "feature_names", None)
    if names is None:
        names = [f"f{i}" for i in range(data.data.shape[1])]
    path = out_dir / f"{name}.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([str(n).replace(" ", "_") for n in names] + ["class"])
        for row, label in zip(data.data, data.target):
            writer.writerow([repr(float(v)) for v in row] + [int(label)])
    print(f"wrote {path} ({len(data.target)} rows, {data.data.shape[1]} features)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="data", help="output directory")
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    dump("wisconsin", load_breast_cancer(), out_dir)
    dump("iris", load_iris(), out_dir)
    dump("digits", load_digits(), out_dir)


if __name__ == "__main__":
    main()
