# -*- coding: utf-8 -*-

"""
Plot accuracy against attack ratio from a ``swe2 sweep`` or ``swe2 ablate`` CSV.

Usage::

    python scripts/plot_sweep.py sweep.csv sweep.png
    python scripts/plot_sweep.py ablation.csv ablation.png --metric macro_f1
"""

import csv
import argparse
from collections import OrderedDict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_curves(path: str, metric: str) -> "OrderedDict[str, list]":
    curves = OrderedDict()
    with open(path, "r", encoding="utf-8", newline="") as f:
        for row in csv.DictReader(f):
            name = row.get("variant", "swe2")
            curves.setdefault(name, []).append((float(row["ratio"]), float(row[metric])))
    return curves


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("csv")
    parser.add_argument("png")
    parser.add_argument("--metric", default="accuracy")
    args = parser.parse_args()

    fig, ax = plt.subplots(figsize=(6, 4))
    for name, points in read_curves(args.csv, args.metric).items():
        ratios, values = zip(*points)
        ax.plot(ratios, values, marker="o", label=name)
    ax.set_xlabel("attack ratio")
    ax.set_ylabel(args.metric)
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.png, dpi=150)


if __name__ == "__main__":
    main()
