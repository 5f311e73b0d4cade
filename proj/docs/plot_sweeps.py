#!/usr/bin/env python3
"""Plot the distance-sweep and surface CSVs produced by the steep CLI.

Usage:
    steep sweep-distance --mode fixed --out fixed.csv
    steep sweep-surface --out surface.csv
    python3 docs/plot_sweeps.py fixed.csv surface.csv
"""
import csv
import sys

import matplotlib.pyplot as plt


def plot_distance(path, ax):
    rows = list(csv.DictReader(open(path)))
    d = [float(r["d"]) for r in rows]
    ax.plot(d, [float(r["rs_hat_plus"]) for r in rows], label="rs_hat_plus")
    ax.plot(d, [float(r["rs_bar"]) for r in rows], label="rs_bar")
    ax.set_xlabel("d")
    ax.set_ylabel("bits per round-trip sample")
    ax.legend()


def plot_surface(path, ax):
    rows = list(csv.DictReader(open(path)))
    x = [float(r["p1_db"]) for r in rows]
    y = [float(r["c1_sq"]) for r in rows]
    z = [float(r["rs"]) for r in rows]
    sc = ax.scatter(x, y, c=z, s=4)
    ax.set_xlabel("p1 [dB]")
    ax.set_ylabel("c1_sq")
    plt.colorbar(sc, ax=ax, label="rs")


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    fig, axes = plt.subplots(1, len(sys.argv) - 1, figsize=(6 * (len(sys.argv) - 1), 4))
    if len(sys.argv) == 2:
        axes = [axes]
    for path, ax in zip(sys.argv[1:], axes):
        header = open(path).readline()
        if header.startswith("p1_db"):
            plot_surface(path, ax)
        else:
            plot_distance(path, ax)
    plt.tight_layout()
    plt.show()


if __name__ == "__main__":
    main()
