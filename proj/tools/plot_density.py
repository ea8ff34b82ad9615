#!/usr/bin/env python3
"""Render density.csv (t, site, re, im, density) from a scenario run as a site-time map."""

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv", help="density.csv written by `nhls run ... --out DIR`")
    ap.add_argument("-o", "--output", default="density.png")
    ap.add_argument("--log", action="store_true", help="log colour scale")
    ap.add_argument("--sites", nargs=2, type=int, metavar=("LO", "HI"), help="site window")
    args = ap.parse_args()

    d = pd.read_csv(args.csv)
    if args.sites:
        d = d[(d.site >= args.sites[0]) & (d.site <= args.sites[1])]
    if d.empty:
        sys.exit("no rows to plot")
    grid = d.pivot(index="t", columns="site", values="density")
    z = grid.to_numpy()
    if args.log:
        z = np.log10(np.maximum(z, 1e-12))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    im = ax.imshow(
        z,
        origin="lower",
        aspect="auto",
        extent=[grid.columns.min(), grid.columns.max(), grid.index.min(), grid.index.max()],
        cmap="viridis",
    )
    ax.set_xlabel("site j")
    ax.set_ylabel("t")
    fig.colorbar(im, ax=ax, label="log10 |psi|^2" if args.log else "|psi|^2")
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
