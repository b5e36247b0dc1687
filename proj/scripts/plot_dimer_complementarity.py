"""P, Q and P + Q of the dimer chain from a field sweep or a (B, T) grid.

Usage:
  python scripts/plot_dimer_complementarity.py dimer_field.csv
  python scripts/plot_dimer_complementarity.py dimer_grid.csv
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def plot_field(rows, ax):
    ax.plot(rows["B"], rows["P"], label="P")
    ax.plot(rows["B"], rows["Q"], label="Q")
    ax.plot(rows["B"], rows["P_plus_Q"], ":", label="P + Q")
    ax.set_xlabel("B / J")
    ax.set_ylim(-0.05, 1.1)
    ax.set_title(f"T = {rows['T'].iloc[0]:g} J")
    ax.legend()


def plot_grid(rows, fig, ax):
    table = rows.pivot(index="T", columns="B", values="P_plus_Q")
    mesh = ax.pcolormesh(table.columns, table.index, table.values, shading="auto", vmin=0, vmax=1)
    fig.colorbar(mesh, ax=ax, label="P + Q")
    ax.set_xlabel("B / J")
    ax.set_ylabel("T / J")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", help="output of spinwit sweep-field or spinwit grid")
    parser.add_argument("-o", "--output", help="image file (default: CSV name with .png)")
    args = parser.parse_args()

    rows = pd.read_csv(args.csv)
    fig, ax = plt.subplots(figsize=(6, 4))
    if rows["T"].nunique() > 1:
        plot_grid(rows, fig, ax)
    else:
        plot_field(rows, ax)
    fig.tight_layout()
    fig.savefig(args.output or args.csv.rsplit(".", 1)[0] + ".png", dpi=150)


if __name__ == "__main__":
    main()
