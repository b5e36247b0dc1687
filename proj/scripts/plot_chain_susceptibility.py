"""Per-site susceptibility of a chain against the s/(3T) threshold.

Usage: python scripts/plot_chain_susceptibility.py chain_half.csv [--spin 1/2] [-o chain_half.png]
"""

import argparse
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", help="output of spinwit sweep-temperature")
    parser.add_argument("--spin", default="1/2", help="spin length used in the run (for the label)")
    parser.add_argument("-o", "--output", help="image file (default: CSV name with .png)")
    args = parser.parse_args()

    rows = pd.read_csv(args.csv)
    s = Fraction(args.spin)
    flagged = rows[rows["entangled"]]

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(rows["T"], rows["per_site_chi"], label=r"$\chi_z / N$")
    ax.plot(rows["T"], rows["per_site_threshold"], "--", label=rf"$s/(3T)$, $s={s}$")
    ax.scatter(flagged["T"], flagged["per_site_chi"], s=8, color="tab:red", label="witness flags entanglement")
    ax.set_xlabel("T / J")
    ax.set_ylabel(r"$\chi$ per site")
    ax.set_ylim(0, 1.5 * rows["per_site_chi"].max())
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output or args.csv.rsplit(".", 1)[0] + ".png", dpi=150)


if __name__ == "__main__":
    main()
