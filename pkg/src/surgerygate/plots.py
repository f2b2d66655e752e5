"""Report rendering: delimited output plus matplotlib figures.

Every CLI subcommand can write its tabular results as CSV into a report
directory; commands with a natural per-Spin^c profile also render a
figure next to the table.  Figures are for human inspection only — all
exact values live in the CSV/JSON outputs.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def write_csv(path: Path, header: list[str], rows: list[list]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def correction_term_figure(
    path: Path, values: list[Fraction], title: str, ylabel: str = "d"
) -> Path:
    """Bar chart of one rational value per Spin^c index."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.5 * len(values)), 3.2))
    xs = range(len(values))
    ax.bar(xs, [float(v) for v in values], color="#4878d0")
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xticks(list(xs))
    ax.set_xlabel("Spin$^c$ index i")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def reduced_rank_figure(
    path: Path, points: list[tuple[Fraction, int]], title: str
) -> Path:
    """Stem plot of reduced homology ranks against absolute grading."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4.8, 3.2))
    if points:
        xs = [float(g) for g, _ in points]
        ys = [r for _, r in points]
        ax.stem(xs, ys, basefmt="k-")
        ax.set_ylim(0, max(ys) + 1)
    else:
        ax.text(0.5, 0.5, "HF_red = 0", ha="center", va="center")
        ax.set_ylim(0, 1)
    ax.set_xlabel("grading")
    ax.set_ylabel("rank")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def slope_pair_figure(path: Path, pairs: list[tuple[int, int]], title: str) -> Path:
    """Scatter of the admissible (p, q) candidate pairs."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    if pairs:
        ax.scatter([p for p, _ in pairs], [q for _, q in pairs], color="#d65f5f")
    ax.set_xlabel("p")
    ax.set_ylabel("q")
    ax.set_title(title)
    ax.grid(True, linewidth=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
