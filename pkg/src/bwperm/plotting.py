"""Matplotlib figures written next to the TSV reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .frontier import Frontier  # noqa: E402


def plot_frontier(f: Frontier, path: str | Path, title: str | None = None) -> Path:
    """Staircase of max whites per black count; feasible pairs shaded."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(4.5, 4.0))
    blacks = list(range(len(f.maxw)))
    ax.fill_between(blacks, f.maxw, step="post", color="#bbbbbb", alpha=0.6, label="feasible")
    ax.step(blacks, f.maxw, where="post", color="black", lw=1.5)
    ax.scatter(*zip(*f.points()), color="black", s=18, zorder=3, label="Pareto points")
    ax.set_xlabel("black vertices b")
    ax.set_ylabel("max white vertices w")
    ax.set_xlim(-0.2, f.m + 0.2)
    ax.set_ylim(-0.2, f.m + 0.2)
    ax.set_aspect("equal")
    ax.grid(True, lw=0.4, alpha=0.5)
    ax.legend(loc="upper right", fontsize=8, frameon=False)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bench(timings: dict[str, Sequence[float]], path: str | Path, n: int) -> Path:
    path = Path(path)
    names = list(timings)
    fig, ax = plt.subplots(figsize=(5.0, 3.5))
    ax.boxplot([timings[k] for k in names], showmeans=True)
    ax.set_xticks(range(1, len(names) + 1), names)
    ax.set_yscale("log")
    ax.set_ylabel("wall clock per solve [s]")
    ax.set_title(f"solve paths, n = {n}", fontsize=10)
    ax.grid(True, axis="y", lw=0.4, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
