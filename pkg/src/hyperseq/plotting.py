"""Figure rendering for the command line (files only, no display)."""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .points import PointSet


def save_scatter(points: PointSet, path: str, title: str | None = None) -> None:
    """Scatter the first two coordinates of a point set into an image file."""
    if points.s < 2:
        raise ValueError("scatter plots need at least two coordinates")
    values = points.fractions()
    xs = [float(v[0]) for v in values]
    ys = [float(v[1]) for v in values]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(xs, ys, s=12, color="black")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_aspect("equal")
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_profile(
    values: Sequence[int],
    target: Sequence[float | None],
    path: str,
    title: str | None = None,
) -> None:
    """Step plot of a quality profile next to the display-only reference curve."""
    ms = list(range(1, len(values) + 1))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.step(ms, list(values), where="mid", label="T(m)", color="black")
    ref = [(m, v) for m, v in zip(ms, target) if v is not None]
    if ref:
        ax.plot(
            [m for m, _ in ref],
            [v for _, v in ref],
            linestyle="--",
            color="gray",
            label="reference curve",
        )
    ax.set_xlabel("m")
    ax.set_ylabel("T")
    ax.legend()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def save_histogram(hist: Mapping[int, int], path: str, title: str | None = None) -> None:
    """Bar chart of a merit histogram."""
    rhos = sorted(hist)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(rhos, [hist[r] for r in rhos], color="gray", edgecolor="black")
    ax.set_xlabel("rho")
    ax.set_ylabel("count")
    ax.set_xticks(rhos)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
