"""Matplotlib figures for matrices and sweep tables.

Figures are built on a bare :class:`~matplotlib.figure.Figure` (no pyplot
state) and saved under fixed rc settings, so an SVG written twice from the
same input is byte-identical.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib as mpl
import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Rectangle

DETERMINISTIC_RC = {
    "svg.hashsalt": "qudit-ineq",
    "svg.fonttype": "path",
    "font.family": "DejaVu Sans",
    "font.size": 9,
    "axes.linewidth": 0.8,
}

PARTS = {
    "abs": ("|entry|", np.abs),
    "real": ("Re entry", np.real),
    "imag": ("Im entry", np.imag),
}


def _save(fig, path):
    path = Path(path)
    metadata = {"Date": None} if path.suffix.lower() == ".svg" else None
    with mpl.rc_context(DETERMINISTIC_RC):
        fig.savefig(path, metadata=metadata)


def matrix_figure(m, part="abs", title=None) -> Figure:
    """Heat map of a matrix, one labelled rectangle per entry.

    Each cell is an SVG group with id ``cell-<row>-<col>`` (1-based).
    """
    label, fn = PARTS[part]
    a = np.asarray(m, dtype=np.complex128)
    values = fn(a)
    n = a.shape[0]
    if part == "abs":
        cmap = mpl.colormaps["viridis"]
        vmax = float(values.max()) or 1.0
        norm = mpl.colors.Normalize(0.0, vmax)
    else:
        cmap = mpl.colormaps["RdBu_r"]
        vmax = float(np.abs(values).max()) or 1.0
        norm = mpl.colors.Normalize(-vmax, vmax)

    with mpl.rc_context(DETERMINISTIC_RC):
        fig = Figure(figsize=(1.2 + 0.7 * n, 0.8 + 0.7 * n))
        ax = fig.add_subplot()
        for i in range(n):
            for j in range(n):
                v = float(values[i, j])
                rgba = cmap(norm(v))
                cell = Rectangle((j, i), 1, 1, facecolor=rgba, edgecolor="white", linewidth=0.5)
                cell.set_gid(f"cell-{i + 1}-{j + 1}")
                ax.add_patch(cell)
                lum = 0.299 * rgba[0] + 0.587 * rgba[1] + 0.114 * rgba[2]
                ax.text(j + 0.5, i + 0.5, f"{v:.3g}", ha="center", va="center", fontsize=7,
                        color="black" if lum > 0.5 else "white")
        ax.set_xlim(0, n)
        ax.set_ylim(n, 0)
        ax.set_aspect("equal")
        ticks = np.arange(n) + 0.5
        ax.set_xticks(ticks, [str(k) for k in range(1, n + 1)])
        ax.set_yticks(ticks, [str(k) for k in range(1, n + 1)])
        ax.tick_params(length=0)
        fig.colorbar(mpl.cm.ScalarMappable(norm=norm, cmap=cmap), ax=ax, label=label, shrink=0.8)
        if title:
            ax.set_title(title)
        fig.tight_layout()
    return fig


def plot_matrix(m, path, part="abs", title=None):
    _save(matrix_figure(m, part, title), path)


def sweep_figure(table) -> Figure:
    """Entropies and mutual information versus zero-row position, one panel per ordering."""
    pos = [r.zero_position for r in table.rows]
    with mpl.rc_context(DETERMINISTIC_RC):
        fig = Figure(figsize=(7.0, 3.0))
        axes = fig.subplots(1, 2, sharey=True)
        panels = (
            ("qubit x qutrit", "s_bp1", "i_bp1"),
            ("qutrit x qubit", "s_bp2", "i_bp2"),
        )
        for ax, (title, s_col, i_col) in zip(axes, panels):
            ax.plot(pos, table.column("s_total"), "o-", color="k", label=r"$S_\rho$")
            ax.plot(pos, table.column(s_col), "s-", color="tab:blue", label=r"$S_1+S_2$")
            ax.plot(pos, table.column(i_col), "^-", color="tab:red", label=r"$I$")
            ax.set_title(title)
            ax.set_xlabel("zero-row position")
            ax.set_xticks(pos)
            ax.grid(alpha=0.3)
        axes[0].set_ylabel("nats")
        axes[0].legend(frameon=False)
        fig.tight_layout()
    return fig


def plot_sweep(table, path):
    _save(sweep_figure(table), path)
