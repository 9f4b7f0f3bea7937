"""Figure rendering for the report paths.

Renders matplotlib figures to files next to the delimited exports: a
character-table heatmap (magnitude and phase panels) and a residual chart
for verification reports.  Import is kept out of the CLI fast path.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .characters import CharacterTable
from .verify import VerifyReport


def character_table_figure(table: CharacterTable, path: str) -> None:
    """Two-panel heatmap: |chi| and the root-of-unity exponent (masked at 0)."""
    n_rows = len(table.irreps)
    n_cols = len(table.classes)
    N = 1 << table.s
    scales = np.zeros((n_rows, n_cols))
    phases = np.full((n_rows, n_cols), np.nan)
    for i, row in enumerate(table.values):
        for j, cell in enumerate(row):
            if not cell.is_zero():
                scales[i, j] = cell.scale
                phases[i, j] = cell.exp / N
    fig, axes = plt.subplots(1, 2, figsize=(11, 4.5), constrained_layout=True)
    im0 = axes[0].imshow(scales, aspect="auto", cmap="viridis", interpolation="nearest")
    axes[0].set_title(f"|chi| (s={table.s})")
    fig.colorbar(im0, ax=axes[0], shrink=0.8)
    im1 = axes[1].imshow(
        np.ma.masked_invalid(phases),
        aspect="auto",
        cmap="twilight",
        vmin=0.0,
        vmax=1.0,
        interpolation="nearest",
    )
    axes[1].set_title("phase exponent / 2^s (zeros masked)")
    fig.colorbar(im1, ax=axes[1], shrink=0.8)
    for ax in axes:
        ax.set_xlabel("conjugacy class")
        ax.set_ylabel("irrep")
    fig.savefig(path, dpi=150)
    plt.close(fig)


_STATUS_COLORS = {"pass": "#2a9d3f", "fail": "#c62828", "skipped": "#9e9e9e"}


def verify_report_figure(report: VerifyReport, path: str) -> None:
    """Horizontal bar per check: worst residual where one exists, status color."""
    names = []
    values = []
    colors = []
    floor = 1e-17
    for check in report.checks:
        names.append(check.name)
        residual = None
        for key, value in check.details.items():
            if "residual" in key and isinstance(value, (int, float)):
                residual = max(float(value), floor)
        values.append(residual if residual is not None else floor)
        colors.append(_STATUS_COLORS.get(check.status, "#9e9e9e"))
    fig, ax = plt.subplots(figsize=(8, 0.32 * len(names) + 1.6), constrained_layout=True)
    ypos = np.arange(len(names))
    ax.barh(ypos, values, color=colors)
    ax.set_yticks(ypos)
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlim(floor, 1.0)
    ax.axvline(report.tolerance, color="#555555", linestyle="--", linewidth=0.8)
    ax.set_xlabel("worst residual (bars at floor carry no numeric residual)")
    ax.set_title(
        f"verification s={report.s} level={report.level}: "
        f"{'PASS' if report.passed else 'FAIL'}"
    )
    fig.savefig(path, dpi=150)
    plt.close(fig)
