"""Figure rendering for verification reports and closed-form tables.

Figures are written next to the delimited output when the CLI is given a
plot directory; rendering is headless (Agg backend).
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reporting import Report

RESIDUAL_FLOOR = 1e-17


def plot_report(report: Report, path: str) -> str:
    """Horizontal residual chart, one bar per relation, tolerance marked."""
    rows = report.rows
    labels = [row.provenance for row in rows]
    residuals = np.maximum([row.residual for row in rows], RESIDUAL_FLOOR)
    colors = ["#2a7e43" if row.passed else "#b0322a" for row in rows]

    height = max(2.5, 0.28 * len(rows) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ypos = np.arange(len(rows))
    ax.barh(ypos, residuals, color=colors)
    ax.set_yticks(ypos)
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    if rows:
        ax.axvline(rows[0].tolerance, color="k", ls="--", lw=1, label="tolerance")
        ax.legend(loc="lower right", fontsize=8)
    ax.set_xlabel("|residual|")
    ax.set_title(f"suite {report.suite}: relation residuals")
    ax.grid(axis="x", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_table(rows: list[dict], path: str) -> str:
    """Closed-form vs quadrature values and their residuals against r."""
    n_values = sorted({row["n"] for row in rows})
    fig, (ax_val, ax_res) = plt.subplots(
        2, 1, figsize=(8, 7), sharex=True, height_ratios=[2, 1]
    )
    for n in n_values:
        sub = [row for row in rows if row["n"] == n]
        sub.sort(key=lambda row: row["r"])
        rs = [row["r"] for row in sub]
        ax_val.plot(rs, [row["cos_closed"] for row in sub], "o-", label=f"cos closed n={n:g}")
        ax_val.plot(rs, [row["cos_quadrature"] for row in sub], "x--", label=f"cos quad n={n:g}")
        ax_val.plot(rs, [row["xsin_closed"] for row in sub], "s-", label=f"x sin closed n={n:g}")
        res_cos = np.maximum([row["cos_residual"] for row in sub], RESIDUAL_FLOOR)
        res_sin = np.maximum([row["xsin_residual"] for row in sub], RESIDUAL_FLOOR)
        ax_res.semilogy(rs, res_cos, "o-", label=f"cos n={n:g}")
        ax_res.semilogy(rs, res_sin, "s--", label=f"x sin n={n:g}")
    ax_val.set_ylabel("integral value")
    ax_val.legend(fontsize=7, ncol=2)
    ax_val.grid(alpha=0.3)
    ax_res.set_xlabel("r (denominator power is r+1)")
    ax_res.set_ylabel("|closed - quadrature|")
    ax_res.grid(alpha=0.3)
    ax_res.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path
