"""Matplotlib figures for perimeter tables and verification reports.

Figures are written straight to files with the Agg backend, so nothing here
needs a display.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .context import TessContext  # noqa: E402
from .perimeter import epsilon, epsilon_center, pmin  # noqa: E402

__all__ = ["plot_pmin", "plot_epsilon", "write_report_figures"]

REFINED_BAND = 2.6


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_pmin(ctx: TessContext, n_from: int, n_to: int, path) -> Path:
    """pmin(n) with the slope (p - 2 - 2/beta) line for hyperbolic signatures."""
    ns = list(range(n_from, n_to + 1))
    fig, ax = plt.subplots(figsize=(7, 4.2))
    ax.step(ns, [pmin(ctx, n) for n in ns], where="mid", lw=1.2, label="minimal perimeter")
    if ctx.is_hyperbolic:
        slope = float(ctx.p - 2 - 2 / ctx.beta)
        ax.plot(ns, [slope * n for n in ns], "--", lw=0.9, color="grey", label=f"{slope:.4f} n")
    ax.set_xlabel("tiles n")
    ax.set_ylabel("perimeter")
    ax.set_title(f"{{{ctx.p},{ctx.q}}}")
    ax.legend(frameon=False)
    return _save(fig, path)


def plot_epsilon(ctx: TessContext, n_to: int, path, n_from: int | None = None) -> Path:
    """Error term against n, with the global and asymptotic bands."""
    ctx.require_hyperbolic()
    lo = max(ctx.p * (ctx.q - 2) + 1, n_from or 0)
    ns = list(range(lo, n_to + 1))
    centre = float(epsilon_center(ctx))
    fig, ax = plt.subplots(figsize=(7, 4.2))
    ax.plot(ns, [float(epsilon(ctx, n)) for n in ns], ".", ms=2.5, label="epsilon(n)")
    for y in (0, 22):
        ax.axhline(y, color="black", lw=0.8)
    ax.axhline(centre, color="tab:red", lw=0.9, label=f"centre {centre:.3f}")
    for y in (centre - REFINED_BAND, centre + REFINED_BAND):
        ax.axhline(y, color="tab:red", lw=0.8, ls=":")
    ax.axvline(ctx.n_k(4), color="grey", lw=0.7, ls="--", label="n_4")
    ax.set_xscale("log")
    ax.set_xlabel("tiles n")
    ax.set_ylabel("epsilon")
    ax.set_title(f"{{{ctx.p},{ctx.q}}} error term")
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)


def write_report_figures(ctx: TessContext, n_max: int, out_dir) -> list[Path]:
    out = Path(out_dir)
    tag = f"{ctx.p}_{ctx.q}"
    paths = [plot_pmin(ctx, 1, min(n_max, 400), out / f"pmin_{tag}.png")]
    if ctx.is_hyperbolic and n_max > ctx.p * (ctx.q - 2):
        paths.append(plot_epsilon(ctx, n_max, out / f"epsilon_{tag}.png"))
    return paths
