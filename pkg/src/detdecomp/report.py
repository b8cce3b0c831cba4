"""Delimited tables and matplotlib figures for the rank-bound comparison."""

from __future__ import annotations

import io
from typing import Sequence

from .verify import BoundRow

MARK = "*"


def format_table(rows: Sequence[BoundRow], delimiter: str = ",") -> str:
    """Header ``n,B_n,C_n,marker``; marker is ``*`` where C_n <= B_n."""
    out = io.StringIO()
    out.write(delimiter.join(["n", "B_n", "C_n", "marker"]) + "\n")
    for r in rows:
        out.write(delimiter.join([str(r.n), str(r.bell), str(r.bound), MARK if r.marked else ""])
                  + "\n")
    return out.getvalue()


def plot_rank_bounds(rows: Sequence[BoundRow], path, title: str = None) -> None:
    """Write a log-scale B_n vs C_n figure to ``path`` (format from the suffix)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r.n for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, [r.bell for r in rows], "o-", label="Bell number $B_n$")
    ax.semilogy(ns, [r.bound for r in rows], "s-", label=r"$n!/2^{\lfloor (n-2)/2 \rfloor}$")
    marked = [r for r in rows if r.marked]
    if marked:
        ax.scatter([r.n for r in marked], [r.bound for r in marked], s=120,
                   facecolors="none", edgecolors="k", zorder=3, label=r"$C_n \leq B_n$")
    ax.set_xlabel("n")
    ax.set_ylabel("upper bound on rank(det$_n$)")
    ax.set_xticks(ns)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    # fixed metadata keeps repeated renders identical
    fig.savefig(path, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
