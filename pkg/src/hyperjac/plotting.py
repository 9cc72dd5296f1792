"""Figures written next to CLI reports (Agg backend, files only)."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .zeta import LPolynomial, _vp  # noqa: E402

__all__ = ["plot_newton_polygon", "plot_scan"]

_RC = {
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 120,
    "svg.hashsalt": "hyperjac",
}


def _save(fig, path):
    # no timestamps in the file so reruns are reproducible
    meta = {"Software": None} if str(path).endswith(".png") else {"Date": None}
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)


def plot_newton_polygon(L: LPolynomial, p: int, slopes, path, title: str = ""):
    """Valuation points of the L-polynomial and its lower hull."""
    k = 1
    while p**k < L.q:
        k += 1
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.5, 3.5))
        pts = [(i, Fraction(_vp(a, p), k)) for i, a in enumerate(L.coeffs) if a]
        ax.scatter([x for x, _ in pts], [float(y) for _, y in pts], color="0.3", zorder=3,
                   label="v_p(a_i) / log_p q")
        xs, ys = [0], [0.0]
        for s in slopes:
            xs.append(xs[-1] + 1)
            ys.append(ys[-1] + float(s))
        ax.plot(xs, ys, color="C3", lw=1.5, label="Newton polygon")
        ax.set_xlabel("i")
        ax.set_ylabel("valuation")
        ax.set_xticks(range(len(L.coeffs)))
        ax.set_title(title or f"q = {L.q}, slopes " + ", ".join(str(s) for s in slopes))
        ax.legend(frameon=False, fontsize=8)
        _save(fig, path)


def plot_scan(records, summary, path, title: str = ""):
    """Classification counts and the a1 distribution split by verdict."""
    with plt.rc_context(_RC):
        fig, (ax0, ax1) = plt.subplots(1, 2, figsize=(9, 3.5))
        classes = summary.to_dict()["classifications"]
        names = list(classes)
        ax0.bar(range(len(names)), [classes[n] for n in names], color=["0.6", "C0", "C3"])
        ax0.set_xticks(range(len(names)))
        ax0.set_xticklabels([n.replace("_", "\n") for n in names], fontsize=8)
        ax0.set_ylabel("curves")
        ss = Counter(r.l_poly[1] for r in records if r.classification.supersingular)
        ordinary = Counter(r.l_poly[1] for r in records if not r.classification.supersingular)
        keys = sorted(set(ss) | set(ordinary))
        ax1.bar(keys, [ordinary.get(a, 0) for a in keys], color="0.6", label="not supersingular")
        ax1.bar(keys, [ss.get(a, 0) for a in keys], bottom=[ordinary.get(a, 0) for a in keys],
                color="C0", label="supersingular")
        ax1.set_xlabel("a1 (coefficient of t in L)")
        ax1.legend(frameon=False, fontsize=8)
        fig.suptitle(title or f"{summary.separable} separable members, "
                     f"{summary.disagreements} disagreements")
        _save(fig, path)
