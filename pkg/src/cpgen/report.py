"""Bar charts of audit counts, written straight to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIG_WIDTH = 6.4
GOLDEN = (5 ** 0.5 - 1) / 2


def plot_counts(counts, path, title=None):
    """One bar group per order, one bar per property combination.

    ``counts`` maps ``(order, key)`` to a count, as produced by
    ``AuditReport.counts()``.  Returns the path written.
    """
    orders = sorted({o for o, _ in counts})
    keys = sorted({k for _, k in counts})
    fig, ax = plt.subplots(figsize=(FIG_WIDTH, FIG_WIDTH * GOLDEN))
    if not keys:
        ax.text(0.5, 0.5, "no graphs", ha="center", va="center", transform=ax.transAxes)
    width = 0.8 / max(len(keys), 1)
    for j, key in enumerate(keys):
        xs = [i + (j - (len(keys) - 1) / 2) * width for i in range(len(orders))]
        ys = [counts.get((o, key), 0) for o in orders]
        bars = ax.bar(xs, ys, width=width, label=key)
        ax.bar_label(bars, fontsize=7)
    ax.set_xticks(range(len(orders)))
    ax.set_xticklabels([str(o) for o in orders])
    ax.set_xlabel("order")
    ax.set_ylabel("graphs")
    if title:
        ax.set_title(title)
    if keys:
        ax.legend(fontsize=7, frameon=False)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
