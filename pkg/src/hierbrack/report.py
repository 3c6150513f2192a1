"""Figure rendering for the stats/eval/coverage report paths."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .metrics import INDEX_BUCKETS, EncodingStats, Score


def render_stats_figure(stats: EncodingStats, scheme: str, path: str) -> None:
    """Index-bucket histogram plus a summary box, written as an image."""
    fig, ax = plt.subplots(figsize=(6, 4))
    values = [stats.index_histogram[b] for b in INDEX_BUCKETS]
    ax.bar(range(len(INDEX_BUCKETS)), values, color="#47667d")
    ax.set_xticks(range(len(INDEX_BUCKETS)))
    ax.set_xticklabels(INDEX_BUCKETS)
    ax.set_xlabel("max bracket index needed")
    ax.set_ylabel("% of trees")
    ax.set_ylim(0, 105)
    ax.set_title(f"scheme={scheme}")
    for x, v in enumerate(values):
        ax.text(x, v + 1.5, f"{v:.2f}", ha="center", fontsize=8)
    box = (
        f"labels={stats.distinct_labels}\n"
        f"trees={stats.n_trees} (skipped {stats.n_skipped})\n"
        f"rope thickness ≤ {stats.rope_thickness_max}"
    )
    ax.text(
        0.97, 0.95, box, transform=ax.transAxes, ha="right", va="top",
        fontsize=9, bbox=dict(boxstyle="round", fc="#f2f2f2", ec="#999999"),
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_score_figure(scores: dict[str, Score], title: str, path: str) -> None:
    """Grouped bars of UAS/LAS/UM/LM for one or more named score rows."""
    fig, ax = plt.subplots(figsize=(6, 4))
    metrics = ("UAS", "LAS", "UM", "LM")
    width = 0.8 / max(len(scores), 1)
    for i, (name, sc) in enumerate(scores.items()):
        vals = sc.as_percentages()
        xs = [m + i * width for m in range(len(metrics))]
        ax.bar(xs, vals, width=width, label=name)
        for x, v in zip(xs, vals):
            ax.text(x, v + 1.0, f"{v:.1f}", ha="center", fontsize=7, rotation=90)
    ax.set_xticks([m + 0.4 - width / 2 for m in range(len(metrics))])
    ax.set_xticklabels(metrics)
    ax.set_ylabel("%")
    ax.set_ylim(0, 112)
    ax.set_title(title)
    if len(scores) > 1:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
