"""Window-extension diagnostics.

Before committing to a window extension, it helps to know how far apart in
time the edges around a typical node sit.  For two incident edges with
closed intervals [a1, b1] and [a2, b2] the gap statistic

    (max(b1, b2) - min(a1, a2) - (b1 - a1) - (b2 - a2)) / 2

is the smallest extension that makes the pair overlap (the halving accounts
for both intervals widening at once); zero or negative means they already
do.  Sampling this statistic over random nodes and incident edge pairs and
histogramming the result gives a quick picture of sensible extensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import InputTemporalGraph, TemporalGraph

__all__ = [
    "GapSamplingError",
    "LambdaHistogram",
    "format_histogram_csv",
    "pair_gap_statistic",
    "quantile_summary",
    "sample_gap_histogram",
]

QUANTILE_LEVELS = (0.5, 0.9, 0.99)


class GapSamplingError(ValueError):
    """Raised when no node offers two finite-interval incident edges."""


@dataclass
class LambdaHistogram:
    """Binned gap samples plus raw-sample quantiles."""

    bin_edges: np.ndarray
    counts: np.ndarray
    n_samples: int
    quantiles: dict[float, float]


def pair_gap_statistic(interval_a, interval_b) -> float:
    """Minimum extension making two closed finite intervals overlap.

    Degenerate [t, t] intervals stand in for time points.  Positive values
    are the required extension; values <= 0 mean the intervals already
    overlap.  Symmetric and translation invariant.  Infinite endpoints are
    outside the statistic's domain.
    """
    a1, b1 = float(interval_a[0]), float(interval_a[1])
    a2, b2 = float(interval_b[0]), float(interval_b[1])
    for x in (a1, b1, a2, b2):
        if not math.isfinite(x):
            raise ValueError("gap statistic is undefined for infinite endpoints")
    return 0.5 * (max(b1, b2) - min(a1, a2) - (b1 - a1) - (b2 - a2))


def _finite_incident(g) -> list[list[tuple[float, float, tuple[int, int]]]]:
    # per-node (start, end, endpoint-pair) entries over finite-interval
    # edges only; persistent edges never qualify
    if isinstance(g, InputTemporalGraph):
        n = g.num_nodes
        per_node: list[list[tuple[float, float, tuple[int, int]]]] = [[] for _ in range(n)]
        for u, v, a, b in g.interval_edges:
            entry = (a, b, (min(u, v), max(u, v)))
            per_node[u].append(entry)
            if v != u:
                per_node[v].append(entry)
        for u, v, t in g.point_edges:
            entry = (t, t, (min(u, v), max(u, v)))
            per_node[u].append(entry)
            if v != u:
                per_node[v].append(entry)
        return per_node
    if isinstance(g, TemporalGraph):
        per_node = [[] for _ in range(g.num_nodes)]
        for e in g.edges:
            if not (math.isfinite(e.start) and math.isfinite(e.end)):
                continue
            entry = (e.start, e.end, (min(e.u, e.v), max(e.u, e.v)))
            per_node[e.u].append(entry)
            if e.v != e.u:
                per_node[e.v].append(entry)
        return per_node
    raise TypeError(f"expected a temporal graph, got {type(g).__name__}")


def sample_gap_histogram(
    g,
    n_samples: int,
    bias_distinct_pairs: bool = False,
    seed: int = 0,
    bins="fd",
) -> LambdaHistogram:
    """Histogram the gap statistic over random incident edge pairs.

    Each draw picks a node uniformly among those with at least two
    finite-interval incident edges, then two of those edges uniformly
    without replacement.  With ``bias_distinct_pairs`` the two edges must
    join distinct endpoint pairs (nodes offering no such pair are not
    eligible).  Quantiles (0.5/0.9/0.99) come from the raw samples before
    binning; ``bins`` takes anything ``numpy.histogram_bin_edges`` accepts,
    defaulting to Freedman-Diaconis.

    Raises :class:`GapSamplingError` when no node is eligible.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    per_node = _finite_incident(g)
    if bias_distinct_pairs:
        eligible = [v for v, entries in enumerate(per_node) if len({e[2] for e in entries}) >= 2]
    else:
        eligible = [v for v, entries in enumerate(per_node) if len(entries) >= 2]
    if not eligible:
        raise GapSamplingError(
            "no node has two finite-interval incident edges"
            + (" between distinct endpoint pairs" if bias_distinct_pairs else "")
        )
    rng = np.random.default_rng(np.random.SeedSequence([seed, 0x10]))
    samples = np.empty(n_samples)
    for i in range(n_samples):
        entries = per_node[eligible[int(rng.integers(len(eligible)))]]
        first, second = _draw_pair(rng, entries, bias_distinct_pairs)
        samples[i] = pair_gap_statistic(first[:2], second[:2])
    quantiles = {lvl: float(np.quantile(samples, lvl)) for lvl in QUANTILE_LEVELS}
    bin_edges = np.histogram_bin_edges(samples, bins=bins)
    counts, _ = np.histogram(samples, bins=bin_edges)
    return LambdaHistogram(bin_edges, counts, n_samples, quantiles)


def _draw_pair(rng, entries, bias_distinct_pairs):
    if not bias_distinct_pairs:
        i, j = rng.choice(len(entries), size=2, replace=False)
        return entries[int(i)], entries[int(j)]
    for _ in range(64):
        i, j = rng.choice(len(entries), size=2, replace=False)
        if entries[int(i)][2] != entries[int(j)][2]:
            return entries[int(i)], entries[int(j)]
    # eligibility guarantees a qualifying pair exists; enumerate exactly
    combos = [
        (a, b)
        for idx, a in enumerate(entries)
        for b in entries[idx + 1 :]
        if a[2] != b[2]
    ]
    return combos[int(rng.integers(len(combos)))]


def format_histogram_csv(hist: LambdaHistogram) -> str:
    """CSV rows ``bin_start,bin_end,count``, one per bin."""
    lines = ["bin_start,bin_end,count"]
    for lo, hi, c in zip(hist.bin_edges[:-1], hist.bin_edges[1:], hist.counts):
        lines.append(f"{lo:.17g},{hi:.17g},{int(c)}")
    return "\n".join(lines) + "\n"


def quantile_summary(hist: LambdaHistogram) -> str:
    """One-line digest of the raw-sample quantiles."""
    parts = [f"q{int(lvl * 100)}={hist.quantiles[lvl]:.6g}" for lvl in QUANTILE_LEVELS]
    return f"n={hist.n_samples} " + " ".join(parts)
