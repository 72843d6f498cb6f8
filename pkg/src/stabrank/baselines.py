"""Pairwise-similarity stability: Spearman, Kuncheva and Jaccard baselines.

The classical recipe reduces a run set to a scalar by averaging a
similarity metric over all unordered pairs of lists:

    phi = 2 / (K(K-1)) * sum_{i<j} S(list_i, list_j)

Spearman's rank correlation applies to full rankings; the Kuncheva index
and the Jaccard index apply to equal-size top-k masks. Values are computed
exactly as defined: Spearman and Kuncheva go negative for strongly
discordant inputs and are deliberately not clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lists import FullRanking, RunSet, TopKMask, _require_valid


class MetricMismatchError(ValueError):
    """The requested similarity metric does not apply to this list kind."""


METRIC_KINDS = {
    "spearman": "full",
    "kuncheva": "topk",
    "jaccard": "topk",
}


def _ranks(x) -> np.ndarray:
    if isinstance(x, FullRanking):
        _require_valid(x)
        return np.asarray(x.ranks, dtype=np.int64)
    return np.asarray(x, dtype=np.int64)


def _mask(x) -> np.ndarray:
    if isinstance(x, TopKMask):
        _require_valid(x)
        return np.asarray(x.selected, dtype=np.int64)
    return np.asarray(x, dtype=np.int64)


def spearman(first, second) -> float:
    """Spearman's rank correlation between two full rankings.

    ``1 - 6 * sum (r_i - r'_i)^2 / (t (t^2 - 1))``: 1 for identical
    rankings, -1 for exactly reversed ones. Requires t >= 2.
    """
    a, b = _ranks(first), _ranks(second)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    t = a.shape[0]
    if t < 2:
        raise ValueError("Spearman correlation needs at least 2 features")
    d2 = int(np.sum((a - b) ** 2))
    return 1.0 - 6.0 * d2 / (t * (t * t - 1.0))


def kuncheva(first, second) -> float:
    """Chance-corrected overlap of two equal-size selection masks.

    ``(o*t - k^2) / (k * (t - k))`` with o the intersection size: 1 only
    for identical masks, about 0 for independent draws, negative when the
    overlap falls below the k^2/t chance level. Undefined at k = 0 or
    k = t (degenerate denominator).
    """
    a, b = _mask(first), _mask(second)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    t = a.shape[0]
    ka, kb = int(a.sum()), int(b.sum())
    if ka != kb:
        raise ValueError(f"masks select different counts: {ka} vs {kb}")
    k = ka
    if k == 0 or k == t:
        raise ValueError(f"Kuncheva index is undefined for k={k} of t={t}")
    o = int(np.sum(a & b))
    return (o * t - k * k) / (k * (t - k))


def jaccard(first, second) -> float:
    """Intersection over union of the selected features, in [0, 1]."""
    a, b = _mask(first), _mask(second)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    o = int(np.sum(a & b))
    union = int(np.sum(a | b))
    if union == 0:
        raise ValueError("Jaccard index is undefined for two empty masks")
    return o / union


@dataclass(frozen=True)
class PairwiseStability:
    """Mean pairwise similarity over a run set, optionally with the pairs."""

    metric_name: str
    phi: float
    pair_values: tuple[float, ...] | None = None


def pairwise_stability(
    run_set: RunSet, metric: str, include_pairs: bool = False
) -> PairwiseStability:
    """Average a similarity metric over all unordered pairs of a run set.

    ``metric`` is one of ``spearman`` (full rankings only), ``kuncheva`` or
    ``jaccard`` (topk masks only); a kind mismatch raises
    ``MetricMismatchError``. The mean uses compensated summation.
    """
    if metric not in METRIC_KINDS:
        raise ValueError(f"unknown metric {metric!r}, expected one of {sorted(METRIC_KINDS)}")
    required = METRIC_KINDS[metric]
    if run_set.kind != required:
        raise MetricMismatchError(
            f"metric {metric!r} applies to {required} run sets, got {run_set.kind!r}"
        )
    values = _pair_values(run_set, metric)
    phi = math.fsum(values) / len(values)
    return PairwiseStability(
        metric_name=metric,
        phi=phi,
        pair_values=tuple(values) if include_pairs else None,
    )


def _pair_values(run_set: RunSet, metric: str) -> np.ndarray:
    m = run_set.matrix.astype(np.float64)
    runs, t = m.shape
    iu = np.triu_indices(runs, 1)
    if metric == "spearman":
        gram = m @ m.T
        sq = np.diag(gram)
        d2 = sq[:, None] + sq[None, :] - 2.0 * gram
        pairs = 1.0 - 6.0 * d2 / (t * (t * t - 1.0))
        return pairs[iu]
    overlap = m @ m.T
    k = run_set.k
    if metric == "kuncheva":
        if k == t:
            raise ValueError(f"Kuncheva index is undefined for k={k} of t={t}")
        pairs = (overlap * t - k * k) / (k * (t - k))
        return pairs[iu]
    union = 2.0 * k - overlap
    return (overlap / union)[iu]
