"""Rank-to-probability mappings and the random-baseline divergence.

Each list kind induces a probability distribution over the t features:

* full ranking: ``p_i = (1/2t) * (1 + sum_{m=rank_i}^{t} 1/m)`` -- a smooth
  weight that decreases with rank and sums to one by construction.
* partial ranking: same form with k in place of t on the ranked features,
  0 elsewhere.
* top-k mask: uniform ``1/k`` on the selected features, 0 elsewhere.

The random baseline ``normalizer(kind, t, k)`` is the divergence a
completely random generator attains against the uniform mean distribution;
it depends only on the shape (kind, t, k) and normalises the stability
score. Natural logarithms throughout; ``0 * ln 0`` is taken as 0.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .lists import FullRanking, PartialRanking, RunSet, TopKMask, _require_valid


class DegenerateNormalizerError(ValueError):
    """The random-baseline divergence is zero, so stability is undefined."""


@lru_cache(maxsize=64)
def _rank_weights(n: int) -> np.ndarray:
    """Probability assigned to ranks 1..n of an n-long ranked list.

    ``w[r-1] = (1/2n) * (1 + H_n - H_{r-1})`` with H the harmonic numbers.
    The array is cached per n and frozen (initialise once, read many).
    """
    h = np.cumsum(1.0 / np.arange(1, n + 1))
    tail = h[-1] - np.concatenate(([0.0], h[:-1]))  # sum_{m=r}^{n} 1/m
    w = (1.0 + tail) / (2.0 * n)
    w.setflags(write=False)
    return w


def prob_of_rank(rank: int, t: int) -> float:
    """Probability a full ranking over t features assigns to ``rank``."""
    if not 1 <= rank <= t:
        raise ValueError(f"rank {rank} out of range 1..{t}")
    return float(_rank_weights(t)[rank - 1])


def map_full(ranking: FullRanking) -> np.ndarray:
    """Map a full ranking to its probability vector (sums to one)."""
    _require_valid(ranking)
    ranks = np.asarray(ranking.ranks, dtype=np.int64)
    return _rank_weights(ranking.t)[ranks - 1]


def map_partial(partial: PartialRanking) -> np.ndarray:
    """Map a partial ranking to probabilities: ranked features get the
    k-long rank weights, unranked features get exactly 0."""
    _require_valid(partial)
    ranks = np.asarray(partial.ranks, dtype=np.int64)
    table = np.concatenate(([0.0], _rank_weights(partial.k)))
    return table[ranks]


def map_topk(mask: TopKMask) -> np.ndarray:
    """Map a selection mask to the uniform distribution over its k features."""
    _require_valid(mask)
    return np.asarray(mask.selected, dtype=np.float64) / mask.k


def run_probabilities(run_set: RunSet) -> np.ndarray:
    """Map every list of a run set; returns a (K, t) row-stochastic matrix."""
    m = run_set.matrix
    if run_set.kind == "full":
        return _rank_weights(run_set.t)[m - 1]
    if run_set.kind == "partial":
        table = np.concatenate(([0.0], _rank_weights(run_set.k)))
        return table[m]
    return m / float(run_set.k)


def normalizer(kind: str, t: int, k: int | None = None) -> float:
    """Divergence attained by a completely random generator of this shape.

    Closed form ``ln(t/k)`` for the topk kind; otherwise the exact sum
    ``sum_r w_r * ln(w_r * t)`` over the kind's nonzero rank weights.

    Raises ``DegenerateNormalizerError`` when the value is zero (topk with
    k = t, or a single-feature ranking), since the stability score divides
    by it.
    """
    if kind == "full":
        if k is None:
            k = t
        if k != t:
            raise ValueError(f"full kind requires k == t, got k={k}, t={t}")
    elif kind in ("partial", "topk"):
        if k is None:
            raise ValueError(f"{kind} kind requires k")
        if not 1 <= k <= t:
            raise ValueError(f"k={k} out of range 1..{t}")
    else:
        raise ValueError(f"unknown kind {kind!r}")

    if kind == "topk":
        value = math.log(t) - math.log(k)
    else:
        w = _rank_weights(k)
        value = math.fsum(w * np.log(w * t))
    if value <= 0.0:
        raise DegenerateNormalizerError(
            f"random-baseline divergence is 0 for kind={kind}, t={t}, k={k}; "
            "stability is undefined"
        )
    return value
