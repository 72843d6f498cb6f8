"""Kullback-Leibler / Jensen-Shannon divergences and the stability score.

The stability of a run set is one minus its generalized Jensen-Shannon
divergence, normalised by the divergence a completely random generator of
the same shape would attain:

    s_js = 1 - d_js / d_star

so identical lists score 1 and random lists score about 0. All divergences
are reported in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lists import RunSet
from .probability import normalizer, run_probabilities


class SupportMismatchError(ValueError):
    """KL divergence is infinite: p has mass where q has none."""


def _as_prob_matrix(ps) -> np.ndarray:
    m = np.asarray(ps, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError("expected a sequence of probability vectors")
    return m


def kl(p, q) -> float:
    """Kullback-Leibler divergence ``sum_i p_i ln(p_i / q_i)`` in nats."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    mask = p > 0
    if np.any(q[mask] == 0):
        raise SupportMismatchError("p has probability mass where q has none")
    return math.fsum(p[mask] * np.log(p[mask] / q[mask]))


def js_pair(p, q) -> float:
    """Jensen-Shannon divergence of two distributions (symmetric, <= ln 2)."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    if np.array_equal(p, q):
        return 0.0
    m = 0.5 * (p + q)
    return 0.5 * (kl(p, m) + kl(q, m))


def js_multi(ps) -> float:
    """Generalized Jensen-Shannon divergence of K distributions.

    Mean KL divergence of each distribution from the entrywise mean;
    equals ``js_pair`` at K = 2, is invariant to input order, and is 0
    exactly when all distributions are identical. Terms are accumulated
    with exact (compensated) summation.
    """
    m = _as_prob_matrix(ps)
    runs = m.shape[0]
    if runs < 2:
        raise ValueError(f"need at least 2 distributions, got {runs}")
    if np.all(m == m[0]):
        return 0.0
    mean = m.mean(axis=0)
    mask = m > 0
    ratio = np.ones_like(m)
    np.divide(m, mean[np.newaxis, :], out=ratio, where=mask)
    terms = np.where(mask, m * np.log(ratio), 0.0)
    # feature-major accumulation; fsum is exact so the order only matters
    # for reproducibility of the intent
    return math.fsum(terms.T.ravel()) / runs


@dataclass(frozen=True)
class StabilityReport:
    """Stability of one run set: divergence, random baseline and score."""

    kind: str
    t: int
    k: int
    runs: int
    d_js: float
    d_star: float
    s_js: float


def js_stability(run_set: RunSet) -> StabilityReport:
    """Stability score of a run set in [0, 1].

    Maps every list to its probability vector, measures their generalized
    Jensen-Shannon divergence and normalises by the random baseline for
    the run set's shape. Raises ``DegenerateNormalizerError`` when that
    baseline is zero (e.g. topk masks with k = t).
    """
    d_star = normalizer(run_set.kind, run_set.t, run_set.k)
    d_js = js_multi(run_probabilities(run_set))
    score = 1.0 - d_js / d_star
    # mathematically in [0, 1]; rounding may leave it an ulp outside
    score = min(1.0, max(0.0, score))
    return StabilityReport(
        kind=run_set.kind,
        t=run_set.t,
        k=run_set.k,
        runs=run_set.runs,
        d_js=d_js,
        d_star=d_star,
        s_js=score,
    )
