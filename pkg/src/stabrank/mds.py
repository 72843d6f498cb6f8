"""Visual stability analysis: pairwise list distances + classical MDS.

Every list is a point in feature space; plotting the points of several
algorithms in 2D makes stability visible (tight cluster = stable, scatter
= random). The default distance is the square root of the pairwise
Jensen-Shannon divergence between the lists' probability vectors, which is
a true metric and keeps the embedding well-posed. ``1 - similarity`` of
any pairwise baseline is available as an alternative, flagged as possibly
non-metric.

The projection is classical (Torgerson) MDS: double-center the squared
distances and take the top-2 eigenpairs, here via deterministic shifted
block power (orthogonal) iteration. Negative eigenvalues are clamped to
zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .baselines import METRIC_KINDS, MetricMismatchError, jaccard, kuncheva, spearman
from .divergence import js_pair
from .lists import RunSet
from .probability import run_probabilities


class MdsConvergenceError(RuntimeError):
    """The power-iteration eigensolver did not converge."""


DISTANCES = ("sqrt-js", "one-minus-spearman", "one-minus-kuncheva", "one-minus-jaccard")

_METRIC_FOR_DISTANCE = {
    "one-minus-spearman": spearman,
    "one-minus-kuncheva": kuncheva,
    "one-minus-jaccard": jaccard,
}


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric non-negative distances with per-point (label, run) tags."""

    d: np.ndarray
    labels: tuple[tuple[str, int], ...]

    def __post_init__(self):
        d = np.array(self.d, dtype=np.float64)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise ValueError("distance matrix must be square")
        if d.shape[0] != len(self.labels):
            raise ValueError("one label per point required")
        if not np.allclose(d, d.T, atol=1e-12):
            raise ValueError("distance matrix must be symmetric")
        if np.any(np.diag(d) != 0):
            raise ValueError("distance matrix diagonal must be zero")
        if np.any(d < 0):
            raise ValueError("distances must be non-negative")
        d.setflags(write=False)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "labels", tuple((str(a), int(b)) for a, b in self.labels))

    @property
    def n(self) -> int:
        return self.d.shape[0]


@dataclass(frozen=True)
class Embedding:
    """2D coordinates, the retained (clamped) eigenvalues and the stress."""

    coords: np.ndarray
    eigvals: tuple[float, float]
    stress: float


def distance_matrix(
    labeled_run_sets: Sequence[tuple[str, RunSet]], distance: str = "sqrt-js"
) -> DistanceMatrix:
    """Pairwise distances between all lists of several labeled run sets.

    All run sets must share kind, t and k. With the default ``sqrt-js``
    distance, identical lists sit at 0 and disjoint masks at sqrt(ln 2).
    """
    if distance not in DISTANCES:
        raise ValueError(f"unknown distance {distance!r}, expected one of {DISTANCES}")
    if not labeled_run_sets:
        raise ValueError("need at least one run set")
    kinds = {rs.kind for _, rs in labeled_run_sets}
    shapes = {(rs.t, rs.k) for _, rs in labeled_run_sets}
    if len(kinds) != 1:
        raise ValueError(f"mixed run set kinds: {sorted(kinds)}")
    if len(shapes) != 1:
        raise ValueError(f"mixed run set shapes (t, k): {sorted(shapes)}")
    kind = kinds.pop()
    if distance != "sqrt-js":
        required = METRIC_KINDS[distance.removeprefix("one-minus-")]
        if kind != required:
            raise MetricMismatchError(
                f"distance {distance!r} applies to {required} run sets, got {kind!r}"
            )

    labels = [
        (label, run) for label, rs in labeled_run_sets for run in range(rs.runs)
    ]
    n = len(labels)
    d = np.zeros((n, n))
    if distance == "sqrt-js":
        points = np.vstack([run_probabilities(rs) for _, rs in labeled_run_sets])
        for i in range(n):
            for j in range(i + 1, n):
                d[i, j] = d[j, i] = math.sqrt(max(0.0, js_pair(points[i], points[j])))
    else:
        metric = _METRIC_FOR_DISTANCE[distance]
        rows = np.vstack([rs.matrix for _, rs in labeled_run_sets])
        for i in range(n):
            for j in range(i + 1, n):
                d[i, j] = d[j, i] = max(0.0, 1.0 - metric(rows[i], rows[j]))
    return DistanceMatrix(d, tuple(labels))


def classical_mds(dm: DistanceMatrix, tol: float = 1e-10, max_iter: int = 10_000) -> Embedding:
    """Project a distance matrix to 2D via Torgerson double centering.

    Deterministic for a given input: the two dominant eigenpairs of
    ``B = -0.5 * J D^2 J`` come from shifted orthogonal (block power)
    iteration with a fixed starting block. Raises ``MdsConvergenceError``
    if the eigenpairs have not settled within ``max_iter`` iterations.
    """
    n = dm.n
    if n < 3:
        raise ValueError(f"need at least 3 points, got {n}")
    d2 = dm.d**2
    centerer = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * centerer @ d2 @ centerer
    b = 0.5 * (b + b.T)  # enforce symmetry against rounding

    eigvals, eigvecs = _top_eigenpairs(b, tol=tol, max_iter=max_iter)
    clamped = np.maximum(eigvals, 0.0)
    coords = eigvecs * np.sqrt(clamped)[np.newaxis, :]

    recon = np.sqrt(
        np.maximum(
            0.0,
            np.sum(coords**2, axis=1)[:, None]
            + np.sum(coords**2, axis=1)[None, :]
            - 2.0 * coords @ coords.T,
        )
    )
    denom = float(np.sum(dm.d**2))
    stress = math.sqrt(float(np.sum((dm.d - recon) ** 2)) / denom) if denom > 0 else 0.0
    return Embedding(coords=coords, eigvals=(float(clamped[0]), float(clamped[1])), stress=stress)


def _orthonormal_pair(block: np.ndarray) -> np.ndarray:
    """Gram-Schmidt orthonormalisation of two columns."""
    first = block[:, 0]
    norm = np.linalg.norm(first)
    if norm == 0.0:
        raise MdsConvergenceError("degenerate iterate (zero column)")
    first = first / norm
    second = block[:, 1] - (first @ block[:, 1]) * first
    norm = np.linalg.norm(second)
    if norm == 0.0:
        raise MdsConvergenceError("degenerate iterate (rank-deficient block)")
    return np.column_stack([first, second / norm])


def _eig_2x2(a: float, b: float, c: float):
    """Eigenpairs of [[a, b], [b, c]], eigenvalues descending."""
    if b == 0.0:
        if a >= c:
            return (a, c), np.eye(2)
        return (c, a), np.array([[0.0, 1.0], [1.0, 0.0]])
    half_gap = 0.5 * (a - c)
    disc = math.hypot(half_gap, b)
    hi = 0.5 * (a + c) + disc
    lo = 0.5 * (a + c) - disc
    # pick the better-conditioned eigenvector formula
    u = np.array([b, hi - a]) if abs(hi - a) >= abs(hi - c) else np.array([hi - c, b])
    u = u / np.linalg.norm(u)
    rotation = np.column_stack([u, [-u[1], u[0]]])
    return (hi, lo), rotation


def _top_eigenpairs(b: np.ndarray, tol: float, max_iter: int):
    """Two algebraically largest eigenpairs of a symmetric matrix.

    Orthogonal iteration on the shifted matrix ``B + shift*I`` (the
    Gershgorin shift makes it positive semidefinite, so the dominant
    eigenvalues are the algebraically largest) with a 2x2 Rayleigh-Ritz
    split per step; the block form keeps tied eigenvalues well-posed.
    Converged when both Ritz values have settled within ``tol`` and the
    eigenvector residuals are small.
    """
    n = b.shape[0]
    shift = float(np.max(np.sum(np.abs(b), axis=1)))
    if shift == 0.0:  # zero matrix: all eigenvalues 0
        return np.zeros(2), np.zeros((n, 2))
    shifted = b + shift * np.eye(n)
    block = _orthonormal_pair(np.random.default_rng(20).standard_normal((n, 2)))
    previous = None
    for _ in range(max_iter):
        block = _orthonormal_pair(shifted @ block)
        small = block.T @ shifted @ block
        ritz, rotation = _eig_2x2(float(small[0, 0]), float(small[0, 1]), float(small[1, 1]))
        vectors = block @ rotation
        if previous is not None and abs(ritz[0] - previous[0]) < tol and abs(
            ritz[1] - previous[1]
        ) < tol:
            residual = shifted @ vectors - vectors * np.array(ritz)[np.newaxis, :]
            if np.linalg.norm(residual, axis=0).max() <= 1e-8 * max(ritz[0], shift):
                return np.array(ritz) - shift, vectors
        previous = ritz
    raise MdsConvergenceError(f"eigenpairs did not converge within {max_iter} iterations")
