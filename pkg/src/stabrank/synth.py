"""Seeded generators for controlled stability experiments.

Four scenario families, each returning one ``RunSet``:

* ``gen_ranking_family`` -- ``fixed`` identical full rankings plus
  ``runs - fixed`` independent uniform ones (from fully random at
  fixed=0 to fully stable at fixed=runs).
* ``gen_subset_family``  -- the same rankings cut to top-k masks.
* ``gen_overlap_family`` -- partial lists sharing a common core of
  ``overlap`` features; ``lam`` slides the run-specific features from the
  bottom ranks (lam=0) to the top ranks (lam=1) while the selected sets
  stay identical across lam for a given seed.
* ``gen_rank_shuffle_family`` -- all runs select the same k features;
  ``q`` is the fraction of rank positions re-drawn per run, from identical
  rankings (q=0) to independently shuffled ones (q=1).

Randomness comes from numpy's PCG64 generator. Per-run streams are derived
by ``SeedSequence(seed).spawn``: child 0 drives the shared arrangement,
child j+1 drives run j. Identical configs therefore reproduce bit-identical
run sets, and the stream layout is part of the golden-file contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lists import RunSet


@dataclass(frozen=True)
class ExperimentConfig:
    """Shape and knobs of one synthetic scenario.

    t, k, runs: feature count, sublist length and number of lists.
    seed: 64-bit PRNG seed.
    fixed: how many of the runs repeat one fixed output (ranking family).
    lam: where run-specific features sit in the ranking, 0 = bottom,
         1 = top (overlap family).
    q: fraction of rank positions re-drawn per run (rank-shuffle family).
    overlap: size of the common core shared by every run (overlap family
             only; leave None for the other scenarios).
    """

    t: int = 2000
    k: int = 600
    runs: int = 100
    seed: int = 0
    fixed: int = 0
    lam: float = 0.0
    q: float = 0.0
    overlap: int | None = None

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        if not 1 <= self.k <= self.t:
            raise ValueError(f"k={self.k} out of range 1..{self.t}")
        if self.runs < 2:
            raise ValueError(f"runs must be >= 2, got {self.runs}")
        if not 0 <= self.fixed <= self.runs:
            raise ValueError(f"fixed={self.fixed} out of range 0..{self.runs}")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError(f"lam={self.lam} out of range [0, 1]")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q={self.q} out of range [0, 1]")
        if self.overlap is not None and not 1 <= self.overlap <= self.k:
            raise ValueError(f"overlap={self.overlap} out of range 1..k={self.k}")


def _rngs(cfg: ExperimentConfig) -> tuple[np.random.Generator, list[np.random.Generator]]:
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.runs + 1)
    shared = np.random.default_rng(children[0])
    per_run = [np.random.default_rng(c) for c in children[1:]]
    return shared, per_run


def gen_ranking_family(cfg: ExperimentConfig) -> RunSet:
    """``fixed`` copies of one seeded permutation + independent uniform rest."""
    shared, per_run = _rngs(cfg)
    fixed_row = shared.permutation(cfg.t) + 1
    rows = np.empty((cfg.runs, cfg.t), dtype=np.int64)
    rows[: cfg.fixed] = fixed_row
    for j in range(cfg.fixed, cfg.runs):
        rows[j] = per_run[j].permutation(cfg.t) + 1
    return RunSet("full", rows)


def gen_subset_family(cfg: ExperimentConfig) -> RunSet:
    """Top-k masks of the ranking family (same seed, same rankings)."""
    return gen_ranking_family(cfg).to_topk(cfg.k)


def gen_overlap_family(cfg: ExperimentConfig) -> RunSet:
    """Partial lists with a shared core and lam-placed disagreement.

    A seeded arrangement designates ``overlap`` core features and a
    draw pool of the t - k features outside the reference top-k; each run
    selects the core plus ``k - overlap`` pool features. ``lam`` positions
    the run-specific block within the rank slots; rank order inside each
    region is shuffled per run. The per-run feature draws never consume
    lam, so the selected sets (and any mask-level metric) are identical
    across lam for one seed.
    """
    if cfg.overlap is None:
        raise ValueError("the overlap family requires cfg.overlap")
    if cfg.overlap >= cfg.k:
        raise ValueError(f"overlap={cfg.overlap} must be smaller than k={cfg.k}")
    extra = cfg.k - cfg.overlap
    pool_size = cfg.t - cfg.k
    if pool_size < extra:
        raise ValueError(
            f"pool exhausted: need {extra} run-specific features per run "
            f"but only {pool_size} outside the reference top-{cfg.k}"
        )
    shared, per_run = _rngs(cfg)
    arrangement = shared.permutation(cfg.t)
    core = arrangement[: cfg.overlap]
    pool = arrangement[cfg.k :]

    slots = np.arange(cfg.k)
    start = round((1.0 - cfg.lam) * cfg.overlap)
    block = slots[start : start + extra]
    core_slots = np.concatenate([slots[:start], slots[start + extra :]])

    rows = np.zeros((cfg.runs, cfg.t), dtype=np.int64)
    for j, rng in enumerate(per_run):
        drawn = rng.choice(pool, size=extra, replace=False)
        rows[j, rng.permutation(core)] = core_slots + 1
        rows[j, rng.permutation(drawn)] = block + 1
    return RunSet("partial", rows, cfg.k)


def gen_rank_shuffle_family(cfg: ExperimentConfig) -> RunSet:
    """Identical top-k sets whose ranks are re-drawn on a q-fraction of slots."""
    shared, per_run = _rngs(cfg)
    features = shared.permutation(cfg.t)[: cfg.k]
    reference = shared.permutation(cfg.k) + 1
    redraw = round(cfg.q * cfg.k)
    rows = np.zeros((cfg.runs, cfg.t), dtype=np.int64)
    for j, rng in enumerate(per_run):
        ranks = reference.copy()
        if redraw > 0:
            positions = rng.choice(cfg.k, size=redraw, replace=False)
            ranks[positions] = ranks[positions][rng.permutation(redraw)]
        rows[j, features] = ranks
    return RunSet("partial", rows, cfg.k)
