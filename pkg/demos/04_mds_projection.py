"""Visual stability analysis: project runs of several algorithms to 2D.

Each run is a point; tight clusters mean stable algorithms, scatter means
instability, and nearby clusters mean algorithms that select similarly.
The script embeds four mock algorithms and writes their coordinates to
CSV for plotting with any external tool. Run with:

    python demos/04_mds_projection.py
"""

import numpy as np

from stabrank import (
    ExperimentConfig,
    classical_mds,
    distance_matrix,
    gen_overlap_family,
    gen_subset_family,
)

T, K_SUB, RUNS = 200, 40, 12

# Four mock feature selectors: two stable ones that agree with each other,
# a noisy one whose runs share most but not all of their features, and a
# completely random one.
stable_a = gen_subset_family(ExperimentConfig(t=T, k=K_SUB, runs=RUNS, seed=1, fixed=RUNS))
stable_b = gen_subset_family(ExperimentConfig(t=T, k=K_SUB, runs=RUNS, seed=1, fixed=RUNS))
noisy = gen_overlap_family(
    ExperimentConfig(t=T, k=K_SUB, runs=RUNS, seed=3, overlap=34)
).to_topk()
random_ = gen_subset_family(ExperimentConfig(t=T, k=K_SUB, runs=RUNS, seed=9, fixed=0))

labeled = [
    ("stable-a", stable_a),
    ("stable-b", stable_b),
    ("noisy", noisy),
    ("random", random_),
]

# Distance between two runs: square root of their Jensen-Shannon
# divergence, a true metric, so the projection is well-posed.
dm = distance_matrix(labeled)
embedding = classical_mds(dm)
print(f"embedded {dm.n} runs; retained eigenvalues {np.round(embedding.eigvals, 4)}, "
      f"stress {embedding.stress:.4f}")

# Per-algorithm spread: mean pairwise distance between a method's runs,
# in the 2D projection and in the original space. The 2D numbers are
# compressed (only two eigendirections survive) but keep the ordering.
for idx, (label, rs) in enumerate(labeled):
    coords = embedding.coords[idx * RUNS : (idx + 1) * RUNS]
    diff = coords[:, None, :] - coords[None, :, :]
    within = np.sqrt((diff**2).sum(axis=2))[np.triu_indices(RUNS, 1)].mean()
    block = dm.d[idx * RUNS : (idx + 1) * RUNS, idx * RUNS : (idx + 1) * RUNS]
    original = block[np.triu_indices(RUNS, 1)].mean()
    print(f"  {label:>9}: within-cluster distance {within:.4f} (2D), {original:.4f} (original)")

out = "mds_coords.csv"
with open(out, "w", encoding="utf-8") as fh:
    fh.write("label,run,x,y\n")
    for idx, (label, run) in enumerate(dm.labels):
        x, y = embedding.coords[idx]
        fh.write(f"{label},{run},{x:.6g},{y:.6g}\n")
print(f"\nwrote {out} (same format as: stabrank mds a.csv b.csv --out coords.csv)")
