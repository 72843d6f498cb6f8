"""Stability metrics for feature rankings, partial rankings and top-k subsets."""

from .baselines import (
    METRIC_KINDS,
    MetricMismatchError,
    PairwiseStability,
    jaccard,
    kuncheva,
    pairwise_stability,
    spearman,
)
from .divergence import (
    StabilityReport,
    SupportMismatchError,
    js_multi,
    js_pair,
    js_stability,
    kl,
)
from .experiments import (
    EXPERIMENT_NAMES,
    overlap_curve,
    ranking_curve,
    rank_shuffle_curve,
    run_experiment,
    subset_curve,
)
from .lists import (
    KINDS,
    FullRanking,
    PartialRanking,
    RunSet,
    TopKMask,
    full_to_partial,
    full_to_topk,
    partial_to_topk,
    validate,
)
from .mds import (
    DISTANCES,
    DistanceMatrix,
    Embedding,
    MdsConvergenceError,
    classical_mds,
    distance_matrix,
)
from .probability import (
    DegenerateNormalizerError,
    map_full,
    map_partial,
    map_topk,
    normalizer,
    prob_of_rank,
    run_probabilities,
)
from .runset_io import (
    RunSetParseError,
    load_runset,
    parse_runset,
    save_runset,
    serialize_runset,
)
from .synth import (
    ExperimentConfig,
    gen_overlap_family,
    gen_ranking_family,
    gen_rank_shuffle_family,
    gen_subset_family,
)

__version__ = "0.1.0"

__all__ = [
    "DISTANCES",
    "DegenerateNormalizerError",
    "DistanceMatrix",
    "EXPERIMENT_NAMES",
    "Embedding",
    "ExperimentConfig",
    "FullRanking",
    "KINDS",
    "METRIC_KINDS",
    "MdsConvergenceError",
    "MetricMismatchError",
    "PairwiseStability",
    "PartialRanking",
    "RunSet",
    "RunSetParseError",
    "StabilityReport",
    "SupportMismatchError",
    "TopKMask",
    "classical_mds",
    "distance_matrix",
    "full_to_partial",
    "full_to_topk",
    "gen_overlap_family",
    "gen_ranking_family",
    "gen_rank_shuffle_family",
    "gen_subset_family",
    "jaccard",
    "js_multi",
    "js_pair",
    "js_stability",
    "kl",
    "kuncheva",
    "load_runset",
    "map_full",
    "map_partial",
    "map_topk",
    "normalizer",
    "overlap_curve",
    "pairwise_stability",
    "parse_runset",
    "partial_to_topk",
    "prob_of_rank",
    "ranking_curve",
    "rank_shuffle_curve",
    "run_experiment",
    "run_probabilities",
    "save_runset",
    "serialize_runset",
    "spearman",
    "subset_curve",
    "validate",
]
