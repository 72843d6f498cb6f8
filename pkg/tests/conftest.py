"""Shared fixtures: a small worked example of five runs over ten features.

EXAMPLE_FULL holds one full ranking per run. The partial and mask variants
are the same runs truncated at k=4; they double as regression anchors for
the conversion and baseline metrics.
"""

import numpy as np
import pytest

from stabrank import RunSet

# one tuple per run (t = 10, K = 5)
EXAMPLE_FULL = (
    (3, 2, 4, 9, 5, 10, 7, 8, 1, 6),
    (9, 1, 7, 6, 3, 5, 10, 2, 4, 8),
    (7, 2, 3, 10, 5, 8, 9, 6, 1, 4),
    (8, 3, 5, 9, 1, 7, 10, 6, 2, 4),
    (7, 3, 2, 8, 4, 9, 10, 5, 1, 6),
)

EXAMPLE_K = 4

EXAMPLE_PARTIAL = tuple(
    tuple(r if r <= EXAMPLE_K else 0 for r in run) for run in EXAMPLE_FULL
)

EXAMPLE_MASKS = tuple(
    tuple(1 if r <= EXAMPLE_K else 0 for r in run) for run in EXAMPLE_FULL
)


@pytest.fixture
def full_run_set() -> RunSet:
    return RunSet("full", np.array(EXAMPLE_FULL))


@pytest.fixture
def partial_run_set() -> RunSet:
    return RunSet("partial", np.array(EXAMPLE_PARTIAL), EXAMPLE_K)


@pytest.fixture
def mask_run_set() -> RunSet:
    return RunSet("topk", np.array(EXAMPLE_MASKS), EXAMPLE_K)
