"""Truncated-message processing for check nodes in the Walsh-Hadamard domain.

Provides the sparsity-aware instrumented fast Walsh-Hadamard transform,
exact and approximate expected operation-count calculators, XOR-group
convolution with a brute-force oracle, and a Monte-Carlo validation
harness.  The `whtrunc` command line exposes the reference tables and the
validation drivers.
"""

from .approx import (
    LayerProfile,
    SweepPoint,
    approx_expected_counts,
    layer_probabilities,
    relative_additions_sweep,
)
from .convolution import (
    CostModel,
    check_node,
    cost_compare,
    variable_node_log,
    xor_convolve_direct,
    xor_convolve_wht,
)
from .exact import (
    ExpansionRow,
    ExpectationTable,
    exact_expected_counts,
    exact_table,
    expansion_rows,
)
from .messages import (
    DenseVector,
    Domain,
    TruncatedMessage,
    complete_with_tail,
    split_uniform,
    to_log,
    to_prob,
    truncate,
)
from .montecarlo import TrialStats, exhaustive_mean, run_trials, sample_pattern
from .wht import (
    OpCount,
    PatternMask,
    count_batch,
    count_only,
    full_transform_count,
    wht_dense,
    wht_inverse,
    wht_sparse_counted,
)

__all__ = [
    "CostModel",
    "DenseVector",
    "Domain",
    "ExpansionRow",
    "ExpectationTable",
    "LayerProfile",
    "OpCount",
    "PatternMask",
    "SweepPoint",
    "TrialStats",
    "TruncatedMessage",
    "approx_expected_counts",
    "check_node",
    "complete_with_tail",
    "cost_compare",
    "count_batch",
    "count_only",
    "exact_expected_counts",
    "exact_table",
    "exhaustive_mean",
    "expansion_rows",
    "full_transform_count",
    "layer_probabilities",
    "relative_additions_sweep",
    "run_trials",
    "sample_pattern",
    "split_uniform",
    "to_log",
    "to_prob",
    "truncate",
    "variable_node_log",
    "wht_dense",
    "wht_inverse",
    "wht_sparse_counted",
    "xor_convolve_direct",
    "xor_convolve_wht",
]

__version__ = "0.1.0"
