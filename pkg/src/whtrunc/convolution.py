"""Check-node convolution over the XOR group, node primitives, cost models.

For a power-of-two alphabet the check-node operation is the convolution
over the additive group of the alphabet, (a * b)[k] = sum_i a[i] b[i XOR k].
The Walsh-Hadamard transform diagonalizes exactly this convolution, so the
fast route is transform, elementwise product, inverse transform.  The
direct sum serves as the brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact import exact_expected_counts
from .messages import (
    DenseVector,
    Domain,
    TruncatedMessage,
    complete_with_tail,
    split_uniform,
    truncate,
)
from .wht import (
    OpCount,
    PatternMask,
    _fwht,
    full_transform_count,
    wht_sparse_counted,
)


@dataclass(frozen=True)
class CostModel:
    """Operation budget of one decoding route.

    Counts are reals: the transform costs of the sparsity-aware route are
    expectations and need not be whole numbers.
    """

    label: str
    multiplications: float
    additions: float
    negations: float

    def __post_init__(self):
        for name in ("multiplications", "additions", "negations"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and non-negative")


def xor_convolve_direct(a: DenseVector, b: DenseVector) -> DenseVector:
    """Brute-force XOR-group convolution: out[k] = sum_i a[i] * b[i ^ k]."""
    if a.alphabet_size != b.alphabet_size:
        raise ValueError("operands must share one alphabet size")
    idx = np.arange(a.alphabet_size)
    # column k of b[xor table] is the vector i -> b[i ^ k]
    return DenseVector(a.values @ b.values[np.bitwise_xor.outer(idx, idx)])


def xor_convolve_wht(
    a: DenseVector,
    b: DenseVector,
    mask_a: PatternMask | None = None,
    mask_b: PatternMask | None = None,
) -> tuple[DenseVector, OpCount]:
    """XOR-group convolution via the transform domain, with its cost.

    Forward transforms are counted sparsity-aware when masks are supplied
    and at the dense cost otherwise; the inverse transform is always dense.
    The q elementwise products (and the inverse normalization) are
    multiplications and are not part of the returned addition/negation
    tally; cost_compare accounts for them.
    """
    if a.alphabet_size != b.alphabet_size:
        raise ValueError("operands must share one alphabet size")
    q = a.alphabet_size
    ops = OpCount(0, 0)
    spectra = []
    for vec, mask in ((a, mask_a), (b, mask_b)):
        if mask is None:
            spectrum = DenseVector(_fwht(vec.values))
            ops = ops + full_transform_count(q)
        else:
            spectrum, cost = wht_sparse_counted(vec, mask)
            ops = ops + cost
        spectra.append(spectrum.values)
    product = spectra[0] * spectra[1]
    ops = ops + full_transform_count(q)
    return DenseVector(_fwht(product) / q), ops


def check_node(messages: list[TruncatedMessage], q_keep: int) -> tuple[TruncatedMessage, OpCount]:
    """Convolve truncated probability messages and truncate the result.

    Each input is completed with its uniform tail and split into a uniform
    part plus a sparse part; only the sparse part enters the forward
    transform (the uniform part contributes a single spike at index 0 of
    the spectrum, one extra addition when its tail mass is non-zero).  The
    spectra are multiplied together and one dense inverse transform
    produces the convolution, whose q_keep largest entries are returned.
    """
    if len(messages) < 2:
        raise ValueError("a check node needs at least two messages")
    q = messages[0].alphabet_size
    if any(m.alphabet_size != q for m in messages):
        raise ValueError("messages must share one alphabet size")
    ops = OpCount(0, 0)
    product = None
    for msg in messages:
        completed = complete_with_tail(msg)
        uniform, sparse = split_uniform(completed, msg.support)
        spectrum, cost = wht_sparse_counted(sparse, PatternMask.from_support(q, msg.support))
        ops = ops + cost
        values = np.array(spectrum.values)
        p0 = float(uniform.values[0])
        if p0 != 0.0:
            values[0] += q * p0
            ops = ops + OpCount(1, 0)
        product = values if product is None else product * values
    ops = ops + full_transform_count(q)
    result = _fwht(product) / q
    # rounding in the transform domain may leave tiny negatives on true zeros
    return truncate(DenseVector(np.maximum(result, 0.0)), q_keep), ops


def variable_node_log(messages: list[TruncatedMessage]) -> tuple[list[DenseVector], OpCount]:
    """Extrinsic combination at a variable node, in the log domain.

    `messages[0]` is the channel message and the rest arrive from the
    check-node edges; all must have full support.  The total is the
    elementwise sum of all inputs and the extrinsic for edge j is
    total - messages[j], returned for the edge messages only.  Subtractions
    are tallied as one negation plus one addition each.
    """
    if len(messages) < 2:
        raise ValueError("expected the channel message plus at least one edge message")
    q = messages[0].alphabet_size
    for msg in messages:
        if msg.alphabet_size != q:
            raise ValueError("messages must share one alphabet size")
        if msg.domain is not Domain.LOG:
            raise ValueError("variable-node combination works on log messages")
        if msg.kept != q:
            raise ValueError("variable-node arithmetic needs full-support messages")
    stacked = np.stack([m.values for m in messages])
    total = stacked.sum(axis=0)
    extrinsics = [DenseVector(total - stacked[j]) for j in range(1, len(messages))]
    degree = len(messages) - 1
    ops = OpCount(degree * q + degree * q, degree * q)
    return extrinsics, ops


def _pairwise_convolutions(dc: int) -> int:
    """Convolutions a degree-dc node performs: dc outputs, each folding
    dc-1 inputs pairwise.  Degenerate degrees count as a single one."""
    if dc < 1:
        raise ValueError("check degree must be at least 1")
    return dc * (dc - 2) if dc >= 3 else 1


def cost_compare(q: int, q_prime: int, dc: int) -> list[CostModel]:
    """Cost models for one check node under three convolution routes.

    All models are scaled by the same number of pairwise convolutions so
    the routes are compared on equal work.
    """
    e_add, e_neg = exact_expected_counts(q, q_prime)
    n = _pairwise_convolutions(dc)
    stages = q.bit_length() - 1
    dense_inverse_add = q * stages
    dense_inverse_neg = (q // 2) * stages
    return [
        CostModel(
            label="direct-dense",
            multiplications=n * q * q,
            additions=n * q * (q - 1),
            negations=0.0,
        ),
        CostModel(
            label="direct-truncated",
            multiplications=n * q_prime * q_prime,
            additions=n * q_prime * max(q_prime - 1, 0),
            negations=0.0,
        ),
        CostModel(
            label="wht-truncated",
            multiplications=n * q,
            additions=n * (2 * float(e_add) + dense_inverse_add),
            negations=n * (2 * float(e_neg) + dense_inverse_neg),
        ),
    ]
