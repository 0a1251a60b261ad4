"""Fast Walsh-Hadamard transform with structural operation counting.

The transform is evaluated by the half-split recursion: the transform of a
length-q vector merges the transforms of its two halves, the top half by
elementwise sum and the bottom half by elementwise difference.  Unrolled,
that is the classic in-place butterfly network whose stage h pairs indices
(j, j+h) inside contiguous blocks of size 2h, for h = 1, 2, ..., q/2.

Operation counting follows the convention that one binary addition costs
one "addition" only when both operands are non-zero, and a subtraction
a - b costs one negation plus one addition when both operands are non-zero,
one negation alone when a = 0, and nothing when b = 0.  Whether an operand
is zero is tracked structurally from the input non-zero pattern: a half
with at least one non-zero input has an entirely non-zero half-transform,
and accidental cancellation between real values is ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .messages import DenseVector, is_power_of_two


@dataclass(frozen=True)
class OpCount:
    """Tally of binary additions and unary negations."""

    additions: int
    negations: int

    def __post_init__(self):
        if self.additions < 0 or self.negations < 0:
            raise ValueError("operation counts must be non-negative")

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(self.additions + other.additions, self.negations + other.negations)


@dataclass(frozen=True)
class PatternMask:
    """Indicator vector of non-zero input positions, with cached weight."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=bool)
        if bits.ndim != 1 or not is_power_of_two(bits.size):
            raise ValueError(f"mask length {bits.size} is not a power of 2")
        bits.flags.writeable = False
        object.__setattr__(self, "bits", bits)

    @property
    def weight(self) -> int:
        return int(self.bits.sum())

    @property
    def length(self) -> int:
        return int(self.bits.size)

    @classmethod
    def from_support(cls, q: int, support) -> "PatternMask":
        bits = np.zeros(q, dtype=bool)
        idx = list(support)
        if idx and (min(idx) < 0 or max(idx) >= q):
            raise ValueError("support indices out of range")
        bits[idx] = True
        return cls(bits)

    @classmethod
    def from_hex(cls, q: int, text: str) -> "PatternMask":
        """Parse a hexadecimal mask; bit 0 (least significant) is symbol 0."""
        value = int(text, 16)
        if value < 0 or value >= 1 << q:
            raise ValueError(f"mask {text!r} does not fit an alphabet of size {q}")
        bits = np.array([(value >> i) & 1 for i in range(q)], dtype=bool)
        return cls(bits)

    def to_hex(self) -> str:
        value = 0
        for i in np.flatnonzero(self.bits):
            value |= 1 << int(i)
        return format(value, "x")

    @classmethod
    def full(cls, q: int) -> "PatternMask":
        return cls(np.ones(q, dtype=bool))

    @classmethod
    def empty(cls, q: int) -> "PatternMask":
        return cls(np.zeros(q, dtype=bool))


def _fwht(values: np.ndarray) -> np.ndarray:
    """Shared butterfly kernel; every output of a stage is one binary op of
    two stage inputs, so any faithful evaluation order is bit-identical."""
    out = np.array(values, dtype=np.float64)
    n = out.size
    h = 1
    while h < n:
        blocks = out.reshape(-1, 2, h)
        top = blocks[:, 0, :] + blocks[:, 1, :]
        bottom = blocks[:, 0, :] - blocks[:, 1, :]
        blocks[:, 0, :] = top
        blocks[:, 1, :] = bottom
        h *= 2
    return out


def wht_dense(v: DenseVector) -> DenseVector:
    """Unnormalized Walsh-Hadamard transform (+-1 Sylvester matrix)."""
    return DenseVector(_fwht(v.values))


def wht_inverse(v: DenseVector) -> DenseVector:
    """Exact inverse of wht_dense: forward transform divided by the length."""
    return DenseVector(_fwht(v.values) / v.alphabet_size)


def count_only(mask: PatternMask) -> OpCount:
    """Operation count of the transform as a pure function of the mask.

    Each merge of two half-transforms of combined length n costs n additions
    when both halves are non-zero and n/2 negations whenever the right half
    is non-zero (the bottom outputs are differences, which need a sign flip
    even when the top operand is zero).
    """
    def walk(bits: np.ndarray) -> tuple[int, int, bool]:
        n = bits.size
        if n == 1:
            return 0, 0, bool(bits[0])
        add_l, neg_l, nz_l = walk(bits[: n // 2])
        add_r, neg_r, nz_r = walk(bits[n // 2 :])
        additions = add_l + add_r + (n if nz_l and nz_r else 0)
        negations = neg_l + neg_r + (n // 2 if nz_r else 0)
        return additions, negations, nz_l or nz_r

    additions, negations, _ = walk(mask.bits)
    return OpCount(additions, negations)


def count_batch(masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized count_only over a (num_masks, q) boolean matrix.

    Evaluates the same half-split rule level by level using block weights;
    returns int64 arrays (additions, negations).
    """
    masks = np.asarray(masks, dtype=bool)
    if masks.ndim != 2 or not is_power_of_two(masks.shape[1]):
        raise ValueError("masks must be a (num_masks, power-of-two) matrix")
    n, q = masks.shape
    additions = np.zeros(n, dtype=np.int64)
    negations = np.zeros(n, dtype=np.int64)
    weights = masks.astype(np.int64)
    size = 2
    while size <= q:
        blocks = weights.reshape(n, q // size, size)
        left = blocks[:, :, : size // 2].sum(axis=2)
        right = blocks[:, :, size // 2 :].sum(axis=2)
        additions += size * ((left > 0) & (right > 0)).sum(axis=1)
        negations += (size // 2) * (right > 0).sum(axis=1)
        size *= 2
    return additions, negations


def wht_sparse_counted(sparse: DenseVector, mask: PatternMask) -> tuple[DenseVector, OpCount]:
    """Transform a vector with a known non-zero pattern, reporting its cost.

    The output is computed through the same butterfly kernel as wht_dense
    (bit-identical values); the cost is the structural count for the mask.
    """
    if mask.length != sparse.alphabet_size:
        raise ValueError("mask length must match the vector length")
    if np.any(sparse.values[~mask.bits] != 0.0):
        raise ValueError("vector has non-zero entries outside the mask")
    return DenseVector(_fwht(sparse.values)), count_only(mask)


def full_transform_count(q: int) -> OpCount:
    """Cost of a dense length-q transform: q*log2(q) additions and
    (q/2)*log2(q) negations."""
    if not is_power_of_two(q):
        raise ValueError(f"length {q} is not a power of 2")
    stages = q.bit_length() - 1
    return OpCount(q * stages, (q // 2) * stages)
