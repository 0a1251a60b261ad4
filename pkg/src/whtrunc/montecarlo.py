"""Empirical validation of the expected operation counts.

Masks of fixed weight are drawn uniformly at random and their structural
counts averaged.  Randomness comes from numpy's PCG64 bit generator with a
64-bit integer seed: a fixed, named algorithm whose output stream is
platform-independent, so a given seed reproduces the statistics bit for
bit.  When the number of distinct masks is small enough the sampler is
replaced by exhaustive enumeration, which makes the mean exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .messages import is_power_of_two
from .wht import PatternMask, count_batch

EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class TrialStats:
    """Summary of one averaging run."""

    q: int
    q_prime: int
    trials: int
    mean_additions: float
    mean_negations: float
    stderr_additions: float
    stderr_negations: float
    seed: int
    exhaustive: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.stderr_additions < 0 or self.stderr_negations < 0:
            raise ValueError("standard errors must be non-negative")
        stages = self.q.bit_length() - 1
        if not 0 <= self.mean_additions <= self.q * stages:
            raise ValueError("mean additions out of the attainable range")
        if not 0 <= self.mean_negations <= (self.q // 2) * stages:
            raise ValueError("mean negations out of the attainable range")


def _validate(q: int, q_prime: int) -> None:
    if not is_power_of_two(q) or q < 2:
        raise ValueError(f"transform length {q} is not a power of 2 >= 2")
    if not 0 <= q_prime <= q:
        raise ValueError(f"non-zero count {q_prime} out of range [0, {q}]")


def sample_pattern(q: int, q_prime: int, rng: np.random.Generator) -> PatternMask:
    """Uniformly random weight-q' mask via a partial Fisher-Yates shuffle."""
    _validate(q, q_prime)
    pool = np.arange(q)
    for i in range(q_prime):
        j = i + int(rng.integers(0, q - i))
        pool[i], pool[j] = pool[j], pool[i]
    return PatternMask.from_support(q, pool[:q_prime])


def _sample_masks(q: int, q_prime: int, trials: int, rng: np.random.Generator) -> np.ndarray:
    """Draw `trials` masks at once: the same partial Fisher-Yates, with the
    column draws batched so the whole matrix is a few vector operations."""
    pool = np.tile(np.arange(q), (trials, 1))
    rows = np.arange(trials)
    for i in range(q_prime):
        j = i + rng.integers(0, q - i, size=trials)
        picked = pool[rows, j].copy()
        pool[rows, j] = pool[rows, i]
        pool[rows, i] = picked
    masks = np.zeros((trials, q), dtype=bool)
    if q_prime:
        masks[rows[:, None], pool[:, :q_prime]] = True
    return masks


def _enumerate_masks(q: int, q_prime: int) -> np.ndarray:
    count = math.comb(q, q_prime)
    masks = np.zeros((count, q), dtype=bool)
    for row, support in enumerate(itertools.combinations(range(q), q_prime)):
        masks[row, list(support)] = True
    return masks


def exhaustive_mean(q: int, q_prime: int) -> tuple[Fraction, Fraction]:
    """Mean structural count over all C(q, q') masks, as exact rationals."""
    _validate(q, q_prime)
    count = math.comb(q, q_prime)
    if count > EXHAUSTIVE_LIMIT:
        raise ValueError(f"{count} masks exceed the enumeration limit {EXHAUSTIVE_LIMIT}")
    additions, negations = count_batch(_enumerate_masks(q, q_prime))
    return (
        Fraction(int(additions.sum()), count),
        Fraction(int(negations.sum()), count),
    )


def _mean_and_stderr(samples: np.ndarray) -> tuple[float, float]:
    # integer sums keep the reduction exact and the result platform-stable
    n = samples.size
    total = int(samples.sum())
    mean = total / n
    if n == 1:
        return mean, 0.0
    sum_sq = int((samples.astype(np.int64) ** 2).sum())
    variance = max(sum_sq - total * total / n, 0.0) / (n - 1)
    return mean, math.sqrt(variance / n)


def run_trials(q: int, q_prime: int, trials: int, seed: int) -> TrialStats:
    """Average structural counts over random masks, or over all masks when
    there are at most EXHAUSTIVE_LIMIT of them."""
    _validate(q, q_prime)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if math.comb(q, q_prime) <= EXHAUSTIVE_LIMIT:
        masks = _enumerate_masks(q, q_prime)
        additions, negations = count_batch(masks)
        return TrialStats(
            q=q,
            q_prime=q_prime,
            trials=masks.shape[0],
            mean_additions=int(additions.sum()) / masks.shape[0],
            mean_negations=int(negations.sum()) / masks.shape[0],
            stderr_additions=0.0,
            stderr_negations=0.0,
            seed=seed,
            exhaustive=True,
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    masks = _sample_masks(q, q_prime, trials, rng)
    additions, negations = count_batch(masks)
    mean_add, stderr_add = _mean_and_stderr(additions)
    mean_neg, stderr_neg = _mean_and_stderr(negations)
    return TrialStats(
        q=q,
        q_prime=q_prime,
        trials=trials,
        mean_additions=mean_add,
        mean_negations=mean_neg,
        stderr_additions=stderr_add,
        stderr_negations=stderr_neg,
        seed=seed,
    )
