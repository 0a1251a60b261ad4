"""Bernoulli-process approximation of the expected operation counts.

Instead of fixing the number of non-zero inputs, each input is treated as
independently non-zero with probability q'/q.  A butterfly output is
non-zero when either input is, giving the layer recursion
p_next = 1 - (1 - p)^2, and the interleavers between butterfly layers are
treated as random so the recursion applies at every layer.  Per layer of
q/2 butterflies the expected cost is q*p^2 additions and q*p/2 negations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .messages import is_power_of_two


@dataclass(frozen=True)
class LayerProfile:
    """Per-layer probability that a butterfly line carries a non-zero value."""

    q: int
    layer_probs: tuple[float, ...]


def _validate(q: int, q_prime: int) -> None:
    if not is_power_of_two(q) or q < 2:
        raise ValueError(f"transform length {q} is not a power of 2 >= 2")
    if not 0 <= q_prime <= q:
        raise ValueError(f"non-zero count {q_prime} out of range [0, {q}]")


def layer_probabilities(q: int, q_prime: int) -> LayerProfile:
    """Non-zero probability entering each of the log2(q) butterfly layers."""
    _validate(q, q_prime)
    probs = []
    p = q_prime / q
    for _ in range(q.bit_length() - 1):
        probs.append(p)
        p = 1.0 - (1.0 - p) ** 2
    return LayerProfile(q=q, layer_probs=tuple(probs))


def approx_expected_counts(q: int, q_prime: int) -> tuple[float, float]:
    """Approximate expected (additions, negations) for the whole transform."""
    profile = layer_probabilities(q, q_prime)
    additions = sum(q * p * p for p in profile.layer_probs)
    negations = sum(q * p / 2.0 for p in profile.layer_probs)
    return additions, negations


class SweepPoint(NamedTuple):
    q: int
    log2_q: int
    ratio: float


def relative_additions_sweep(q_min: int, q_max: int, q_prime: int) -> list[SweepPoint]:
    """Approximate additions relative to the dense cost q*log2(q), for every
    power-of-two length from q_min to q_max at a fixed non-zero count."""
    if not is_power_of_two(q_min) or not is_power_of_two(q_max):
        raise ValueError("sweep bounds must be powers of 2")
    if q_min < 2 or q_max < q_min:
        raise ValueError(f"invalid sweep range [{q_min}, {q_max}]")
    if q_prime > q_min:
        raise ValueError(f"non-zero count {q_prime} exceeds the smallest length {q_min}")
    points = []
    q = q_min
    while q <= q_max:
        stages = q.bit_length() - 1
        additions, _ = approx_expected_counts(q, q_prime)
        points.append(SweepPoint(q=q, log2_q=stages, ratio=additions / (q * stages)))
        q *= 2
    return points
