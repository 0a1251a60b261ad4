"""Exact expected operation counts for sparse-input transforms.

For a length-q transform whose q' non-zero inputs are placed uniformly at
random, the expected addition and negation counts follow a recursion over
the two halves of the input: the number of non-zeros landing in the left
half is hypergeometric, and each merge contributes q extra additions when
both halves are non-zero and q/2 extra negations when the right half is.
All arithmetic is exact big-integer rational; rounding happens only at
presentation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .messages import is_power_of_two

_BASE_ADDITIONS = (Fraction(0), Fraction(0), Fraction(2))
_BASE_NEGATIONS = (Fraction(0), Fraction(1, 2), Fraction(1))


def _validate(q: int, q_prime: int) -> None:
    if not is_power_of_two(q) or q < 2:
        raise ValueError(f"transform length {q} is not a power of 2 >= 2")
    if not 0 <= q_prime <= q:
        raise ValueError(f"non-zero count {q_prime} out of range [0, {q}]")


@lru_cache(maxsize=None)
def _expected(q: int, q_prime: int) -> tuple[Fraction, Fraction]:
    if q == 2:
        return _BASE_ADDITIONS[q_prime], _BASE_NEGATIONS[q_prime]
    half = q // 2
    total = math.comb(q, q_prime)
    e_add = Fraction(0)
    e_neg = Fraction(0)
    for left in range(max(0, q_prime - half), min(q_prime, half) + 1):
        right = q_prime - left
        weight = Fraction(math.comb(half, left) * math.comb(half, right), total)
        add_l, neg_l = _expected(half, left)
        add_r, neg_r = _expected(half, right)
        e_add += weight * (add_l + add_r + (q if left and right else 0))
        e_neg += weight * (neg_l + neg_r + (half if right else 0))
    return e_add, e_neg


def exact_expected_counts(q: int, q_prime: int) -> tuple[Fraction, Fraction]:
    """Expected (additions, negations) for q' random non-zeros in length q."""
    _validate(q, q_prime)
    return _expected(q, q_prime)


@dataclass(frozen=True)
class ExpansionRow:
    """One (left, right) split in the recursion for a fixed q and q'."""

    q_left: int
    q_right: int
    weight: Fraction
    add_left: Fraction
    add_right: Fraction
    add_extra: int
    neg_left: Fraction
    neg_right: Fraction
    neg_extra: int


def expansion_rows(q: int, q_prime: int) -> list[ExpansionRow]:
    """Per-split weights and contributions behind exact_expected_counts.

    The weights over all rows sum to exactly 1.
    """
    _validate(q, q_prime)
    if q == 2:
        raise ValueError("length 2 is the recursion base and has no expansion")
    half = q // 2
    total = math.comb(q, q_prime)
    rows = []
    for left in range(max(0, q_prime - half), min(q_prime, half) + 1):
        right = q_prime - left
        add_l, neg_l = _expected(half, left)
        add_r, neg_r = _expected(half, right)
        rows.append(
            ExpansionRow(
                q_left=left,
                q_right=right,
                weight=Fraction(math.comb(half, left) * math.comb(half, right), total),
                add_left=add_l,
                add_right=add_r,
                add_extra=q if left and right else 0,
                neg_left=neg_l,
                neg_right=neg_r,
                neg_extra=half if right else 0,
            )
        )
    return rows


@dataclass(frozen=True)
class ExpectationTable:
    """Memoized exact expectations for every length up to some maximum.

    `entries` maps (length, non-zero count) to (expected additions,
    expected negations) as exact rationals.
    """

    max_length: int
    entries: dict[tuple[int, int], tuple[Fraction, Fraction]]

    def additions(self, q: int, q_prime: int) -> Fraction:
        return self.entries[(q, q_prime)][0]

    def negations(self, q: int, q_prime: int) -> Fraction:
        return self.entries[(q, q_prime)][1]

    def lengths(self) -> list[int]:
        return sorted({q for q, _ in self.entries})


def exact_table(q: int) -> ExpectationTable:
    """Build the table for every power-of-two length <= q and every weight."""
    if not is_power_of_two(q) or q < 2:
        raise ValueError(f"transform length {q} is not a power of 2 >= 2")
    entries = {}
    length = 2
    while length <= q:
        for q_prime in range(length + 1):
            entries[(length, q_prime)] = _expected(length, q_prime)
        length *= 2
    return ExpectationTable(max_length=q, entries=entries)
