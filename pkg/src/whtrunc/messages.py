"""Truncated and full-length belief-propagation messages.

A truncated message stores values for an explicit subset of the symbol
alphabet; in the probability domain the remaining symbols are implied by a
uniform tail chosen so the completed vector sums to 1.  A dense vector is a
full-length real message (or spectrum) over the whole alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

# Tolerance for probability-mass checks; double precision leaves ample
# headroom for alphabets up to 2**16.
MASS_EPS = 1e-12

# Tolerance when checking that off-support entries share one tail value.
TAIL_EPS = 1e-12


class Domain(Enum):
    PROBABILITY = "probability"
    LOG = "log"


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _readonly(values, dtype=np.float64) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class DenseVector:
    """Full-length real vector over a power-of-two symbol alphabet."""

    values: np.ndarray

    def __post_init__(self):
        arr = _readonly(self.values)
        if arr.ndim != 1:
            raise ValueError("dense vector must be one-dimensional")
        if not is_power_of_two(arr.size):
            raise ValueError(f"length {arr.size} is not a power of 2")
        object.__setattr__(self, "values", arr)

    @property
    def alphabet_size(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class TruncatedMessage:
    """Message restricted to an explicit support of symbol indices.

    `support` is sorted ascending and holds distinct indices in
    [0, alphabet_size); `values[k]` belongs to symbol `support[k]`.
    `log_offset` optionally records the additive constant used when the
    message was converted to the log domain; it is not recoverable from the
    values themselves.
    """

    domain: Domain
    support: tuple[int, ...]
    values: np.ndarray
    alphabet_size: int
    log_offset: float | None = None

    def __post_init__(self):
        if not is_power_of_two(self.alphabet_size) or self.alphabet_size < 2:
            raise ValueError(f"alphabet size {self.alphabet_size} is not a power of 2 >= 2")
        support = tuple(int(i) for i in self.support)
        if not 1 <= len(support) <= self.alphabet_size:
            raise ValueError("support must hold between 1 and alphabet_size indices")
        if any(b <= a for a, b in zip(support, support[1:])):
            raise ValueError("support indices must be distinct and sorted ascending")
        if support[0] < 0 or support[-1] >= self.alphabet_size:
            raise ValueError("support indices out of range")
        values = _readonly(self.values)
        if values.shape != (len(support),):
            raise ValueError("values must align one-to-one with the support")
        if self.domain is Domain.PROBABILITY:
            if np.any(values < 0.0) or np.any(values > 1.0):
                raise ValueError("probability values must lie in [0, 1]")
            if values.sum() > 1.0 + MASS_EPS:
                raise ValueError("probability values sum to more than 1")
        else:
            if not np.all(np.isfinite(values)):
                raise ValueError("log values must be finite")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "values", values)

    @property
    def kept(self) -> int:
        """Number of stored entries (the truncated length)."""
        return len(self.support)


def complete_with_tail(msg: TruncatedMessage) -> DenseVector:
    """Expand a truncated probability message to full length.

    Symbols absent from the support all receive the common tail value
    p0 = (1 - sum of stored values) / (number of missing symbols), so the
    output sums to 1.
    """
    if msg.domain is not Domain.PROBABILITY:
        raise ValueError("tail completion is defined in the probability domain")
    q = msg.alphabet_size
    mass = float(msg.values.sum())
    missing = q - msg.kept
    if missing == 0:
        if abs(mass - 1.0) > MASS_EPS:
            raise ValueError(f"full-support message must sum to 1, got {mass!r}")
        return DenseVector(msg.values)
    tail_mass = 1.0 - mass
    if tail_mass < -MASS_EPS:
        raise ValueError(f"stored values exceed total mass 1 by {-tail_mass!r}")
    p0 = max(tail_mass, 0.0) / missing
    out = np.full(q, p0)
    out[list(msg.support)] = msg.values
    return DenseVector(out)


def split_uniform(m: DenseVector, support) -> tuple[DenseVector, DenseVector]:
    """Split a tail-completed message into a uniform part and a sparse part.

    All off-support entries must share one tail value p0.  Returns
    (uniform, sparse) with uniform constant p0 everywhere, sparse equal to
    m - p0 on the support and 0 elsewhere.
    """
    q = m.alphabet_size
    support = sorted(int(i) for i in set(support))
    if support and (support[0] < 0 or support[-1] >= q):
        raise ValueError("support indices out of range")
    on = np.zeros(q, dtype=bool)
    on[support] = True
    off_values = m.values[~on]
    if off_values.size == 0:
        p0 = 0.0
    else:
        p0 = float(off_values[0])
        if np.max(np.abs(off_values - p0)) > TAIL_EPS:
            raise ValueError("off-support entries do not share a common tail value")
    sparse = np.zeros(q)
    sparse[on] = m.values[on] - p0
    return DenseVector(np.full(q, p0)), DenseVector(sparse)


def truncate(m: DenseVector, q_keep: int) -> TruncatedMessage:
    """Keep the q_keep largest entries of a probability vector.

    Ties are broken toward the lower symbol index so the result is
    deterministic.  The dropped mass is implied by the uniform tail.
    """
    q = m.alphabet_size
    if not 1 <= q_keep <= q:
        raise ValueError(f"q_keep must lie in [1, {q}], got {q_keep}")
    if np.any(m.values < 0.0):
        raise ValueError("entries must be non-negative")
    # Stable sort on negated values ranks equal entries by ascending index.
    order = np.argsort(-m.values, kind="stable")[:q_keep]
    support = np.sort(order)
    return TruncatedMessage(
        domain=Domain.PROBABILITY,
        support=tuple(int(i) for i in support),
        values=m.values[support],
        alphabet_size=q,
    )


def to_log(msg: TruncatedMessage, log_offset: float | None = None) -> TruncatedMessage:
    """Convert a probability message to the log domain.

    Each value becomes ln(p) + log_offset.  When no offset is given it
    defaults to -max(ln p), which makes every log value non-positive.
    """
    if msg.domain is not Domain.PROBABILITY:
        raise ValueError("message is already in the log domain")
    if np.any(msg.values <= 0.0):
        raise ValueError("log conversion requires strictly positive probabilities")
    logs = np.log(msg.values)
    if log_offset is None:
        log_offset = float(-logs.max())
    return TruncatedMessage(
        domain=Domain.LOG,
        support=msg.support,
        values=logs + log_offset,
        alphabet_size=msg.alphabet_size,
        log_offset=float(log_offset),
    )


def to_prob(msg: TruncatedMessage) -> TruncatedMessage:
    """Convert a log message back to probabilities by normalizing.

    The additive constant of the log domain cancels, so the output sums to 1
    over the support regardless of the offset used on the way in.
    """
    if msg.domain is not Domain.LOG:
        raise ValueError("message is already in the probability domain")
    shifted = np.exp(msg.values - msg.values.max())
    probs = shifted / shifted.sum()
    return TruncatedMessage(
        domain=Domain.PROBABILITY,
        support=msg.support,
        values=probs,
        alphabet_size=msg.alphabet_size,
    )
