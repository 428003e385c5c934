"""Closed-form predictions of the latent word-probability model.

Everything here is driven by three numbers of a text: its length ``N``, its
number of distinct words ``n`` and the fitted Zipf prefactor ``c``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError

#: operational thresholds for n^3 >> N >> n >> 1
REGIME_CUBE_RATIO = 10.0
REGIME_LENGTH_RATIO = 2.0
REGIME_MIN_VOCAB = 100


@dataclass(frozen=True)
class ModelParams:
    N: int
    n: int
    c: float

    def __post_init__(self):
        if self.N < 1 or self.n < 1 or not self.c > 0:
            raise DomainError(f"need N, n >= 1 and c > 0, got {self}")

    @property
    def scale(self) -> float:
        """``N c / n``, the offset shared by the rank steps and occupancies."""
        return self.N * self.c / self.n


class RegimeCheck(NamedTuple):
    passed: bool
    cube_ratio: float  # n^3 / N
    length_ratio: float  # N / n
    n: int


class HalfAsymmetry(NamedTuple):
    delta: float
    delta_tilde: float
    c_over_n_smaller_first: bool
    onset_higher_first: bool


def phi_r(p: ModelParams, r: int) -> float:
    """Effective occurrence probability ``c/r - c/n`` of the word at rank ``r``."""
    if not 1 <= r <= p.n:
        raise DomainError(f"rank {r} outside [1, {p.n}]")
    return p.c / r - p.c / p.n


def _binom_logpmf(N: int, q: float, nu: int) -> float:
    if q == 0.0:
        return 0.0 if nu == 0 else -math.inf
    if q == 1.0:
        return 0.0 if nu == N else -math.inf
    return (
        math.lgamma(N + 1)
        - math.lgamma(nu + 1)
        - math.lgamma(N - nu + 1)
        + nu * math.log(q)
        + (N - nu) * math.log1p(-q)
    )


def occurrence_pmf(p: ModelParams, r: int, nu: int) -> float:
    """Probability that the rank-``r`` word occurs ``nu`` times (binomial in ``phi_r``)."""
    if not 0 <= nu <= p.N:
        raise DomainError(f"count {nu} outside [0, {p.N}]")
    q = phi_r(p, r)
    if not 0.0 <= q <= 1.0:
        raise DomainError(f"phi_{r} = {q} is not a probability")
    return math.exp(_binom_logpmf(p.N, q, nu))


def rank_steps_rhat(p: ModelParams, k: int) -> float:
    """Predicted rank at which the occurrence count drops from ``k+1`` to ``k``."""
    if k < 0:
        raise DomainError("k must be >= 0")
    return 1.0 / (k / (p.N * p.c) + 1.0 / p.n)


def predicted_occupancy(p: ModelParams, m: int) -> float:
    """Predicted number of words occurring exactly ``m`` times."""
    if m < 1:
        raise DomainError("m must be >= 1")
    a = p.scale
    return p.N * p.c / ((m - 1 + a) * (m + a))


def predicted_hapax(p: ModelParams, threshold: int = 3) -> float:
    return math.fsum(predicted_occupancy(p, m) for m in range(1, threshold + 1))


def half_asymmetry(c1: float, n1: int, r_min1: int, c2: float, n2: int, r_min2: int) -> HalfAsymmetry:
    """``delta = 1e6 (c2/n2 - c1/n1)`` and ``delta_tilde = 1e3 (c1/r_min1 - c2/r_min2)``.

    Both are expected positive: the first half has the smaller ``c/n`` and its
    Zipfian range starts at a higher frequency.
    """
    delta = 1e6 * (c2 / n2 - c1 / n1)
    delta_tilde = 1e3 * (c1 / r_min1 - c2 / r_min2)
    return HalfAsymmetry(delta, delta_tilde, delta > 0, delta_tilde > 0)


def regime_check(p: ModelParams) -> RegimeCheck:
    cube = p.n**3 / p.N
    length = p.N / p.n
    ok = cube >= REGIME_CUBE_RATIO and length >= REGIME_LENGTH_RATIO and p.n >= REGIME_MIN_VOCAB
    return RegimeCheck(ok, cube, length, p.n)
