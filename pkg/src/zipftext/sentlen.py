"""Distribution of sentence lengths (in words): mean, dispersion and entropy."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyTextError


@dataclass(frozen=True)
class SentenceLengthDistribution:
    kappa: dict[int, float]
    mean: float
    dispersion: float
    entropy: float
    count: int


def sentence_stats(lengths: Iterable[int]) -> SentenceLengthDistribution:
    """Fractions of sentences per length and their mean, variance and entropy (nats).

    Zero-length entries are ignored.
    """
    lens = [int(x) for x in lengths if x > 0]
    if not lens:
        raise EmptyTextError("need at least one non-empty sentence")
    total = len(lens)
    kappa = {a: c / total for a, c in sorted(Counter(lens).items())}
    mean = sum(lens) / total
    dispersion = math.fsum(k * (a - mean) ** 2 for a, k in kappa.items())
    entropy = -math.fsum(k * math.log(k) for k in kappa.values())
    return SentenceLengthDistribution(kappa, mean, dispersion, max(entropy, 0.0), total)
