"""Rank-frequency tables, occupancy spectra and repetition measures."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .corpus import TokenizedText
from .errors import EmptyTextError


class RankEntry(NamedTuple):
    word: str
    count: int
    frequency: float
    rank: int


@dataclass(frozen=True)
class RankTable:
    """Distinct words in order of decreasing count (rank 1 = most frequent)."""

    words: tuple[str, ...]
    counts: np.ndarray
    N: int

    @property
    def n(self) -> int:
        return len(self.words)

    @property
    def frequencies(self) -> np.ndarray:
        return self.counts / self.N

    @property
    def ranks(self) -> np.ndarray:
        return np.arange(1, self.n + 1)

    @property
    def entries(self) -> Iterator[RankEntry]:
        for r, (w, c) in enumerate(zip(self.words, self.counts.tolist()), 1):
            yield RankEntry(w, c, c / self.N, r)

    def rank_of(self, word: str) -> int:
        return self.words.index(word) + 1


@dataclass(frozen=True)
class OccupancySpectrum:
    """``V[m]``: how many distinct words occur exactly ``m`` times (sparse)."""

    V: dict[int, int]

    @property
    def max_m(self) -> int:
        return max(self.V) if self.V else 0

    @property
    def n(self) -> int:
        return sum(self.V.values())

    @property
    def N(self) -> int:
        return sum(m * v for m, v in self.V.items())


def build_rank_table(t: TokenizedText, tie_break: str = "first") -> RankTable:
    """Count words of ``t`` and order them by count.

    Ties are broken by first occurrence in the text (``"first"``) or
    alphabetically (``"alpha"``).
    """
    if t.N == 0:
        raise EmptyTextError("cannot rank an empty text")
    counts = Counter(t.tokens)  # insertion order = first occurrence
    if tie_break == "first":
        items = sorted(counts.items(), key=lambda kv: -kv[1])
    elif tie_break == "alpha":
        items = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    else:
        raise ValueError(f"unknown tie_break {tie_break!r}")
    words = tuple(w for w, _ in items)
    return RankTable(words, np.array([c for _, c in items], dtype=np.int64), t.N)


def occupancy_spectrum(rt: RankTable) -> OccupancySpectrum:
    spec = Counter(rt.counts.tolist())
    return OccupancySpectrum(dict(sorted(spec.items())))


def hapax_count(rt: RankTable, threshold: int = 3) -> tuple[int, float]:
    """Number of words occurring at most ``threshold`` times, and its share of n."""
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    h = int(np.count_nonzero(rt.counts <= threshold))
    return h, h / rt.n


def yule_k(rt: RankTable) -> float:
    """Yule's constant ``100 * (sum_m V_m m^2 - N) / N^2``.

    Evaluated from integer sums so that the only rounding is the final division.
    """
    if rt.N < 2:
        raise EmptyTextError("Yule's K needs N >= 2")
    sum_sq = sum(c * c for c in rt.counts.tolist())
    return 100 * (sum_sq - rt.N) / rt.N**2


def occupancy_entropy(spec: OccupancySpectrum, n: int | None = None) -> float:
    """Entropy ``-sum (V_m/n) ln(V_m/n)`` of distinct words over occurrence counts."""
    n = spec.n if n is None else n
    if n < 1:
        raise ValueError("n must be >= 1")
    h = -math.fsum(v / n * math.log(v / n) for v in spec.V.values() if v > 0)
    return max(h, 0.0)
