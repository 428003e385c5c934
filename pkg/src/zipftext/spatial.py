"""Spatial distribution of words: average recurrence periods and space-frequencies."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import TokenizedText
from .errors import EmptyTextError, UndefinedPeriodError
from .rank_stats import RankTable
from .zipf_fit import ZipfRange


@dataclass(frozen=True)
class WordSpacing:
    positions: tuple[int, ...]  # 1-based token indices

    @property
    def occurrences(self) -> int:
        return len(self.positions)

    @property
    def period(self) -> float:
        """Mean of (words strictly between consecutive occurrences + 1)."""
        # the gaps telescope: sum(zeta + 1) = last - first
        return (self.positions[-1] - self.positions[0]) / (len(self.positions) - 1)

    @property
    def space_frequency(self) -> float:
        return 1.0 / self.period


@dataclass(frozen=True)
class SpatialProfile:
    words: dict[str, WordSpacing]
    singletons: frozenset[str]
    N: int

    def period(self, word: str) -> float:
        return self._get(word).period

    def space_frequency(self, word: str) -> float:
        return self._get(word).space_frequency

    def _get(self, word: str) -> WordSpacing:
        try:
            return self.words[word]
        except KeyError:
            if word in self.singletons:
                raise UndefinedPeriodError(f"{word!r} occurs once; its period is undefined") from None
            raise


def space_frequency_profile(t: TokenizedText) -> SpatialProfile:
    if t.N == 0:
        raise EmptyTextError("empty text has no spatial profile")
    positions: dict[str, list[int]] = {}
    for i, w in enumerate(t.tokens, 1):
        positions.setdefault(w, []).append(i)
    words = {w: WordSpacing(tuple(p)) for w, p in positions.items() if len(p) >= 2}
    singles = frozenset(w for w, p in positions.items() if len(p) == 1)
    return SpatialProfile(words, singles, t.N)


def zipfian_mu(rt: RankTable, sp: SpatialProfile, zr: ZipfRange, from_rank: int | None = None) -> float:
    """Variational distance between ordinary and space-frequencies over the Zipfian range.

    Both frequency vectors are renormalized to sum to one over ranks
    ``from_rank..r_max`` (default ``r_min``); no factor 1/2 is applied, so the
    result lies in ``[0, 2]``. Passing ``from_rank=1`` gives the diagnostic
    variant that includes the most frequent words.
    """
    lo = zr.r_min if from_rank is None else from_rank
    words = rt.words[lo - 1 : zr.r_max]
    f = rt.frequencies[lo - 1 : zr.r_max]
    g = np.array([sp.space_frequency(w) for w in words])
    return math.fsum(np.abs(f / f.sum() - g / g.sum()))
