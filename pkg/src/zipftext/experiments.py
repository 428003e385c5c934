"""Per-text reports, half-split comparison, random-split control and text mixing."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, fields
from typing import Callable, NamedTuple, Sequence

from scipy import stats

from .corpus import TokenizedText, mix_texts, split_halves
from .errors import ZipfTextError
from .latent_model import HalfAsymmetry, half_asymmetry
from .rank_stats import build_rank_table, hapax_count, yule_k
from .sentlen import sentence_stats
from .spatial import space_frequency_profile, zipfian_mu
from .zipf_fit import c_bounds, find_zipf_range, ks_test


@dataclass
class TextReport:
    """Every per-text quantity; ``None`` marks a field whose analysis failed."""

    label: str
    N: int
    n: int | None = None
    r_min: int | None = None
    r_max: int | None = None
    c: float | None = None
    gamma: float | None = None
    d: float | None = None
    abs_d: float | None = None
    s_err: float | None = None
    r2: float | None = None
    S: int | None = None
    L: int | None = None
    mean_word_length: float | None = None
    h: int | None = None
    h_ratio: float | None = None
    K: float | None = None
    mu: float | None = None
    rho: int | None = None
    sigma: int | None = None
    B: int | None = None
    mean_sentence_length: float | None = None
    sentence_dispersion: float | None = None
    sentence_entropy: float | None = None
    ks_D: float | None = None
    ks_p: float | None = None
    c_lower: float | None = None
    c_upper: float | None = None
    c_consistent: bool | None = None
    no_zipf_range: bool = False
    notes: list[str] = field(default_factory=list)

    @classmethod
    def columns(cls) -> list[str]:
        return [f.name for f in fields(cls)]


class FeatureVerdict(NamedTuple):
    feature: str
    group: int
    starred: bool
    expected: str  # direction for the first half: "+", "-" or "0" (no difference)
    observed: str | None  # "+", "-", "=", "mixed" or None when unavailable
    holds: bool | None


@dataclass
class HalfComparison:
    label: str
    first: TextReport
    second: TextReport
    asymmetry: HalfAsymmetry | None
    verdicts: list[FeatureVerdict]

    @property
    def diagnostic(self) -> str:
        starred = [v for v in self.verdicts if v.starred]
        return "text-like" if starred and all(v.holds for v in starred) else "inconclusive"


@dataclass
class RandomSplitSummary:
    label: str
    natural_delta: int | None
    trials: list[tuple[int, int | None, int | None]]
    positive: int
    negative: int
    zero: int
    mean_abs_delta: float | None
    band: tuple[int, int]

    @property
    def sign_balanced(self) -> bool:
        lo, hi = self.band
        return lo <= self.positive <= hi

    @property
    def natural_exceeds(self) -> bool | None:
        if self.natural_delta is None or self.mean_abs_delta is None:
            return None
        return abs(self.natural_delta) > self.mean_abs_delta


class RangeSummary(NamedTuple):
    label: str
    n: int
    r_min: int | None
    r_max: int | None
    c: float | None
    gamma: float | None
    abs_d: float | None

    @property
    def width(self) -> int | None:
        return None if self.r_min is None else self.r_max - self.r_min


class MixVerdict(NamedTuple):
    parts: tuple[str, ...]
    mixture: RangeSummary
    width_grows: bool | None  # r_max - r_min of the mixture >= that of every part
    r_max_grows: bool | None  # r_max of the mixture >= that of every part
    r_min_not_below: bool | None  # r_min of the mixture >= the smallest r_min of the parts


@dataclass
class MixingReport:
    texts: list[RangeSummary]
    mixtures: list[MixVerdict]


def analyze_text(
    t: TokenizedText,
    rare_threshold: int = 3,
    tie_break: str = "first",
    ks_sample: str = "ranks",
) -> TextReport:
    """Run every analysis on one text; failed parts leave their fields empty."""
    rep = TextReport(label=t.label, N=t.N, L=t.letter_count, S=t.punct_count, rho=t.paragraph_count, B=t.byte_size)
    if t.N:
        rep.mean_word_length = t.letter_count / t.N
    if t.sentence_lengths is not None:
        rep.sigma = len(t.sentence_lengths)
        if t.sentence_lengths:
            dist = sentence_stats(t.sentence_lengths)
            rep.mean_sentence_length = dist.mean
            rep.sentence_dispersion = dist.dispersion
            rep.sentence_entropy = dist.entropy
    if t.N == 0:
        rep.notes.append("empty text")
        return rep

    rt = build_rank_table(t, tie_break)
    rep.n = rt.n
    rep.h, rep.h_ratio = hapax_count(rt, rare_threshold)
    if t.N >= 2:
        rep.K = yule_k(rt)
    try:
        zr = find_zipf_range(rt)
    except ZipfTextError as exc:
        rep.no_zipf_range = True
        rep.notes.append(f"zipf range: {exc}")
        return rep
    rep.r_min, rep.r_max = zr.r_min, zr.r_max
    rep.c, rep.gamma = zr.fit.c, zr.fit.gamma
    rep.s_err, rep.r2 = zr.fit.s_err, zr.fit.r2
    rep.d, rep.abs_d = zr.d, abs(zr.d)
    rep.c_lower, rep.c_upper, rep.c_consistent = c_bounds(zr, rt.n)
    rep.ks_D, rep.ks_p, _ = ks_test(rt, zr, ks_sample)
    try:
        rep.mu = zipfian_mu(rt, space_frequency_profile(t), zr)
    except ZipfTextError as exc:
        rep.notes.append(f"mu: {exc}")
    return rep


def _sign(a, b) -> str | None:
    if a is None or b is None:
        return None
    return "+" if a > b else "-" if a < b else "="


def _ratio(a, b):
    return None if a is None or b is None or b == 0 else a / b


def _neg(x):
    return None if x is None else -x


# (feature, group, starred, expected sign for the first half, quantities compared)
_FEATURES: list[tuple[str, int, bool, str, list[Callable[[TextReport], object]]]] = [
    ("minimal rank of the law", 1, True, "-", [lambda r: r.r_min]),
    ("maximal frequency of the law (c/r_min)", 1, False, "+", [lambda r: _ratio(r.c, r.r_min)]),
    ("spatial homogeneity of Zipfian-range words (-mu)", 1, True, "+", [lambda r: _neg(r.mu)]),
    ("number of different words", 1, False, "+", [lambda r: r.n]),
    ("number of rare words (absolute and relative)", 1, True, "+", [lambda r: r.h, lambda r: r.h_ratio]),
    ("normalized prefactor c/n", 1, True, "-", [lambda r: _ratio(r.c, r.n)]),
    ("repetitiveness of words (Yule's K)", 1, False, "-", [lambda r: r.K]),
    ("number of punctuation signs", 2, False, "+", [lambda r: r.S]),
    ("number of letters", 2, False, "+", [lambda r: r.L]),
    ("average length of words", 2, False, "+", [lambda r: r.mean_word_length]),
    ("number of sentences", 2, False, "+", [lambda r: r.sigma]),
    ("average length of sentences", 2, False, "-", [lambda r: r.mean_sentence_length]),
    (
        "entropy and variance of sentence lengths",
        2,
        False,
        "-",
        [lambda r: r.sentence_entropy, lambda r: r.sentence_dispersion],
    ),
    ("number of paragraphs", 2, False, "+", [lambda r: r.rho]),
    ("size in bytes", 2, False, "+", [lambda r: r.B]),
    ("exponent of the law", 3, False, "0", [lambda r: r.gamma]),
    ("maximal rank of the law", 3, False, "0", [lambda r: r.r_max]),
]


def half_verdicts(first: TextReport, second: TextReport) -> list[FeatureVerdict]:
    out = []
    for name, group, starred, expected, getters in _FEATURES:
        signs = [_sign(g(first), g(second)) for g in getters]
        if any(s is None for s in signs):
            observed = None
        elif len(set(signs)) == 1:
            observed = signs[0]
        else:
            observed = "mixed"
        holds = None if observed is None or expected == "0" else observed == expected
        out.append(FeatureVerdict(name, group, starred, expected, observed, holds))
    return out


def compare_halves(t: TokenizedText, **analysis_kw) -> HalfComparison:
    """Analyze the natural halves of ``t`` and check each feature's direction."""
    halves = split_halves(t, "natural")
    r1 = analyze_text(halves.first, **analysis_kw)
    r2 = analyze_text(halves.second, **analysis_kw)
    asym = None
    if None not in (r1.c, r2.c, r1.n, r2.n, r1.r_min, r2.r_min):
        asym = half_asymmetry(r1.c, r1.n, r1.r_min, r2.c, r2.n, r2.r_min)
    return HalfComparison(t.label, r1, r2, asym, half_verdicts(r1, r2))


def _r_min(t: TokenizedText, tie_break: str) -> int | None:
    try:
        return find_zipf_range(build_rank_table(t, tie_break)).r_min
    except ZipfTextError:
        return None


def random_split_control(t: TokenizedText, seeds: Sequence[int], tie_break: str = "first") -> RandomSplitSummary:
    """Compare the natural-split ``r_min`` difference with random word-level splits."""
    if len(seeds) < 10:
        raise ValueError("random-split control needs at least 10 seeds")
    nat = split_halves(t, "natural")
    a, b = _r_min(nat.first, tie_break), _r_min(nat.second, tie_break)
    natural_delta = None if a is None or b is None else a - b
    trials = []
    deltas = []
    for seed in seeds:
        s = split_halves(t, "random", seed=seed)
        r1, r2 = _r_min(s.first, tie_break), _r_min(s.second, tie_break)
        trials.append((seed, r1, r2))
        if r1 is not None and r2 is not None:
            deltas.append(r1 - r2)
    pos = sum(d > 0 for d in deltas)
    neg = sum(d < 0 for d in deltas)
    nonzero = pos + neg
    if nonzero:
        lo, hi = stats.binom.interval(0.95, nonzero, 0.5)
        band = (int(lo), int(hi))
    else:
        band = (0, 0)
    mean_abs = math.fsum(abs(d) for d in deltas) / len(deltas) if deltas else None
    return RandomSplitSummary(t.label, natural_delta, trials, pos, neg, len(deltas) - nonzero, mean_abs, band)


def _range_summary(t: TokenizedText, tie_break: str) -> RangeSummary:
    rt = build_rank_table(t, tie_break)
    try:
        zr = find_zipf_range(rt)
    except ZipfTextError:
        return RangeSummary(t.label, rt.n, None, None, None, None, None)
    return RangeSummary(t.label, rt.n, zr.r_min, zr.r_max, zr.fit.c, zr.fit.gamma, abs(zr.d))


def _mix_verdict(parts: Sequence[RangeSummary], mixed: RangeSummary) -> MixVerdict:
    names = tuple(p.label for p in parts)
    if mixed.r_min is None or any(p.r_min is None for p in parts):
        return MixVerdict(names, mixed, None, None, None)
    return MixVerdict(
        names,
        mixed,
        mixed.width >= max(p.width for p in parts),
        mixed.r_max >= max(p.r_max for p in parts),
        mixed.r_min >= min(p.r_min for p in parts),
    )


def mixing_experiment(texts: Sequence[TokenizedText], tie_break: str = "first") -> MixingReport:
    """Zipfian ranges of each text, of every pair and (for 3+ texts) of all together."""
    if len(texts) < 2:
        raise ValueError("mixing needs at least 2 texts")
    singles = [_range_summary(t, tie_break) for t in texts]
    mixes = []
    groups = list(itertools.combinations(range(len(texts)), 2))
    if len(texts) > 2:
        groups.append(tuple(range(len(texts))))
    for idx in groups:
        label = "+".join(texts[i].label for i in idx)
        mixed = _range_summary(mix_texts(*(texts[i] for i in idx), label=label), tie_break)
        mixes.append(_mix_verdict([singles[i] for i in idx], mixed))
    return MixingReport(singles, mixes)
