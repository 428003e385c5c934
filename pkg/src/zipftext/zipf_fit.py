"""Least-squares power-law fitting of ranked frequencies and its validity range.

The law ``f_r = c * r**(-gamma)`` is fitted as a straight line in natural-log
coordinates. The Zipfian range ``[r_min, r_max]`` is found by fixing ``r_max``
at the end of the smooth part of the rank-frequency curve (where tied
frequencies become common) and scanning ``r_min`` upward from 1 until the fit
over the range is good enough.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateFitError, FitError, NoZipfianRangeError, RangeError
from .rank_stats import RankTable

#: fit-quality thresholds of the validity range
S_ERR_MAX = 0.05
ONE_MINUS_R2_MAX = 0.005
#: largest number of words allowed to share the frequency at r_max
PLATEAU_MAX = 10


@dataclass(frozen=True)
class FitResult:
    c: float
    gamma: float
    s_err: float
    r2: float
    n_points: int

    def predict(self, ranks) -> np.ndarray:
        return self.c * np.asarray(ranks, dtype=float) ** (-self.gamma)


@dataclass(frozen=True)
class ZipfRange:
    r_min: int
    r_max: int
    fit: FitResult
    d: float

    @property
    def width(self) -> int:
        return self.r_max - self.r_min


class CBounds(NamedTuple):
    c_lower: float
    c_upper: float
    consistent: bool


class KSResult(NamedTuple):
    D: float
    p_value: float
    n_eff: int


def _fit(x: np.ndarray, y: np.ndarray) -> FitResult:
    xm, ym = x.mean(), y.mean()
    dx = x - xm
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise DegenerateFitError("all ranks coincide; slope undefined")
    dy = y - ym
    slope = float(dx @ dy) / sxx
    gamma = -slope
    ln_c = ym + gamma * xm
    yhat = ln_c - gamma * x
    resid = y - yhat
    s_err = float(resid @ resid)
    sst = float(dy @ dy)
    if sst == 0.0:
        # flat data: the line explains no variation
        r2 = 0.0
    else:
        dh = yhat - ym
        r2 = min(1.0, float(dh @ dh) / sst)
    return FitResult(math.exp(ln_c), gamma, s_err, r2, len(x))


def loglog_fit(ranks, frequencies) -> FitResult:
    """Closed-form least-squares fit of ``ln f = ln c - gamma ln r``.

    ``r2`` is the share of the variance of ``ln f`` explained by the line.
    """
    r = np.asarray(ranks, dtype=float)
    f = np.asarray(frequencies, dtype=float)
    if r.shape != f.shape or r.ndim != 1:
        raise FitError("ranks and frequencies must be 1-d sequences of equal length")
    if len(r) < 2:
        raise FitError("need at least 2 points")
    if np.any(r <= 0) or np.any(f <= 0) or not (np.all(np.isfinite(r)) and np.all(np.isfinite(f))):
        raise FitError("ranks and frequencies must be finite and strictly positive")
    return _fit(np.log(r), np.log(f))


def find_r_max(rt: RankTable, plateau_max: int = PLATEAU_MAX) -> int:
    """Last rank before the first frequency shared by more than ``plateau_max`` words.

    Raises :class:`RangeError` for tables with no frequency shared by at least
    ``plateau_max`` words (too short to have a hapax-dominated tail).
    """
    counts = rt.counts
    # plateau boundaries: ranks where the count changes
    change = np.flatnonzero(np.diff(counts)) + 1
    starts = np.concatenate(([0], change))
    ends = np.concatenate((change, [len(counts)]))
    sizes = ends - starts
    if not np.any(sizes >= plateau_max):
        raise RangeError(f"no frequency is shared by {plateau_max} or more words")
    too_big = np.flatnonzero(sizes > plateau_max)
    r_max = int(starts[too_big[0]]) if len(too_big) else rt.n
    if r_max < 2:
        raise RangeError("the most frequent words already form a large plateau")
    return r_max


def find_zipf_range(
    rt: RankTable,
    r_max: int | None = None,
    s_err_max: float = S_ERR_MAX,
    one_minus_r2_max: float = ONE_MINUS_R2_MAX,
) -> ZipfRange:
    """Smallest ``r_min`` whose fit over ``[r_min, r_max]`` meets both quality limits."""
    if r_max is None:
        r_max = find_r_max(rt)
    if not 2 <= r_max <= rt.n:
        raise RangeError(f"r_max={r_max} outside [2, {rt.n}]")
    x = np.log(np.arange(1, r_max + 1, dtype=float))
    y = np.log(rt.frequencies[:r_max])
    for r_min in range(1, r_max):
        fit = _fit(x[r_min - 1 :], y[r_min - 1 :])
        if fit.s_err <= s_err_max and 1.0 - fit.r2 <= one_minus_r2_max:
            return ZipfRange(r_min, r_max, fit, _deviation(rt, r_min, r_max, fit))
    raise NoZipfianRangeError(f"no r_min in [1, {r_max - 1}] meets the fit criteria")


def _deviation(rt: RankTable, r_min: int, r_max: int, fit: FitResult) -> float:
    k = np.arange(r_min, r_max + 1)
    return math.fsum(fit.predict(k) - rt.frequencies[r_min - 1 : r_max])


def deviation_d(rt: RankTable, zr: ZipfRange) -> float:
    """Signed ``sum_k (c k^-gamma - f_k)`` over the Zipfian range."""
    return _deviation(rt, zr.r_min, zr.r_max, zr.fit)


def harmonic(n: int) -> float:
    return math.fsum(1.0 / k for k in range(1, n + 1))


def c_bounds(zr: ZipfRange, n: int) -> CBounds:
    """Bounds on the prefactor implied by normalization of the frequencies.

    The law bounding all frequencies from above gives ``c * H(n) > 1``; its
    accuracy inside the range gives ``c * (H(r_max) - H(r_min - 1)) < 1``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lower = 1.0 / harmonic(n)
    upper = 1.0 / math.fsum(1.0 / k for k in range(zr.r_min, zr.r_max + 1))
    return CBounds(lower, upper, lower < zr.fit.c < upper)


def kolmogorov_sf(lam: float, tol: float = 1e-10) -> float:
    """Asymptotic Kolmogorov survival function ``2 sum (-1)^(k-1) exp(-2 k^2 lam^2)``."""
    # below 0.2 the survival function differs from 1 by < 1e-12
    if lam < 0.2:
        return 1.0
    total = 0.0
    k = 1
    while True:
        term = math.exp(-2.0 * k * k * lam * lam)
        total += term if k % 2 else -term
        if term < tol:
            break
        k += 1
    return min(1.0, max(0.0, 2.0 * total))


def ks_test(rt: RankTable, zr: ZipfRange, sample_size: str = "ranks") -> KSResult:
    """Kolmogorov-Smirnov distance between empirical and fitted rank distributions.

    Both distributions are renormalized over ``[r_min, r_max]``. The p-value
    uses the number of ranks in the range as sample size, or the number of
    tokens falling in the range with ``sample_size="tokens"``.
    """
    k = np.arange(zr.r_min, zr.r_max + 1)
    emp = rt.frequencies[zr.r_min - 1 : zr.r_max]
    fitted = zr.fit.predict(k)
    cdf_emp = np.cumsum(emp) / emp.sum()
    cdf_fit = np.cumsum(fitted) / fitted.sum()
    D = float(np.max(np.abs(cdf_emp - cdf_fit)))
    if sample_size == "ranks":
        n_eff = len(k)
    elif sample_size == "tokens":
        n_eff = int(rt.counts[zr.r_min - 1 : zr.r_max].sum())
    else:
        raise ValueError(f"unknown sample_size {sample_size!r}")
    return KSResult(D, kolmogorov_sf(math.sqrt(n_eff) * D), n_eff)
