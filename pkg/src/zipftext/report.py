"""CSV and JSON export of analysis results.

Column order follows the per-text tables (word-level quantities, then the
Zipfian range, then structural counts). Floats are written with 4 significant
digits unless ``full_precision`` is set. Output is deterministic: the same
results always produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import TokenizedText
from .experiments import HalfComparison, MixingReport, RandomSplitSummary, TextReport
from .latent_model import ModelParams, predicted_occupancy
from .rank_stats import RankTable, occupancy_spectrum
from .sentlen import sentence_stats
from .spatial import SpatialProfile
from .zipf_fit import ZipfRange

SCHEMA_VERSION = 1


def _fmt(x, full_precision: bool):
    if isinstance(x, float) and not full_precision:
        return float(f"{x:.4g}")
    return x


def _cell(x, full_precision: bool) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x) if full_precision else f"{x:.4g}"
    if isinstance(x, list):
        return "; ".join(map(str, x))
    return str(x)


def report_to_dict(rep: TextReport, full_precision: bool = True) -> dict:
    return {k: _fmt(v, full_precision) for k, v in asdict(rep).items()}


def report_from_dict(d: dict) -> TextReport:
    return TextReport(**d)


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence], full_precision: bool) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_cell(x, full_precision) for x in row])
    return path


def _half_rows(comparisons: Sequence[HalfComparison]):
    for hc in comparisons:
        delta = hc.asymmetry.delta if hc.asymmetry else None
        delta_t = hc.asymmetry.delta_tilde if hc.asymmetry else None
        for v in hc.verdicts:
            yield [hc.label, v.group, v.feature, v.starred, v.expected, v.observed or "n/a", v.holds, None]
        yield [hc.label, 1, "delta = 1e6 (c2/n2 - c1/n1)", False, "+", _sign_of(delta), _pos(delta), delta]
        yield [hc.label, 1, "delta_tilde = 1e3 (c1/r_min1 - c2/r_min2)", False, "+", _sign_of(delta_t), _pos(delta_t), delta_t]
        yield [hc.label, 0, "diagnostic", True, "text-like", hc.diagnostic, hc.diagnostic == "text-like", None]


def _sign_of(x):
    return "n/a" if x is None else "+" if x > 0 else "-" if x < 0 else "="


def _pos(x):
    return None if x is None else x > 0


HALF_COLUMNS = ["text", "group", "feature", "starred", "expected_first", "observed_first", "holds", "value"]
MIX_COLUMNS = ["parts", "n", "r_min", "r_max", "c", "gamma", "abs_d", "width_grows", "r_max_grows", "r_min_not_below"]
RANDOM_COLUMNS = ["text", "seed", "r_min1", "r_min2", "delta"]


def _mix_rows(mixing: MixingReport):
    for s in mixing.texts:
        yield [s.label, s.n, s.r_min, s.r_max, s.c, s.gamma, s.abs_d, None, None, None]
    for m in mixing.mixtures:
        s = m.mixture
        yield [" + ".join(m.parts), s.n, s.r_min, s.r_max, s.c, s.gamma, s.abs_d, m.width_grows, m.r_max_grows, m.r_min_not_below]


def _random_rows(summaries: Sequence[RandomSplitSummary]):
    for s in summaries:
        yield [s.label, "natural", None, None, s.natural_delta]
        for seed, a, b in s.trials:
            yield [s.label, seed, a, b, None if a is None or b is None else a - b]


def _random_dict(s: RandomSplitSummary, fp: bool) -> dict:
    return {
        "text": s.label,
        "natural_delta": s.natural_delta,
        "trials": [list(t) for t in s.trials],
        "positive": s.positive,
        "negative": s.negative,
        "zero": s.zero,
        "mean_abs_delta": _fmt(s.mean_abs_delta, fp),
        "band": list(s.band),
        "sign_balanced": s.sign_balanced,
        "natural_exceeds": s.natural_exceeds,
    }


def export_report(
    out_dir: str | Path,
    texts: Sequence[TextReport],
    fmt: str = "csv",
    halves: Sequence[HalfComparison] = (),
    mixing: MixingReport | None = None,
    random_splits: Sequence[RandomSplitSummary] = (),
    full_precision: bool = False,
) -> list[Path]:
    """Write results to ``out_dir`` and return the written paths."""
    if not texts and not halves:
        raise ValueError("nothing to export")
    out = Path(out_dir)
    fp = full_precision
    if fmt == "json":
        doc = {
            "schema": "zipftext.report",
            "version": SCHEMA_VERSION,
            "texts": [report_to_dict(r, fp) for r in texts],
            "halves": [
                {
                    "text": hc.label,
                    "first": report_to_dict(hc.first, fp),
                    "second": report_to_dict(hc.second, fp),
                    "delta": _fmt(hc.asymmetry.delta, fp) if hc.asymmetry else None,
                    "delta_tilde": _fmt(hc.asymmetry.delta_tilde, fp) if hc.asymmetry else None,
                    "verdicts": [v._asdict() for v in hc.verdicts],
                    "diagnostic": hc.diagnostic,
                }
                for hc in halves
            ],
            "mixing": None
            if mixing is None
            else {
                "texts": [{k: _fmt(v, fp) for k, v in s._asdict().items()} for s in mixing.texts],
                "mixtures": [
                    {
                        "parts": list(m.parts),
                        "mixture": {k: _fmt(v, fp) for k, v in m.mixture._asdict().items()},
                        "width_grows": m.width_grows,
                        "r_max_grows": m.r_max_grows,
                        "r_min_not_below": m.r_min_not_below,
                    }
                    for m in mixing.mixtures
                ],
            },
            "random_split": [_random_dict(s, fp) for s in random_splits],
        }
        path = out / "report.json"
        out.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        return [path]
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    cols = TextReport.columns()
    rows = [[getattr(r, c) for c in cols] for r in texts]
    for hc in halves:
        rows += [[getattr(r, c) for c in cols] for r in (hc.first, hc.second)]
    paths = [_write_csv(out / "texts.csv", cols, rows, fp)]
    if halves:
        paths.append(_write_csv(out / "halves.csv", HALF_COLUMNS, _half_rows(halves), fp))
    if mixing is not None:
        paths.append(_write_csv(out / "mixing.csv", MIX_COLUMNS, _mix_rows(mixing), fp))
    if random_splits:
        paths.append(_write_csv(out / "random_split.csv", RANDOM_COLUMNS, _random_rows(random_splits), fp))
    return paths


def load_report_json(path: str | Path) -> dict:
    """Read a ``report.json``; per-text entries come back as :class:`TextReport`."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if doc.get("schema") != "zipftext.report" or doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema in {path}")
    doc["texts"] = [report_from_dict(d) for d in doc["texts"]]
    return doc


def export_profiles(
    out_dir: str | Path,
    t: TokenizedText,
    rt: RankTable,
    sp: SpatialProfile,
    zr: ZipfRange | None,
    full_precision: bool = False,
) -> list[Path]:
    """Per-text detail tables for external plotting of rank-frequency curves.

    Writes ``<label>_ranks.csv`` (rank, word, count, f, fitted f, g, t),
    ``<label>_spectrum.csv`` (m, V_m, predicted V_m) and, when the text has
    sentence structure, ``<label>_sentences.csv`` (alpha, kappa).
    """
    out = Path(out_dir)
    stem = (t.label or "text").replace("/", "_")
    fp = full_precision

    def rank_rows():
        for e in rt.entries:
            ws = sp.words.get(e.word)
            fitted = float(zr.fit.predict([e.rank])[0]) if zr else None
            yield [e.rank, e.word, e.count, e.frequency, fitted, ws and ws.space_frequency, ws and ws.period]

    paths = [_write_csv(out / f"{stem}_ranks.csv", ["rank", "word", "count", "f", "f_fit", "g", "t"], rank_rows(), fp)]

    spec = occupancy_spectrum(rt)
    model = ModelParams(rt.N, rt.n, zr.fit.c) if zr else None
    spec_rows = ([m, v, predicted_occupancy(model, m) if model else None] for m, v in spec.V.items())
    paths.append(_write_csv(out / f"{stem}_spectrum.csv", ["m", "V_m", "V_m_predicted"], spec_rows, fp))

    if t.sentence_lengths:
        dist = sentence_stats(t.sentence_lengths)
        paths.append(_write_csv(out / f"{stem}_sentences.csv", ["alpha", "kappa"], dist.kappa.items(), fp))
    return paths
