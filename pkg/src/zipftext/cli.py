"""Command-line entry point: ``zipftext analyze FILE...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .corpus import DEFAULT_CONFIG, TokenizerConfig, read_text
from .errors import ZipfTextError
from .experiments import analyze_text, compare_halves, mixing_experiment, random_split_control
from .rank_stats import build_rank_table
from .report import export_profiles, export_report
from .spatial import space_frequency_profile
from .zipf_fit import find_zipf_range

log = logging.getLogger("zipftext")


def parse_trim(spec: str) -> tuple[int | None, int | None]:
    """``"A:B"`` -> byte slice bounds; either side may be empty."""
    a, sep, b = spec.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("expected A:B")
    try:
        return (int(a) if a else None, int(b) if b else None)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad byte range {spec!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zipftext", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one or more plain-text files")
    a.add_argument("files", nargs="+", type=Path)
    a.add_argument("--halves", action="store_true", help="compare the natural first and second halves")
    a.add_argument("--random-split", action="store_true", help="random-half control for r_min")
    a.add_argument("--seeds", type=int, default=30, metavar="K", help="number of random splits (default 30)")
    a.add_argument("--seed", type=int, default=0, metavar="S", help="first seed; seeds S..S+K-1 are used")
    a.add_argument("--mix", action="store_true", help="mix the inputs pairwise and all together")
    a.add_argument("--rare-threshold", type=int, default=3, help="max occurrences of a rare word (default 3)")
    a.add_argument("--tie-break", choices=["first", "alpha"], default="first")
    a.add_argument("--ks-sample", choices=["ranks", "tokens"], default="ranks", help="KS effective sample size")
    a.add_argument("--format", choices=["json", "csv"], default="csv")
    a.add_argument("--out", type=Path, default=Path("zipftext-out"), metavar="DIR")
    a.add_argument("--trim-bytes", type=parse_trim, metavar="A:B", help="analyze only bytes A..B of each file")
    a.add_argument("--config", type=Path, help="tokenizer config file (key = value lines)")
    a.add_argument("--profiles", action="store_true", help="also write per-text rank/spectrum/sentence CSVs")
    a.add_argument("--full-precision", action="store_true", help="write floats at full precision")
    a.add_argument("--strict", action="store_true", help="exit 2 if any input has no Zipfian range")
    a.add_argument("-v", "--verbose", action="store_true")
    return parser


def _fmt(x, spec: str) -> str:
    return "-" if x is None else format(x, spec)


def run_analyze(args: argparse.Namespace) -> int:
    config = TokenizerConfig.from_file(args.config) if args.config else DEFAULT_CONFIG
    texts = [read_text(p, config, trim=args.trim_bytes) for p in args.files]
    kw = dict(rare_threshold=args.rare_threshold, tie_break=args.tie_break, ks_sample=args.ks_sample)

    reports = [analyze_text(t, **kw) for t in texts]
    halves = [compare_halves(t, **kw) for t in texts] if args.halves else []
    seeds = list(range(args.seed, args.seed + args.seeds))
    randoms = [random_split_control(t, seeds, args.tie_break) for t in texts] if args.random_split else []
    mixing = mixing_experiment(texts, args.tie_break) if args.mix and len(texts) >= 2 else None
    if args.mix and len(texts) < 2:
        log.warning("--mix needs at least two files; skipped")

    paths = export_report(args.out, reports, args.format, halves, mixing, randoms, args.full_precision)
    if args.profiles:
        for t in texts:
            rt = build_rank_table(t, args.tie_break)
            try:
                zr = find_zipf_range(rt)
            except ZipfTextError:
                zr = None
            paths += export_profiles(args.out, t, rt, space_frequency_profile(t), zr, args.full_precision)

    print(f"{'text':<20} {'N':>8} {'n':>6} {'r_min':>6} {'r_max':>6} {'c':>7} {'gamma':>7}")
    for r in reports:
        print(
            f"{r.label[:20]:<20} {r.N:>8} {_fmt(r.n, 'd'):>6} {_fmt(r.r_min, 'd'):>6} "
            f"{_fmt(r.r_max, 'd'):>6} {_fmt(r.c, '.4f'):>7} {_fmt(r.gamma, '.4f'):>7}"
        )
    for hc in halves:
        held = sum(bool(v.holds) for v in hc.verdicts if v.starred)
        total = sum(v.starred for v in hc.verdicts)
        print(f"{hc.label}: halves {hc.diagnostic} ({held}/{total} starred features in expected direction)")
    for p in paths:
        log.info("wrote %s", p)

    if args.strict and any(r.no_zipf_range for r in reports):
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return run_analyze(args)
    except ZipfTextError as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
