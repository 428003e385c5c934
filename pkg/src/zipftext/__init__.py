"""Zipf's-law analysis of single texts: validity ranges, halves, mixtures."""

from .corpus import (
    SplitResult,
    TokenizedText,
    TokenizerConfig,
    mix_texts,
    read_text,
    segment,
    split_halves,
    tokenize,
)
from .errors import (
    DegenerateFitError,
    DomainError,
    EmptyTextError,
    FitError,
    IngestionError,
    NoZipfianRangeError,
    RangeError,
    SplitError,
    UndefinedPeriodError,
    ZipfTextError,
)
from .experiments import (
    HalfComparison,
    MixingReport,
    RandomSplitSummary,
    TextReport,
    analyze_text,
    compare_halves,
    mixing_experiment,
    random_split_control,
)
from .latent_model import (
    ModelParams,
    half_asymmetry,
    occurrence_pmf,
    phi_r,
    predicted_hapax,
    predicted_occupancy,
    rank_steps_rhat,
    regime_check,
)
from .rank_stats import (
    OccupancySpectrum,
    RankTable,
    build_rank_table,
    hapax_count,
    occupancy_entropy,
    occupancy_spectrum,
    yule_k,
)
from .report import export_profiles, export_report, load_report_json
from .sentlen import SentenceLengthDistribution, sentence_stats
from .spatial import SpatialProfile, space_frequency_profile, zipfian_mu
from .zipf_fit import (
    FitResult,
    ZipfRange,
    c_bounds,
    deviation_d,
    find_r_max,
    find_zipf_range,
    ks_test,
    loglog_fit,
)

__version__ = "0.1.0"
