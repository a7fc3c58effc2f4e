"""Pairwise sequence alignment by ant colony optimization."""

from ._core import (
    ALL_TRIMMED_SENTINEL,
    PARAM_NAMES,
    AcoParams,
    Alignment,
    ParseError,
    RunResult,
    TrimmedStats,
    checkpoint_header,
    corrected_mean,
    format_checkpoint,
    ga_score,
    histogram,
    interpolate_params,
    mutate_template,
    nw_align,
    parse_checkpoint,
    random_template,
    run_aco,
    run_ga,
    score_alignment,
    skewness,
    validate_params,
)

__all__ = [
    "ALL_TRIMMED_SENTINEL",
    "PARAM_NAMES",
    "AcoParams",
    "Alignment",
    "ParseError",
    "RunResult",
    "TrimmedStats",
    "checkpoint_header",
    "corrected_mean",
    "format_checkpoint",
    "ga_score",
    "histogram",
    "interpolate_params",
    "mutate_template",
    "nw_align",
    "parse_checkpoint",
    "random_template",
    "run_aco",
    "run_ga",
    "score_alignment",
    "skewness",
    "validate_params",
]
