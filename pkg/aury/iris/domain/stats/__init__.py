"""统计模块：二项模型、自由度估计、直方图叠加与分辨率扫描表。"""

from .binomial import (
    PHASE_CODE_DOF,
    binomial_pmf,
    binomial_pmf_all,
    estimate_dof,
    reference_ratio,
    round_half_away,
)
from .histogram import MIN_EXPECTED, goodness_of_fit, histogram_from_values, histogram_with_overlay
from .imposter import hamming_values, imposter_stats, stats_from_values
from .sweep import row_from_moments, sweep_table

__all__ = [
    "MIN_EXPECTED",
    "PHASE_CODE_DOF",
    "binomial_pmf",
    "binomial_pmf_all",
    "estimate_dof",
    "goodness_of_fit",
    "hamming_values",
    "histogram_from_values",
    "histogram_with_overlay",
    "imposter_stats",
    "reference_ratio",
    "round_half_away",
    "row_from_moments",
    "stats_from_values",
    "sweep_table",
]
