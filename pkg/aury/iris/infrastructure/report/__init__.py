"""结果输出：CSV 表格与 SVG 图表。"""

from .emitter import (
    DOF_SVG,
    HISTOGRAM_CSV,
    HISTOGRAM_SVG,
    PAIRS_FILE,
    STATS_FILE,
    EmittedFiles,
    emit_results,
    emit_stats,
    prepare_output_dir,
)
from .plots import plot_dof_curve, plot_histogram
from .tables import (
    FLOAT_FORMAT,
    read_moments_table,
    read_pairs_csv,
    read_stats_csv,
    write_histogram_csv,
    write_pairs_csv,
    write_rejections_csv,
    write_stats_csv,
)

__all__ = [
    "DOF_SVG",
    "FLOAT_FORMAT",
    "HISTOGRAM_CSV",
    "HISTOGRAM_SVG",
    "PAIRS_FILE",
    "STATS_FILE",
    "EmittedFiles",
    "emit_results",
    "emit_stats",
    "plot_dof_curve",
    "plot_histogram",
    "prepare_output_dir",
    "read_moments_table",
    "read_pairs_csv",
    "read_stats_csv",
    "write_histogram_csv",
    "write_pairs_csv",
    "write_rejections_csv",
    "write_stats_csv",
]
