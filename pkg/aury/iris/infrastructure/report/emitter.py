"""结果文件输出。

输出目录下的文件：
    pairs.csv              每个无序冒名对一行
    stats.csv              每个分辨率层一行（scale 降序）
    histogram.csv / .svg   全分辨率冒名分布直方图与二项叠加
    dof_vs_resolution.svg  自由度随分辨率变化曲线
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from aury.iris.common.logging import logger
from aury.iris.domain.exceptions import DegenerateDistributionError
from aury.iris.domain.models import HistogramSpec, ImposterStats, PairResult, SweepRow
from aury.iris.domain.stats import histogram_with_overlay, imposter_stats

from ..io.exceptions import EmissionError
from .plots import plot_dof_curve, plot_histogram
from .tables import write_histogram_csv, write_pairs_csv, write_stats_csv

PAIRS_FILE = "pairs.csv"
STATS_FILE = "stats.csv"
HISTOGRAM_CSV = "histogram.csv"
HISTOGRAM_SVG = "histogram.svg"
DOF_SVG = "dof_vs_resolution.svg"


@dataclass
class EmittedFiles:
    """一次输出写下的文件。"""

    output_dir: Path
    paths: list[Path] = field(default_factory=list)

    def names(self) -> list[str]:
        return [p.name for p in self.paths]


def prepare_output_dir(output_dir: str | Path) -> Path:
    directory = Path(output_dir)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise EmissionError(f"无法创建输出目录 {directory}: {exc}", cause=exc) from exc
    if not directory.is_dir():
        raise EmissionError(f"输出路径不是目录: {directory}")
    return directory


def emit_stats(rows: Sequence[SweepRow], output_dir: str | Path, *, plot: bool = True) -> EmittedFiles:
    """只写统计表（以及自由度曲线）。"""
    directory = prepare_output_dir(output_dir)
    emitted = EmittedFiles(directory)
    emitted.paths.append(write_stats_csv(rows, directory / STATS_FILE))
    if plot and any(r.dof is not None and r.scale is not None for r in rows):
        emitted.paths.append(plot_dof_curve(rows, directory / DOF_SVG))
    return emitted


def emit_results(
    pairs: Sequence[PairResult],
    stats: ImposterStats | None,
    sweep: Sequence[SweepRow],
    output_dir: str | Path,
    *,
    histogram_spec: HistogramSpec | None = None,
) -> EmittedFiles:
    """写出比对结果、统计表、直方图与曲线。

    pairs 为空时不写任何文件并抛出 DegenerateDistributionError。
    标准差为 0（自由度无定义）时跳过直方图，其余文件照常写出。
    """
    if not pairs:
        raise DegenerateDistributionError("没有冒名比对结果，不输出统计与直方图")

    directory = prepare_output_dir(output_dir)
    emitted = EmittedFiles(directory)
    emitted.paths.append(write_pairs_csv(pairs, directory / PAIRS_FILE))

    if stats is None and len(pairs) >= 2:
        stats = imposter_stats(pairs)
    if stats is not None and stats.dof_defined:
        hist = histogram_with_overlay(pairs, stats, histogram_spec)
        emitted.paths.append(write_histogram_csv(hist, directory / HISTOGRAM_CSV))
        emitted.paths.append(plot_histogram(hist, directory / HISTOGRAM_SVG))
    else:
        logger.warning("冒名分布自由度无定义，跳过直方图输出")

    if sweep:
        emitted.paths.extend(emit_stats(sweep, directory).paths)
    logger.info(f"已写出 {', '.join(emitted.names())} 到 {directory}")
    return emitted


__all__ = [
    "DOF_SVG",
    "HISTOGRAM_CSV",
    "HISTOGRAM_SVG",
    "PAIRS_FILE",
    "STATS_FILE",
    "EmittedFiles",
    "emit_results",
    "emit_stats",
    "prepare_output_dir",
]
