"""流水线编排。

每个子命令对应一个 run_* 函数：读取输入、调用领域算法、写出结果，
并返回 StageSummary 供命令行展示。所有输出只由 (输入文件, RunConfig) 决定，
与线程数无关。

输出目录布局：
    normalized/          normalize 写出的 NIR1 集合（含 rejections.csv）
    pyramid/scale_<s>/   pyramid 写出的各分辨率层
    synth/               synth 写出的合成 NIR1 集合
    eyes/                synth --eyes 写出的 PGM 与 manifest.csv
    pairs.csv / stats.csv / histogram.* / dof_vs_resolution.svg
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
import math
from pathlib import Path
from typing import Any

from aury.iris.application.config import RunConfig
from aury.iris.common.compute import ComputePool
from aury.iris.common.logging import PipelineStage, logger, set_stage
from aury.iris.domain.compare import all_pairs
from aury.iris.domain.exceptions import ArgumentError, DegenerateDistributionError
from aury.iris.domain.models import (
    HistogramSpec,
    NormalizedIris,
    PairResult,
    ResolutionLevel,
    SelectionRejection,
    SweepRow,
    SynthSpec,
)
from aury.iris.domain.normalization import attach_mask, specular_mask_heuristic, unwrap
from aury.iris.domain.preprocess import (
    SelectionItem,
    downscale,
    log_rejections,
    normalize_intensity,
    selection_report,
)
from aury.iris.domain.stats import (
    PHASE_CODE_DOF,
    goodness_of_fit,
    histogram_with_overlay,
    imposter_stats,
    reference_ratio,
    row_from_moments,
    sweep_table,
)
from aury.iris.domain.synth import generate, synth_eyes
from aury.iris.infrastructure.io import (
    ManifestEntry,
    ManifestError,
    load_set,
    parse_manifest,
    read_pbm,
    read_pgm,
    save_set,
    write_manifest,
    write_pgm,
)
from aury.iris.infrastructure.report import (
    emit_results,
    emit_stats,
    prepare_output_dir,
    read_moments_table,
    read_pairs_csv,
    write_rejections_csv,
)

NORMALIZED_DIR = "normalized"
PYRAMID_DIR = "pyramid"
SYNTH_DIR = "synth"
EYES_DIR = "eyes"
REJECTIONS_FILE = "rejections.csv"
MANIFEST_FILE = "manifest.csv"


@dataclass
class StageSummary:
    """一个阶段的执行摘要。"""

    stage: PipelineStage
    output_dir: Path
    files: list[Path] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    rows: list[SweepRow] = field(default_factory=list)


def level_dir(output_dir: Path, scale: float) -> Path:
    return output_dir / PYRAMID_DIR / f"scale_{scale:g}"


def _uniform_shape(images: Sequence[NormalizedIris], source: Path) -> tuple[int, int]:
    if not images:
        raise DegenerateDistributionError(f"{source} 中没有 NIR1 文件")
    shapes = {nir.shape for nir in images}
    if len(shapes) != 1:
        raise ArgumentError(f"{source} 中图像尺寸不一致: {sorted(shapes)}")
    return images[0].shape


# =============================================================================
# normalize
# =============================================================================


def _normalize_entry(entry: ManifestEntry, row: int, config: RunConfig, specular: bool) -> SelectionItem:
    eye = read_pgm(entry.image_path, entry.image_id, entry.subject_id, entry.eye_side)
    seg = entry.segmentation
    nir = unwrap(eye, seg, config.base_rows, config.base_cols)
    external = None
    if entry.mask_path is not None:
        external = read_pbm(entry.mask_path)
        if external.shape != nir.shape:
            raise ManifestError(
                f"掩码尺寸 {external.shape} 与归一化网格 {nir.shape} 不一致",
                row=row,
                column="mask_path",
            )
    heuristic = None
    if specular:
        heuristic = specular_mask_heuristic(
            eye, seg, nir, threshold=config.specular_threshold, dilation=config.specular_dilation
        )
    return attach_mask(nir, external, heuristic), seg


def run_normalize(
    config: RunConfig,
    manifest_path: str | Path,
    *,
    select: bool = True,
    specular: bool = True,
) -> StageSummary:
    """清单 → 展开 → 掩码 → 选择 → 强度归一化 → NIR1。"""
    set_stage(PipelineStage.NORMALIZE)
    manifest = parse_manifest(manifest_path)
    out = prepare_output_dir(config.output_dir / NORMALIZED_DIR)

    with ComputePool(config.threads) as pool:
        items = pool.map(
            lambda job: _normalize_entry(job[1], job[0] + 1, config, specular),
            list(enumerate(manifest.entries)),
        )

    rejected: list[SelectionRejection] = []
    if select:
        items, rejected = selection_report(items, config.criteria)
        log_rejections(rejected, len(items), len(manifest))

    normalized = [normalize_intensity(nir) for nir, _ in items]
    files = save_set(normalized, out)
    if select:
        files.append(write_rejections_csv(rejected, out / REJECTIONS_FILE))
    return StageSummary(
        stage=PipelineStage.NORMALIZE,
        output_dir=out,
        files=files,
        details={"entries": len(manifest), "accepted": len(normalized), "rejected": len(rejected)},
    )


# =============================================================================
# pyramid
# =============================================================================


def _downscale_set(images: Sequence[NormalizedIris], scale: float, pool: ComputePool) -> list[NormalizedIris]:
    return pool.map(lambda nir: downscale(nir, scale), images)


def run_pyramid(config: RunConfig, input_dir: str | Path) -> StageSummary:
    """为每个 scale 从全分辨率图像降采样（不级联）。"""
    set_stage(PipelineStage.PYRAMID)
    input_dir = Path(input_dir)
    images = load_set(input_dir)
    rows, cols = _uniform_shape(images, input_dir)
    summary = StageSummary(stage=PipelineStage.PYRAMID, output_dir=config.output_dir / PYRAMID_DIR)
    with ComputePool(config.threads) as pool:
        for scale in config.scales:
            level = ResolutionLevel.for_scale(scale, rows, cols)
            scaled = _downscale_set(images, scale, pool)
            summary.files.extend(save_set(scaled, level_dir(config.output_dir, scale)))
            summary.details[f"{scale:g}"] = f"{level.rows}x{level.cols}"
            logger.info(f"scale={scale:g}: {len(scaled)} 幅 → {level.rows}×{level.cols}")
    return summary


# =============================================================================
# compare / stats
# =============================================================================


def _fit_details(pairs: Sequence[PairResult], spec: HistogramSpec | None) -> dict[str, Any]:
    st = imposter_stats(pairs)
    details: dict[str, Any] = {"n_pairs": st.n_pairs, "mean": st.mean, "std": st.std, "dof": st.dof}
    if st.dof_defined:
        fit = goodness_of_fit(histogram_with_overlay(pairs, st, spec))
        details["chi2"] = fit.chi2
        details["p_value"] = fit.p_value
        details["vs_phase_code"] = reference_ratio(st.dof_real)  # type: ignore[arg-type]
        logger.info(
            f"二项拟合: N={st.dof}, chi2={fit.chi2:.3f} (df={fit.dof}), p={fit.p_value:.4g}, "
            f"为相位编码 {PHASE_CODE_DOF} 自由度的 {details['vs_phase_code']:.2f} 倍"
        )
    return details


def run_compare(config: RunConfig, input_dir: str | Path) -> StageSummary:
    """全配对比对，写出 pairs.csv 与直方图。"""
    set_stage(PipelineStage.COMPARE)
    input_dir = Path(input_dir)
    images = load_set(input_dir)
    _uniform_shape(images, input_dir)
    report = all_pairs(images, config.compare, threads=config.threads)
    emitted = emit_results(report.results, None, [], config.output_dir)
    details = {
        "images": report.n_images,
        "pairs": report.n_pairs,
        "ordered": report.n_ordered,
        "same_subject_skipped": report.n_same_subject_skipped,
        "below_overlap": report.n_below_overlap,
    }
    if report.n_pairs >= 2:
        details.update(_fit_details(report.results, None))
    return StageSummary(PipelineStage.COMPARE, emitted.output_dir, emitted.paths, details)


def run_stats(
    config: RunConfig,
    pairs_path: str | Path,
    *,
    bin_width: float | None = None,
    scale: float = 1.0,
) -> StageSummary:
    """由 pairs.csv 计算统计量、直方图与单行统计表。"""
    set_stage(PipelineStage.STATS)
    pairs = read_pairs_csv(pairs_path)
    if len(pairs) < 2:
        raise DegenerateDistributionError(f"{pairs_path} 中只有 {len(pairs)} 个比对结果")
    spec = HistogramSpec(bin_width=bin_width)
    level = ResolutionLevel.for_scale(scale, config.base_rows, config.base_cols)
    rows = sweep_table([(level, pairs)])
    st = imposter_stats(pairs)
    out = prepare_output_dir(config.output_dir)
    emitted = emit_results(pairs, st, rows, out, histogram_spec=spec)
    return StageSummary(PipelineStage.STATS, out, emitted.paths, _fit_details(pairs, spec), rows)


# =============================================================================
# sweep
# =============================================================================


def run_sweep(config: RunConfig, input_dir: str | Path) -> StageSummary:
    """完整分辨率扫描：每层降采样 → 全配对 → 统计，输出统计表与曲线。

    pairs.csv 与直方图取自最高分辨率层。
    """
    set_stage(PipelineStage.SWEEP)
    input_dir = Path(input_dir)
    images = load_set(input_dir)
    rows, cols = _uniform_shape(images, input_dir)

    table: list[SweepRow] = []
    top_pairs = None
    with ComputePool(config.threads) as pool:
        for scale in config.scales:
            level = ResolutionLevel.for_scale(scale, rows, cols)
            scaled = images if scale == 1.0 else _downscale_set(images, scale, pool)
            report = all_pairs(scaled, config.compare, threads=config.threads)
            if top_pairs is None:
                top_pairs = report.results
            table.extend(sweep_table([(level, report.results)]))

    if not top_pairs:
        raise DegenerateDistributionError("最高分辨率层没有冒名比对结果")
    top_stats = imposter_stats(top_pairs) if len(top_pairs) >= 2 else None
    emitted = emit_results(top_pairs, top_stats, table, config.output_dir)
    details = {"levels": len(table), "images": len(images)}
    if table and table[0].dof_real is not None:
        details["vs_phase_code"] = reference_ratio(table[0].dof_real)
    return StageSummary(PipelineStage.SWEEP, emitted.output_dir, emitted.paths, details, table)


# =============================================================================
# synth
# =============================================================================


def run_synth(config: RunConfig, spec: SynthSpec, *, eyes: bool = False) -> StageSummary:
    """生成合成 NIR1 集合；eyes=True 时另外写出 PGM 眼部图像与清单。"""
    set_stage(PipelineStage.SYNTH)
    out = prepare_output_dir(config.output_dir / SYNTH_DIR)
    images = generate(spec, threads=config.threads)
    summary = StageSummary(
        PipelineStage.SYNTH,
        out,
        save_set(images, out),
        {"count": spec.count, "shape": f"{spec.rows}x{spec.cols}", "sigma": spec.correlation_sigma},
    )
    if eyes:
        eye_dir = prepare_output_dir(config.output_dir / EYES_DIR)
        entries = []
        for eye, seg in synth_eyes(spec, threads=config.threads):
            path = write_pgm(eye, eye_dir / f"{eye.image_id}.pgm")
            entries.append(
                ManifestEntry(image_id=eye.image_id, subject_id=eye.subject_id, image_path=path, segmentation=seg)
            )
            summary.files.append(path)
        summary.files.append(write_manifest(entries, eye_dir / MANIFEST_FILE))
        summary.details["eyes"] = len(entries)
    return summary


# =============================================================================
# dof-check
# =============================================================================


def run_dof_check(config: RunConfig, table_path: str | Path) -> StageSummary:
    """由 (mean, std[, scale | scale_pct]) 表计算自由度并写出 stats.csv。

    单位由列名决定：scale 为比例，scale_pct 为百分数。
    两列都没有时不做分辨率映射，输出行的 scale / rows / cols 留空。
    """
    set_stage(PipelineStage.CHECK)
    frame = read_moments_table(table_path)
    if "scale" in frame.columns:
        scales: list[float | None] = [float(s) for s in frame["scale"]]
    elif "scale_pct" in frame.columns:
        scales = [float(s) / 100.0 for s in frame["scale_pct"]]
    else:
        scales = [None] * len(frame)

    rows = []
    for scale, mean, std in zip(scales, frame["mean"], frame["std"], strict=True):
        if not (math.isfinite(mean) and math.isfinite(std)):
            raise ArgumentError(f"mean/std 必须是有限数: {mean}, {std}")
        level = None if scale is None else ResolutionLevel.for_scale(scale, config.base_rows, config.base_cols)
        row = row_from_moments(level, float(mean), float(std))
        logger.info(f"scale={scale}: mean={mean:.9f}, std={std:.9f} → dof={row.dof} ({row.dof_real:.3f})")
        rows.append(row)
    emitted = emit_stats(rows, config.output_dir)
    return StageSummary(PipelineStage.CHECK, emitted.output_dir, emitted.paths, {"rows": len(rows)}, rows)


__all__ = [
    "EYES_DIR",
    "MANIFEST_FILE",
    "NORMALIZED_DIR",
    "PYRAMID_DIR",
    "REJECTIONS_FILE",
    "SYNTH_DIR",
    "StageSummary",
    "level_dir",
    "run_compare",
    "run_dof_check",
    "run_normalize",
    "run_pyramid",
    "run_stats",
    "run_sweep",
    "run_synth",
]
