"""流水线子命令：normalize / pyramid / compare / stats / sweep。

使用示例：
    aury-iris normalize --manifest data/manifest.csv
    aury-iris pyramid --input out/normalized --scales 0.5,0.1
    aury-iris compare --input out/normalized --min-overlap 100
    aury-iris stats --pairs out/pairs.csv
    aury-iris --threads 0 sweep --input out/normalized
"""

from __future__ import annotations

from pathlib import Path

import typer

from aury.iris.application.pipeline import run_compare, run_normalize, run_pyramid, run_stats, run_sweep

from .state import get_state, print_summary


def normalize(
    ctx: typer.Context,
    manifest: Path = typer.Option(..., "--manifest", "-m", help="数据集清单 CSV"),
    select: bool = typer.Option(True, "--select/--no-select", help="按中位强度和瞳孔半径筛选图像"),
    specular: bool = typer.Option(True, "--specular/--no-specular", help="启用镜面反射掩码"),
) -> None:
    """清单 → 橡皮膜展开 → 掩码 → 筛选 → 强度归一化 → NIR1。"""
    config = get_state(ctx).run_config()
    print_summary(run_normalize(config, manifest, select=select, specular=specular))


def pyramid(
    ctx: typer.Context,
    input_dir: Path = typer.Option(..., "--input", "-i", help="全分辨率 NIR1 目录"),
    scales: str | None = typer.Option(None, "--scales", help="逗号分隔的 scale 列表（严格降序）"),
) -> None:
    """双三次降采样，为每个 scale 写出一套 NIR1。"""
    config = get_state(ctx).run_config(scales=scales)
    print_summary(run_pyramid(config, input_dir))


def compare(
    ctx: typer.Context,
    input_dir: Path = typer.Option(..., "--input", "-i", help="NIR1 目录"),
    tolerance: float | None = typer.Option(None, "--tolerance", help="像素匹配容差（单位刻度，默认 0.5/255）"),
    min_overlap: int | None = typer.Option(None, "--min-overlap", help="最小共同有效像素数"),
    include_same_subject: bool = typer.Option(False, "--include-same-subject", help="同一个体的图像对也参与比对"),
) -> None:
    """全部冒名对的容差汉明距离，写出 pairs.csv 与直方图。"""
    overrides = {"tolerance": tolerance, "min_overlap": min_overlap}
    if include_same_subject:
        overrides["exclude_same_subject"] = False
    config = get_state(ctx).run_config(**overrides)
    print_summary(run_compare(config, input_dir))


def stats(
    ctx: typer.Context,
    pairs: Path = typer.Option(..., "--pairs", "-p", help="pairs.csv"),
    bin_width: float | None = typer.Option(None, "--bin-width", help="直方图分箱宽度（默认 1/N）"),
    scale: float = typer.Option(1.0, "--scale", help="统计表中标注的分辨率层"),
) -> None:
    """由 pairs.csv 计算均值、标准差、自由度与二项叠加。"""
    config = get_state(ctx).run_config()
    print_summary(run_stats(config, pairs, bin_width=bin_width, scale=scale))


def sweep(
    ctx: typer.Context,
    input_dir: Path = typer.Option(..., "--input", "-i", help="全分辨率 NIR1 目录"),
    scales: str | None = typer.Option(None, "--scales", help="逗号分隔的 scale 列表（严格降序）"),
) -> None:
    """完整分辨率扫描：stats.csv + dof_vs_resolution.svg。"""
    config = get_state(ctx).run_config(scales=scales)
    print_summary(run_sweep(config, input_dir))


__all__ = [
    "compare",
    "normalize",
    "pyramid",
    "stats",
    "sweep",
]
