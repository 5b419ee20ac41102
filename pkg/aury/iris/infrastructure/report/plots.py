"""SVG 图表（matplotlib，面向对象 API，不经过 pyplot 全局状态）。

SVG 输出固定 hashsalt 且去掉日期元数据，重复运行逐字节相同。
图表只作示意，数值以 CSV 为准。
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import matplotlib as mpl
from matplotlib.figure import Figure
import numpy as np

from aury.iris.domain.models import Histogram, HistogramNormalization, SweepRow

from ..io.exceptions import EmissionError

mpl.use("Agg")

_SVG_RC = {
    "svg.hashsalt": "aury-iris",
    "svg.fonttype": "none",
    "font.size": 9,
}
# 叠加质量低于该值的尾部不进入坐标范围
_TAIL_MASS = 1e-6


def _save(fig: Figure, path: Path) -> Path:
    try:
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as exc:
        raise EmissionError(f"无法写出 {path}: {exc}", metadata={"path": str(path)}, cause=exc) from exc
    return path


def _x_range(hist: Histogram) -> tuple[float, float]:
    live = np.flatnonzero((hist.counts > 0) | (hist.overlay_binned > _TAIL_MASS * hist.overlay_binned.sum()))
    if live.size == 0:
        return 0.0, 1.0
    pad = 2 * hist.bin_width
    return max(0.0, hist.edges[live[0]] - pad), min(1.0, hist.edges[live[-1] + 1] + pad)


def plot_histogram(hist: Histogram, path: str | Path, title: str = "Imposter Hamming distance") -> Path:
    """冒名距离直方图 + 同均值同自由度的二项分布叠加。"""
    with mpl.rc_context(_SVG_RC):
        fig = Figure(figsize=(6.4, 4.0))
        ax = fig.add_subplot()
        ax.bar(hist.bin_left, hist.values, width=hist.bin_width, align="edge", color="#9db4d0", label="observed")
        centers = hist.bin_left + hist.bin_width / 2
        ax.plot(
            centers,
            hist.overlay_binned,
            color="#b03030",
            marker="o",
            markersize=2.5,
            linewidth=0.8,
            label=f"binomial N={hist.model.trials}, p={hist.model.success_prob:.4f}",
        )
        ax.set_xlim(*_x_range(hist))
        ax.set_xlabel("Hamming distance")
        ylabel = "probability" if hist.normalization is HistogramNormalization.PROBABILITY else "count"
        ax.set_ylabel(ylabel)
        ax.set_title(title)
        ax.legend(loc="upper left", frameon=False)
        fig.tight_layout()
        return _save(fig, Path(path))


def plot_dof_curve(rows: Sequence[SweepRow], path: str | Path) -> Path:
    """自由度随分辨率变化曲线；自由度无定义或没有分辨率层的行不画点。"""
    defined = [r for r in rows if r.dof is not None and r.scale is not None]
    with mpl.rc_context(_SVG_RC):
        fig = Figure(figsize=(6.4, 4.0))
        ax = fig.add_subplot()
        xs = [100 * r.scale for r in defined]
        ys = [r.dof for r in defined]
        ax.plot(xs, ys, color="#303060", marker="s", markersize=4, linewidth=1.0)
        for r, x, y in zip(defined, xs, ys, strict=True):
            ax.annotate(f"{r.rows}x{r.cols}", (x, y), textcoords="offset points", xytext=(4, -10), fontsize=7)
        ax.set_xlabel("resolution (% of full size)")
        ax.set_ylabel("binomial degrees of freedom")
        ax.set_title("Degrees of freedom versus image resolution")
        ax.set_xlim(0, 105)
        ax.set_ylim(bottom=0)
        ax.grid(True, linewidth=0.3)
        fig.tight_layout()
        return _save(fig, Path(path))


__all__ = [
    "plot_dof_curve",
    "plot_histogram",
]
