"""双三次降采样。

Keys 三次卷积核（a = −0.5）；缩小时核按 1/scale 展宽并在缩放后的偏移处求值（抗混叠）。
坐标映射 u = (x + 0.5)/scale − 0.5，与常见图像工具的默认 bicubic 缩放一致。
两个轴可分离处理：角向周期环绕，径向对称镜像。
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import TARGET_MEDIAN, NormalizedIris, scaled_dim

#: 降采样后有效覆盖率阈值
COVERAGE_THRESHOLD = 0.5


def keys_cubic(x: np.ndarray) -> np.ndarray:
    """Keys 三次卷积核，a = −0.5。"""
    ax = np.abs(x)
    ax2 = ax * ax
    ax3 = ax2 * ax
    return np.where(
        ax <= 1.0,
        1.5 * ax3 - 2.5 * ax2 + 1.0,
        np.where(ax <= 2.0, -0.5 * ax3 + 2.5 * ax2 - 4.0 * ax + 2.0, 0.0),
    )


def _mirror(indices: np.ndarray, n: int) -> np.ndarray:
    period = 2 * n
    folded = np.mod(indices, period)
    return np.where(folded < n, folded, period - 1 - folded)


@lru_cache(maxsize=64)
def resample_weights(n_in: int, n_out: int, scale: float, periodic: bool) -> np.ndarray:
    """一个轴上的 (n_out × n_in) 重采样矩阵，每行权重之和为 1。"""
    x = np.arange(n_out, dtype=np.float64)
    u = (x + 0.5) / scale - 0.5
    kernel_scale = min(scale, 1.0)
    width = 4.0 / kernel_scale
    left = np.floor(u - width / 2.0).astype(np.intp)
    taps = int(np.ceil(width)) + 2
    indices = left[:, None] + np.arange(taps)[None, :]
    weights = kernel_scale * keys_cubic(kernel_scale * (u[:, None] - indices))
    weights /= weights.sum(axis=1, keepdims=True)

    folded = np.mod(indices, n_in) if periodic else _mirror(indices, n_in)
    matrix = np.zeros((n_out, n_in), dtype=np.float64)
    rows = np.broadcast_to(np.arange(n_out)[:, None], indices.shape)
    np.add.at(matrix, (rows, folded), weights)
    matrix.flags.writeable = False
    return matrix


def downscale(nir: NormalizedIris, scale: float, fill_value: float | None = None) -> NormalizedIris:
    """降低分辨率到 (ceil(scale·rows), ceil(scale·cols))。

    滤波前被遮挡单元用未遮挡像素中位数填充（也可以显式给出 fill_value），
    避免遮挡区域渗入；掩码作为实数覆盖率同样滤波，覆盖率 ≥ 0.5 视为有效。

    Args:
        nir: 输入归一化虹膜
        scale: 缩放比例 (0, 1]
        fill_value: 被遮挡单元的填充值，None 表示中位数
    """
    if not (0.0 < scale <= 1.0):
        raise ArgumentError(f"scale 必须在 (0, 1]: {scale}", metadata={"image_id": nir.image_id})
    if scale == 1.0:
        return nir

    out_rows = scaled_dim(nir.rows, scale)
    out_cols = scaled_dim(nir.cols, scale)
    w_rows = resample_weights(nir.rows, out_rows, scale, False)
    w_cols = resample_weights(nir.cols, out_cols, scale, True)

    if fill_value is None:
        valid_values = nir.unmasked()
        fill_value = float(np.median(valid_values)) if valid_values.size else TARGET_MEDIAN
    filled = np.where(nir.mask, nir.intensities, fill_value)
    coverage = w_rows @ nir.mask.astype(np.float64) @ w_cols.T
    values = w_rows @ filled @ w_cols.T

    return nir.evolve(
        intensities=np.maximum(values, 0.0),
        mask=coverage >= COVERAGE_THRESHOLD,
        scale=nir.scale * scale,
    )


def build_pyramid(nir: NormalizedIris, scales: Sequence[float]) -> list[NormalizedIris]:
    """对每个 scale 从全分辨率图像各做一次降采样（不级联）。"""
    return [downscale(nir, s) for s in scales]


__all__ = [
    "COVERAGE_THRESHOLD",
    "build_pyramid",
    "downscale",
    "keys_cubic",
    "resample_weights",
]
