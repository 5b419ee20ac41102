"""橡皮膜极坐标展开。

约定：
- 角度 θ_j = 2π·(j + 0.5)/cols，从 3 点钟方向起算，在图像视图中逆时针前进；
  图像 y 轴向下，因此方向向量为 (cos θ, −sin θ)。
- 射线从瞳孔中心发出；内锚点在瞳孔圆上，外锚点为射线与虹膜外圆的交点。
- 径向采样位置 r_i = (i + 0.5)/rows，在内外锚点之间线性插值。
- 源图双线性插值；落在图像范围外的采样点被遮挡，而不是报错。
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from aury.iris.common.logging import logger
from aury.iris.domain.exceptions import ArgumentError, SegmentationError
from aury.iris.domain.models import EyeImage, IrisSegmentation, NormalizedIris


def _check_dims(rows: int, cols: int) -> None:
    if rows < 1 or cols < 1:
        raise ArgumentError(f"展开尺寸必须 ≥ 1: rows={rows}, cols={cols}")


def sample_coordinates(seg: IrisSegmentation, rows: int, cols: int) -> tuple[np.ndarray, np.ndarray]:
    """计算每个输出单元在源图中的采样坐标。

    Returns:
        (xs, ys)：形状均为 (rows, cols) 的 float64 数组
    """
    _check_dims(rows, cols)
    theta = 2.0 * np.pi * (np.arange(cols, dtype=np.float64) + 0.5) / cols
    dx = np.cos(theta)
    dy = -np.sin(theta)

    # 射线 p + t·d 与外圆 |q − c| = R 的交点：t² + 2bt + (|p−c|² − R²) = 0
    ox = seg.pupil_x - seg.iris_x
    oy = seg.pupil_y - seg.iris_y
    b = dx * ox + dy * oy
    disc = b * b - (ox * ox + oy * oy - seg.iris_r**2)
    if np.any(disc < 0):
        raise SegmentationError("射线与虹膜外圆无交点", metadata=seg.model_dump())
    t_outer = -b + np.sqrt(disc)
    if np.any(t_outer <= seg.pupil_r):
        raise SegmentationError("虹膜外圆交点落在瞳孔圆内", metadata=seg.model_dump())

    radial = (np.arange(rows, dtype=np.float64) + 0.5) / rows
    dist = seg.pupil_r + radial[:, None] * (t_outer[None, :] - seg.pupil_r)
    xs = seg.pupil_x + dist * dx[None, :]
    ys = seg.pupil_y + dist * dy[None, :]
    return xs, ys


def polar_sample(
    values: np.ndarray,
    seg: IrisSegmentation,
    rows: int,
    cols: int,
) -> tuple[np.ndarray, np.ndarray]:
    """在实数源图上做极坐标展开（不做 8 位量化）。

    Returns:
        (grid, valid)：采样强度与界内标记，形状 (rows, cols)
    """
    source = np.asarray(values, dtype=np.float64)
    if source.ndim != 2:
        raise ArgumentError("源图必须是二维网格", metadata={"shape": tuple(source.shape)})
    xs, ys = sample_coordinates(seg, rows, cols)
    height, width = source.shape
    valid = (xs >= 0) & (xs <= width - 1) & (ys >= 0) & (ys <= height - 1)
    grid = ndimage.map_coordinates(source, [ys, xs], order=1, mode="nearest")
    return grid, valid


def unwrap(eye: EyeImage, seg: IrisSegmentation, rows: int, cols: int) -> NormalizedIris:
    """把虹膜环展开为 rows × cols 的归一化网格（强度除以 255）。"""
    grid, valid = polar_sample(eye.intensities.astype(np.float64) / 255.0, seg, rows, cols)
    outside = int(valid.size - np.count_nonzero(valid))
    if outside:
        logger.debug(f"{eye.image_id}: {outside} 个采样点落在图像范围外，已遮挡")
    return NormalizedIris(
        intensities=np.maximum(grid, 0.0),
        mask=valid,
        image_id=eye.image_id,
        subject_id=eye.subject_id,
    )


__all__ = [
    "polar_sample",
    "sample_coordinates",
    "unwrap",
]
