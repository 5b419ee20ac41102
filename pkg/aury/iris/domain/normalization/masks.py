"""遮挡掩码：镜面反射启发式与掩码合并。"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import EyeImage, IrisSegmentation, NormalizedIris, OcclusionMask

from .rubber_sheet import sample_coordinates


def specular_mask_heuristic(
    eye: EyeImage,
    seg: IrisSegmentation,
    normalized: NormalizedIris,
    threshold: int = 250,
    dilation: int = 2,
) -> OcclusionMask:
    """标记镜面反射高光。

    每个归一化单元取最近的源像素；强度 ≥ threshold 的单元及其
    dilation 邻域（径向截断、角向环绕）标记为无效。
    """
    if dilation < 0:
        raise ArgumentError(f"dilation 必须 ≥ 0: {dilation}")
    xs, ys = sample_coordinates(seg, normalized.rows, normalized.cols)
    inside = (xs >= 0) & (xs <= eye.width - 1) & (ys >= 0) & (ys <= eye.height - 1)
    xi = np.clip(np.rint(xs), 0, eye.width - 1).astype(np.intp)
    yi = np.clip(np.rint(ys), 0, eye.height - 1).astype(np.intp)
    hot = (eye.intensities[yi, xi] >= threshold) & inside

    if dilation and hot.any():
        spread = ndimage.maximum_filter(
            hot.astype(np.uint8),
            size=2 * dilation + 1,
            mode=("constant", "wrap"),
            cval=0,
        )
        hot = spread > 0
    return OcclusionMask(~hot)


def attach_mask(
    nir: NormalizedIris,
    external: OcclusionMask | None = None,
    heuristic: OcclusionMask | None = None,
) -> NormalizedIris:
    """合并掩码：结果 = nir.mask ∧ 每个提供的掩码，强度不变。"""
    combined = nir.mask.copy()
    for mask in (external, heuristic):
        if mask is None:
            continue
        if mask.shape != nir.shape:
            raise ArgumentError(
                "掩码尺寸不匹配",
                metadata={"image_id": nir.image_id, "expected": nir.shape, "actual": mask.shape},
            )
        combined &= mask.valid
    return nir.evolve(mask=combined)


__all__ = [
    "attach_mask",
    "specular_mask_heuristic",
]
