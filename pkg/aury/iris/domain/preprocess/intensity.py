"""强度归一化：未遮挡像素乘以同一个因子，使中位数等于目标值。

只做乘法，不做方差归一化，也不截断到 1.0，
因此像素之间的相对幅值保持不变。
"""

from __future__ import annotations

import numpy as np

from aury.iris.domain.exceptions import DegenerateImageError
from aury.iris.domain.models import TARGET_MEDIAN, NormalizedIris


def normalize_intensity(nir: NormalizedIris, target_median: float = TARGET_MEDIAN) -> NormalizedIris:
    """未遮挡像素乘以 target_median / median，被遮挡像素置为 target_median。"""
    values = nir.unmasked()
    if values.size == 0:
        raise DegenerateImageError("没有未遮挡像素，无法做强度归一化", image_id=nir.image_id)
    median = float(np.median(values))
    if median <= 0.0:
        raise DegenerateImageError("未遮挡像素中位数为 0", image_id=nir.image_id)

    factor = target_median / median
    scaled = np.where(nir.mask, nir.intensities * factor, target_median)
    return nir.evolve(intensities=scaled, intensity_scale=nir.intensity_scale * factor)


__all__ = [
    "normalize_intensity",
]
