"""合成遮挡掩码。

每幅图像的遮挡预算 T = ceil(f·rows·cols)：
一部分（随机 30%–70%）从第 0 行开始按整行遮挡，模拟瞳孔侧的连续角向带；
其余部分从随机起始列开始，逐列自最后一行向上遮挡（角向环绕），模拟眼睑弧，
最后一列可部分遮挡，因此无效像素数恰好等于 T。
"""

from __future__ import annotations

import math

import numpy as np

from aury.iris.common.logging import logger
from aury.iris.domain.models import OcclusionMask, SynthSpec

# 掩码随机流的第三个种子分量（"mask" 的 ASCII）
MASK_STREAM = 0x6D61736B


def mask_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index, MASK_STREAM])


def occlusion_mask(rows: int, cols: int, fraction: float, rng: np.random.Generator) -> OcclusionMask:
    """按上述规则生成单幅掩码。"""
    invalid = np.zeros((rows, cols), dtype=np.bool_)
    budget = math.ceil(fraction * rows * cols)
    if budget == 0:
        return OcclusionMask(~invalid)

    band_share = rng.uniform(0.3, 0.7)
    full_rows = min(int(band_share * budget) // cols, rows)
    invalid[:full_rows, :] = True
    remaining = budget - full_rows * cols

    height = rows - full_rows
    col = int(rng.integers(cols))
    while remaining > 0 and height > 0:
        take = min(remaining, height)
        invalid[rows - take :, col] = True
        remaining -= take
        col = (col + 1) % cols
    return OcclusionMask(~invalid)


def gen_occlusion(spec: SynthSpec) -> list[OcclusionMask]:
    """为数据集中每幅图像生成遮挡掩码，随机性来自 (seed, i, "mask")。"""
    total = spec.rows * spec.cols
    expected_overlap = total * (1.0 - spec.occlusion_fraction) ** 2
    if spec.occlusion_fraction > 0 and expected_overlap < 2:
        logger.warning(
            f"遮挡比例 {spec.occlusion_fraction} 下期望共同有效像素仅 {expected_overlap:.2f}，比对结果可能为空"
        )
    return [
        occlusion_mask(spec.rows, spec.cols, spec.occlusion_fraction, mask_rng(spec.seed, i))
        for i in range(spec.count)
    ]


__all__ = [
    "MASK_STREAM",
    "gen_occlusion",
    "mask_rng",
    "occlusion_mask",
]
