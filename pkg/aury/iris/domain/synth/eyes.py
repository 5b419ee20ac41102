"""合成眼部图像：把归一化纹理按同心圆环贴回 8 位灰度图。

用于在没有授权数据集时端到端演练 normalize 流程。
"""

from __future__ import annotations

import numpy as np

from aury.iris.domain.models import EyeImage, IrisSegmentation, NormalizedIris, SynthSpec

from .textures import generate, image_rng

PUPIL_LEVEL = 15
SCLERA_LEVEL = 170
HIGHLIGHT_LEVEL = 255


def render_eye(
    texture: NormalizedIris,
    seg: IrisSegmentation,
    width: int,
    height: int,
    highlight: bool = True,
) -> EyeImage:
    """按最近邻把纹理贴到虹膜环上，瞳孔和巩膜为常数灰度。

    纹理坐标系与展开一致：第 0 行贴近瞳孔，角度从 3 点钟方向逆时针。
    highlight 为 True 时在 3 点钟方向的虹膜内侧放一个 3×3 的饱和高光。
    """
    yy, xx = np.mgrid[0:height, 0:width].astype(np.float64)
    dx = xx - seg.pupil_x
    dy = yy - seg.pupil_y
    dist = np.hypot(dx, dy)
    theta = np.mod(np.arctan2(-dy, dx), 2.0 * np.pi)
    frac = (dist - seg.pupil_r) / (seg.iris_r - seg.pupil_r)

    rows, cols = texture.shape
    row_idx = np.clip(np.floor(frac * rows), 0, rows - 1).astype(np.intp)
    col_idx = np.mod(np.floor(theta / (2.0 * np.pi) * cols), cols).astype(np.intp)
    iris_values = np.clip(np.rint(texture.intensities[row_idx, col_idx] * 255.0), 0, 255)

    image = np.full((height, width), SCLERA_LEVEL, dtype=np.float64)
    annulus = (frac >= 0) & (frac < 1)
    image[annulus] = iris_values[annulus]
    image[dist < seg.pupil_r] = PUPIL_LEVEL

    if highlight:
        hx = int(round(seg.pupil_x + seg.pupil_r + 0.25 * (seg.iris_r - seg.pupil_r)))
        hy = int(round(seg.pupil_y))
        image[max(hy - 1, 0) : hy + 2, max(hx - 1, 0) : hx + 2] = HIGHLIGHT_LEVEL

    return EyeImage(
        image_id=texture.image_id,
        subject_id=texture.subject_id,
        intensities=image.astype(np.uint8),
    )


def synth_eyes(
    spec: SynthSpec,
    width: int = 320,
    height: int = 280,
    threads: int = 1,
) -> list[tuple[EyeImage, IrisSegmentation]]:
    """生成眼部图像与对应的同心分割，瞳孔半径在 [25, 45] 内逐图随机。"""
    iris_r = 0.45 * min(width, height)
    textures = generate(spec, threads)
    pairs = []
    for i, texture in enumerate(textures):
        rng = image_rng(spec.seed, spec.count + i)
        pupil_r = float(rng.integers(25, 46))
        seg = IrisSegmentation.concentric(width / 2.0, height / 2.0, pupil_r, iris_r)
        pairs.append((render_eye(texture, seg, width, height), seg))
    return pairs


__all__ = [
    "render_eye",
    "synth_eyes",
]
