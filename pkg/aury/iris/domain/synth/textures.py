"""合成归一化虹膜纹理。

- gen_iid：像素独立同分布，真实自由度等于像素数，是自由度估计的解析基准。
- gen_correlated：白噪声经高斯模糊（角向周期、径向截断）后仿射到中位数 127/255，
  并乘以逐图的对数正态对比度增益，自由度低于像素数。

图像 i 的随机流只由 (seed, i) 决定，与生成顺序和线程数无关。
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from aury.iris.common.compute import ComputePool
from aury.iris.common.logging import logger
from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import TARGET_MEDIAN, AmplitudeKind, NormalizedIris, SynthSpec

from .occlusion import gen_occlusion


def image_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def synth_ids(index: int) -> tuple[str, str]:
    """合成图像的 (image_id, subject_id)，每幅图像一个个体。"""
    return f"s{index:06d}", f"subj{index:06d}"


def _draw(spec: SynthSpec, rng: np.random.Generator) -> np.ndarray:
    shape = (spec.rows, spec.cols)
    if spec.amplitude.kind is AmplitudeKind.GAUSSIAN:
        return np.maximum(rng.normal(spec.amplitude.mu, spec.amplitude.sigma, shape), 0.0)
    return rng.random(shape)


def iid_texture(spec: SynthSpec, index: int) -> np.ndarray:
    return _draw(spec, image_rng(spec.seed, index))


def correlated_texture(spec: SynthSpec, index: int) -> np.ndarray:
    rng = image_rng(spec.seed, index)
    noise = _draw(spec, rng)
    jitter = rng.standard_normal()
    blurred = ndimage.gaussian_filter(noise, sigma=spec.correlation_sigma, mode=["nearest", "wrap"])
    median = float(np.median(blurred))
    gain = float(np.exp(spec.contrast_jitter * jitter))
    floor = float(blurred.min())
    if floor < median:
        # 增益上限：保证最小值不低于 0
        gain = min(gain, TARGET_MEDIAN / (median - floor))
    return np.maximum(TARGET_MEDIAN + gain * (blurred - median), 0.0)


def _assemble(spec: SynthSpec, textures: list[np.ndarray]) -> list[NormalizedIris]:
    if spec.occlusion_fraction > 0:
        masks = [m.valid for m in gen_occlusion(spec)]
    else:
        masks = [np.ones((spec.rows, spec.cols), dtype=np.bool_)] * spec.count
    images = []
    for i, (values, mask) in enumerate(zip(textures, masks, strict=True)):
        image_id, subject_id = synth_ids(i)
        images.append(NormalizedIris(intensities=values, mask=mask, image_id=image_id, subject_id=subject_id))
    return images


def gen_iid(spec: SynthSpec, threads: int = 1) -> list[NormalizedIris]:
    """独立同分布纹理集。"""
    if spec.correlation_sigma != 0:
        raise ArgumentError(f"gen_iid 要求 correlation_sigma = 0，实际 {spec.correlation_sigma}")
    with ComputePool(threads) as pool:
        textures = pool.map(lambda i: iid_texture(spec, i), range(spec.count))
    logger.info(f"生成 i.i.d. 纹理 {spec.count} 幅 ({spec.rows}×{spec.cols}, {spec.amplitude.kind.value})")
    return _assemble(spec, textures)


def gen_correlated(spec: SynthSpec, threads: int = 1) -> list[NormalizedIris]:
    """空间相关纹理集。"""
    if spec.correlation_sigma <= 0:
        raise ArgumentError(f"gen_correlated 要求 correlation_sigma > 0，实际 {spec.correlation_sigma}")
    with ComputePool(threads) as pool:
        textures = pool.map(lambda i: correlated_texture(spec, i), range(spec.count))
    logger.info(
        f"生成相关纹理 {spec.count} 幅 ({spec.rows}×{spec.cols}, sigma={spec.correlation_sigma}, "
        f"jitter={spec.contrast_jitter})"
    )
    return _assemble(spec, textures)


def generate(spec: SynthSpec, threads: int = 1) -> list[NormalizedIris]:
    """按 correlation_sigma 选择生成器。"""
    if spec.correlation_sigma == 0:
        return gen_iid(spec, threads)
    return gen_correlated(spec, threads)


__all__ = [
    "correlated_texture",
    "gen_correlated",
    "gen_iid",
    "generate",
    "iid_texture",
    "image_rng",
    "synth_ids",
]
