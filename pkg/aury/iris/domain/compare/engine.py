"""逐像素容差比对引擎。

两幅归一化虹膜的汉明距离 = 两者都未遮挡、且强度差不满足 |a − b| < tolerance 的像素比例。
失配数与重叠数按整数累计，最后一次性做双精度除法。

all_pairs 把图像按 ID 排序后堆叠成 (n, K) 矩阵，以 (i, j 块) 为单位并行；
每个块只负责互不相交的一组图像对，合并时按 (i, j) 顺序拼接，
结果天然按 (id_a, id_b) 升序，与线程数无关。
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from aury.iris.common.compute import ComputePool
from aury.iris.common.logging import log_performance, logger
from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import AllPairsReport, CompareConfig, NormalizedIris, PairResult

#: 每个任务块中比较的图像数上限（控制临时数组内存）
DEFAULT_BLOCK_SIZE = 64


def pixels_match(a: float, b: float, tolerance: float) -> bool:
    """|a − b| < tolerance（严格小于）。"""
    return abs(a - b) < tolerance


def _ordered_ids(x: NormalizedIris, y: NormalizedIris) -> tuple[str, str]:
    return (x.image_id, y.image_id) if x.image_id <= y.image_id else (y.image_id, x.image_id)


def hamming_pair(
    x: NormalizedIris,
    y: NormalizedIris,
    cfg: CompareConfig | None = None,
) -> PairResult | None:
    """单对比对；共同有效像素少于 min_overlap 时返回 None。"""
    cfg = cfg or CompareConfig()
    if x.shape != y.shape:
        raise ArgumentError(
            "比对图像尺寸不一致",
            metadata={"id_a": x.image_id, "id_b": y.image_id, "shape_a": x.shape, "shape_b": y.shape},
        )
    both = x.mask & y.mask
    overlap = int(np.count_nonzero(both))
    if overlap < cfg.min_overlap:
        return None
    matched = np.abs(x.intensities - y.intensities) < cfg.tolerance
    mismatches = int(np.count_nonzero(both & ~matched))
    id_a, id_b = _ordered_ids(x, y)
    return PairResult(id_a, id_b, overlap, mismatches)


def validate_set(images: Sequence[NormalizedIris]) -> None:
    """全配对比对的前置条件：至少 2 幅、尺寸一致、ID 唯一。"""
    if len(images) < 2:
        raise ArgumentError(f"全配对比对至少需要 2 幅图像，实际 {len(images)}")
    shape = images[0].shape
    seen: set[str] = set()
    for nir in images:
        if nir.shape != shape:
            raise ArgumentError(
                "图像集尺寸不一致",
                metadata={"image_id": nir.image_id, "expected": shape, "actual": nir.shape},
            )
        if nir.image_id in seen:
            raise ArgumentError(f"图像 ID 重复: {nir.image_id}", metadata={"image_id": nir.image_id})
        seen.add(nir.image_id)


@dataclass(frozen=True, slots=True)
class _Block:
    i: int
    start: int
    stop: int


class PairEngine:
    """向量化全配对引擎。

    使用示例:
        engine = PairEngine(images, cfg)
        report = engine.run(threads=4)
    """

    def __init__(
        self,
        images: Sequence[NormalizedIris],
        cfg: CompareConfig | None = None,
        block_size: int = DEFAULT_BLOCK_SIZE,
    ) -> None:
        validate_set(images)
        if block_size < 1:
            raise ArgumentError(f"block_size 必须 ≥ 1: {block_size}")
        self._cfg = cfg or CompareConfig()
        self._block_size = block_size
        ordered = sorted(images, key=lambda nir: nir.image_id)
        self._ids = [nir.image_id for nir in ordered]
        self._subjects = np.array([nir.subject_id for nir in ordered], dtype=object)
        self._values = np.stack([nir.intensities.reshape(-1) for nir in ordered])
        self._masks = np.stack([nir.mask.reshape(-1) for nir in ordered])

    @property
    def n_images(self) -> int:
        return len(self._ids)

    def _blocks(self) -> list[_Block]:
        n = self.n_images
        return [
            _Block(i, start, min(start + self._block_size, n))
            for i in range(n - 1)
            for start in range(i + 1, n, self._block_size)
        ]

    def _compare_block(self, block: _Block) -> tuple[np.ndarray, np.ndarray]:
        rows = slice(block.start, block.stop)
        both = self._masks[rows] & self._masks[block.i]
        matched = np.abs(self._values[rows] - self._values[block.i]) < self._cfg.tolerance
        overlap = np.count_nonzero(both, axis=1)
        mismatches = np.count_nonzero(both & ~matched, axis=1)
        return overlap, mismatches

    def run(self, threads: int = 1) -> AllPairsReport:
        blocks = self._blocks()
        with ComputePool(threads) as pool:
            outputs = pool.map(self._compare_block, blocks)

        results: list[PairResult] = []
        same_subject = 0
        below_overlap = 0
        for block, (overlap, mismatches) in zip(blocks, outputs, strict=True):
            id_a = self._ids[block.i]
            subject_a = self._subjects[block.i]
            for offset, j in enumerate(range(block.start, block.stop)):
                if self._cfg.exclude_same_subject and self._subjects[j] == subject_a:
                    same_subject += 1
                    continue
                ov = int(overlap[offset])
                if ov < self._cfg.min_overlap:
                    below_overlap += 1
                    continue
                results.append(PairResult(id_a, self._ids[j], ov, int(mismatches[offset])))

        return AllPairsReport(
            results=results,
            n_images=self.n_images,
            n_same_subject_skipped=same_subject,
            n_below_overlap=below_overlap,
        )


@log_performance(threshold=60.0)
def all_pairs(
    images: Sequence[NormalizedIris],
    cfg: CompareConfig | None = None,
    threads: int = 1,
) -> AllPairsReport:
    """对图像集的所有无序对做冒名比对。

    同一个体的图像对按配置跳过；共同有效像素不足的图像对被计数但不输出。
    输出按 (id_a, id_b) 升序，逐位与线程数无关。
    """
    engine = PairEngine(images, cfg)
    logger.info(f"开始全配对比对: {engine.n_images} 幅图像, 形状 {images[0].shape}, threads={threads}")
    report = engine.run(threads)
    logger.info(
        f"比对完成: {report.n_pairs} 对（有序计数 {report.n_ordered}），"
        f"跳过同一个体 {report.n_same_subject_skipped}，重叠不足 {report.n_below_overlap}"
    )
    if report.n_below_overlap:
        logger.warning(f"{report.n_below_overlap} 对图像的共同有效像素少于 min_overlap，未计入结果")
    return report


__all__ = [
    "DEFAULT_BLOCK_SIZE",
    "PairEngine",
    "all_pairs",
    "hamming_pair",
    "pixels_match",
    "validate_set",
]
