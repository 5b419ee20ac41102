"""结果类领域模型。

比对结果、冒名分布统计、二项模型、直方图、分辨率扫描行以及诊断记录。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from aury.iris.domain.exceptions import ArgumentError

from .configs import HistogramNormalization


@dataclass(frozen=True, slots=True, order=True)
class PairResult:
    """一次冒名比对的结果。

    id_a ≤ id_b（字典序，仅自比较时相等）；hamming = mismatches / overlap，
    在构造时以双精度一次性计算。
    """

    id_a: str
    id_b: str
    overlap: int
    mismatches: int
    hamming: float = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.id_a > self.id_b:
            raise ArgumentError(f"图像对 ID 必须满足 id_a ≤ id_b: {self.id_a!r}, {self.id_b!r}")
        if self.overlap < 1 or not (0 <= self.mismatches <= self.overlap):
            raise ArgumentError(
                "无效的比对计数",
                metadata={"id_a": self.id_a, "id_b": self.id_b, "overlap": self.overlap, "mismatches": self.mismatches},
            )
        object.__setattr__(self, "hamming", self.mismatches / self.overlap)

    @property
    def key(self) -> tuple[str, str]:
        return (self.id_a, self.id_b)


@dataclass(frozen=True, slots=True)
class ImposterStats:
    """冒名分布统计：均值 p、样本标准差 σ 以及自由度 N = p(1−p)/σ²。

    σ = 0 时自由度无定义（dof_real 与 dof 均为 None）。
    """

    n_pairs: int
    mean: float
    std: float
    dof_real: float | None
    dof: int | None

    @property
    def dof_defined(self) -> bool:
        return self.dof is not None


class BinomialModel(BaseModel):
    """二项分布 Binomial(N, p)。"""

    model_config = ConfigDict(frozen=True)

    trials: int = Field(description="试验次数 N ≥ 1")
    success_prob: float = Field(description="成功概率 p ∈ [0, 1]")

    @model_validator(mode="after")
    def _check(self) -> BinomialModel:
        if self.trials < 1:
            raise ArgumentError(f"trials 必须 ≥ 1: {self.trials}")
        if not (0.0 <= self.success_prob <= 1.0):
            raise ArgumentError(f"success_prob 必须在 [0, 1]: {self.success_prob}")
        return self


@dataclass(frozen=True, eq=False)
class Histogram:
    """汉明距离直方图与二项分布叠加。

    Attributes:
        edges: 分箱边界（n_bins + 1 个，覆盖 [0, 1]）
        counts: 每个分箱的整数计数
        values: 按 normalization 归一化后的分箱高度
        overlay_x: 叠加点横坐标 k/N
        overlay_mass: 叠加点质量（已缩放到直方图的归一化方式）
        overlay_binned: 叠加点质量按分箱汇总（与 values 同长度）
    """

    edges: np.ndarray
    counts: np.ndarray
    values: np.ndarray
    overlay_x: np.ndarray
    overlay_mass: np.ndarray
    overlay_binned: np.ndarray
    normalization: HistogramNormalization
    model: BinomialModel

    @property
    def n_bins(self) -> int:
        return len(self.counts)

    @property
    def bin_left(self) -> np.ndarray:
        return self.edges[:-1]

    @property
    def bin_width(self) -> float:
        return 1.0 / self.n_bins


@dataclass(frozen=True, slots=True)
class FitResult:
    """直方图与二项叠加之间的 Pearson 卡方检验结果。"""

    chi2: float
    dof: int
    p_value: float
    n_cells: int


@dataclass(frozen=True, slots=True)
class SweepRow:
    """分辨率扫描中的一行（对应一个分辨率层）。

    只由 (mean, std) 计算、不对应任何分辨率层的行，scale / rows / cols 为 None。
    """

    scale: float | None
    rows: int | None
    cols: int | None
    n_pairs: int
    mean: float
    std: float
    dof_real: float | None
    dof: int | None

    @property
    def pixel_count(self) -> int | None:
        if self.rows is None or self.cols is None:
            return None
        return self.rows * self.cols


@dataclass(frozen=True)
class AllPairsReport:
    """全配对比对报告。

    n_ordered = 2·n_pairs，仅用于与按有序对统计的比对总数对照，
    结果本身始终按无序对计数。
    """

    results: list[PairResult]
    n_images: int
    n_same_subject_skipped: int
    n_below_overlap: int

    @property
    def n_pairs(self) -> int:
        return len(self.results)

    @property
    def n_ordered(self) -> int:
        return 2 * self.n_pairs

    @property
    def n_candidates(self) -> int:
        return math.comb(self.n_images, 2)


class RejectionReason(str, Enum):
    """选择淘汰原因。"""

    DARK = "dark"
    PUPIL = "pupil"
    EMPTY = "empty"


@dataclass(frozen=True, slots=True)
class SelectionRejection:
    """被淘汰图像的诊断记录（中位数为 0–255 刻度，无有效像素时为 None）。"""

    image_id: str
    median: float | None
    pupil_radius: float
    reason: RejectionReason


__all__ = [
    "AllPairsReport",
    "BinomialModel",
    "FitResult",
    "Histogram",
    "ImposterStats",
    "PairResult",
    "RejectionReason",
    "SelectionRejection",
    "SweepRow",
]
