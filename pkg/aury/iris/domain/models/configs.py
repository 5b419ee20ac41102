"""配置类值对象。

全部是冻结的 pydantic 模型；字段不变量被破坏时抛出 ArgumentError
（而不是 pydantic 的 ValidationError），命令行层据此返回退出码 1。
"""

from __future__ import annotations

from enum import Enum
import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from aury.iris.domain.exceptions import ArgumentError

from .images import BASE_COLS, BASE_ROWS

#: 默认匹配容差（单位刻度），严格小于
DEFAULT_TOLERANCE = 0.5 / 255
#: 强度归一化目标中位数（单位刻度）
TARGET_MEDIAN = 127 / 255


def scaled_dim(n: int, scale: float) -> int:
    """缩放后的网格尺寸：ceil(scale·n)，容忍浮点乘法的微小误差。"""
    return max(1, math.ceil(n * scale - 1e-9))


class _FrozenConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class SelectionCriteria(_FrozenConfig):
    """图像选择条件（边界均为闭区间）。"""

    min_median_intensity: float = Field(default=70.0, description="未遮挡像素中位数下限（0–255 刻度）")
    max_pupil_radius: float = Field(default=52.0, description="瞳孔半径上限（源图像素）")

    @model_validator(mode="after")
    def _check(self) -> SelectionCriteria:
        if not (0.0 <= self.min_median_intensity <= 255.0):
            raise ArgumentError(f"min_median_intensity 必须在 [0, 255]: {self.min_median_intensity}")
        if not self.max_pupil_radius > 0:
            raise ArgumentError(f"max_pupil_radius 必须大于 0: {self.max_pupil_radius}")
        return self


class CompareConfig(_FrozenConfig):
    """比对配置。"""

    tolerance: float = Field(default=DEFAULT_TOLERANCE, description="像素匹配容差 |a−b| < tolerance")
    exclude_same_subject: bool = Field(default=True, description="是否跳过同一个体的图像对")
    min_overlap: int = Field(default=1, description="最小共同有效像素数，不足时记录但不输出")

    @model_validator(mode="after")
    def _check(self) -> CompareConfig:
        if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
            raise ArgumentError(f"tolerance 必须为正: {self.tolerance}")
        if self.min_overlap < 1:
            raise ArgumentError(f"min_overlap 必须 ≥ 1: {self.min_overlap}")
        return self


class HistogramNormalization(str, Enum):
    """直方图归一化方式。"""

    COUNTS = "counts"
    PROBABILITY = "probability"


class HistogramSpec(_FrozenConfig):
    """直方图规格。

    范围固定为 [0, 1]；bin_width 为 None 时取 1/N（N 为拟合出的自由度），
    使每个分箱对齐二项分布的格点。
    """

    bin_width: float | None = Field(default=None, description="分箱宽度，None 表示 1/N")
    normalization: HistogramNormalization = Field(default=HistogramNormalization.PROBABILITY)

    @model_validator(mode="after")
    def _check(self) -> HistogramSpec:
        if self.bin_width is None:
            return self
        if not (0.0 < self.bin_width <= 1.0):
            raise ArgumentError(f"bin_width 必须在 (0, 1]: {self.bin_width}")
        n_bins = round(1.0 / self.bin_width)
        if abs(n_bins * self.bin_width - 1.0) > 1e-9:
            raise ArgumentError(f"bin_width={self.bin_width} 无法整分 [0, 1]")
        return self

    def n_bins(self, trials: int) -> int:
        """实际分箱数。"""
        if self.bin_width is None:
            return max(1, trials)
        return round(1.0 / self.bin_width)


class AmplitudeKind(str, Enum):
    """合成纹理的像素幅值分布。"""

    UNIFORM01 = "uniform01"
    GAUSSIAN = "gaussian"


class Amplitude(_FrozenConfig):
    """幅值分布：uniform01 或 gaussian(mu, sigma)，单位刻度。"""

    kind: AmplitudeKind = AmplitudeKind.UNIFORM01
    mu: float = Field(default=127 / 255, description="gaussian 均值")
    sigma: float = Field(default=20 / 255, description="gaussian 标准差")

    @model_validator(mode="after")
    def _check(self) -> Amplitude:
        if self.kind is AmplitudeKind.GAUSSIAN and not (self.sigma > 0 and self.mu >= 0):
            raise ArgumentError(f"gaussian 幅值需要 mu ≥ 0 且 sigma > 0: mu={self.mu}, sigma={self.sigma}")
        return self

    @classmethod
    def uniform01(cls) -> Amplitude:
        return cls(kind=AmplitudeKind.UNIFORM01)

    @classmethod
    def gaussian(cls, mu: float, sigma: float) -> Amplitude:
        return cls(kind=AmplitudeKind.GAUSSIAN, mu=mu, sigma=sigma)


class SynthSpec(_FrozenConfig):
    """合成数据集规格。"""

    count: int = Field(description="图像数量")
    rows: int = Field(description="径向尺寸")
    cols: int = Field(description="角向尺寸")
    amplitude: Amplitude = Field(default_factory=Amplitude.uniform01)
    correlation_sigma: float = Field(default=0.0, description="高斯模糊半径（网格单元），0 表示独立同分布")
    occlusion_fraction: float = Field(default=0.0, description="每幅图像的遮挡比例 [0, 1)")
    seed: int = Field(default=0, description="64 位随机种子")
    contrast_jitter: float = Field(default=0.25, description="相关纹理逐图对比度增益的对数正态 sigma")

    @model_validator(mode="after")
    def _check(self) -> SynthSpec:
        if self.count < 2:
            raise ArgumentError(f"count 必须 ≥ 2: {self.count}")
        if self.rows < 1 or self.cols < 1:
            raise ArgumentError(f"rows/cols 必须 ≥ 1: {self.rows}×{self.cols}")
        if not (self.correlation_sigma >= 0 and math.isfinite(self.correlation_sigma)):
            raise ArgumentError(f"correlation_sigma 必须 ≥ 0: {self.correlation_sigma}")
        if not (0.0 <= self.occlusion_fraction < 1.0):
            raise ArgumentError(f"occlusion_fraction 必须在 [0, 1): {self.occlusion_fraction}")
        if not (0 <= self.seed < 2**64):
            raise ArgumentError(f"seed 必须是 64 位无符号整数: {self.seed}")
        if not (self.contrast_jitter >= 0 and math.isfinite(self.contrast_jitter)):
            raise ArgumentError(f"contrast_jitter 必须 ≥ 0: {self.contrast_jitter}")
        return self

    @property
    def pixel_count(self) -> int:
        return self.rows * self.cols


class ResolutionLevel(_FrozenConfig):
    """分辨率层：rows = ceil(scale·base_rows)，cols = ceil(scale·base_cols)。"""

    scale: float
    rows: int
    cols: int

    @classmethod
    def for_scale(cls, scale: float, base_rows: int = BASE_ROWS, base_cols: int = BASE_COLS) -> ResolutionLevel:
        if not (0.0 < scale <= 1.0):
            raise ArgumentError(f"scale 必须在 (0, 1]: {scale}")
        return cls(scale=scale, rows=scaled_dim(base_rows, scale), cols=scaled_dim(base_cols, scale))


__all__ = [
    "DEFAULT_TOLERANCE",
    "TARGET_MEDIAN",
    "Amplitude",
    "AmplitudeKind",
    "CompareConfig",
    "HistogramNormalization",
    "HistogramSpec",
    "ResolutionLevel",
    "SelectionCriteria",
    "SynthSpec",
    "scaled_dim",
]
