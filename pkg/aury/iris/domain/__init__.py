"""领域层模块。

提供领域模型和纯算法，包括：
- 图像、配置与结果模型
- 异常定义
- normalization：橡皮膜展开与遮挡掩码
- preprocess：图像选择、强度归一化、双三次降采样
- compare：容差汉明距离与全配对引擎
- stats：二项模型、自由度估计、直方图与扫描表
- synth：合成纹理与眼部图像

算法子包按需加载（compare 和 synth 依赖 infrastructure 的线程池）。
"""

from importlib import import_module

from .exceptions import (
    ArgumentError,
    DegenerateDistributionError,
    DegenerateImageError,
    DomainError,
    SegmentationError,
)
from .models import (
    CompareConfig,
    EyeImage,
    EyeSide,
    HistogramSpec,
    ImposterStats,
    IrisSegmentation,
    NormalizedIris,
    OcclusionMask,
    PairResult,
    SelectionCriteria,
    SweepRow,
    SynthSpec,
)

_SUBPACKAGES = {"compare", "normalization", "preprocess", "stats", "synth"}


def __getattr__(name: str):
    if name in _SUBPACKAGES:
        return import_module(f"{__name__}.{name}")
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    # 异常
    "ArgumentError",
    # 模型
    "CompareConfig",
    "DegenerateDistributionError",
    "DegenerateImageError",
    "DomainError",
    "EyeImage",
    "EyeSide",
    "HistogramSpec",
    "ImposterStats",
    "IrisSegmentation",
    "NormalizedIris",
    "OcclusionMask",
    "PairResult",
    "SegmentationError",
    "SelectionCriteria",
    "SweepRow",
    "SynthSpec",
]
