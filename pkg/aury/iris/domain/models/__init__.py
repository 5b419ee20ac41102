"""领域模型模块。

提供图像类模型、配置值对象和结果类模型。
"""

from .configs import (
    DEFAULT_TOLERANCE,
    TARGET_MEDIAN,
    Amplitude,
    AmplitudeKind,
    CompareConfig,
    HistogramNormalization,
    HistogramSpec,
    ResolutionLevel,
    SelectionCriteria,
    SynthSpec,
    scaled_dim,
)
from .images import (
    BASE_COLS,
    BASE_ROWS,
    EyeImage,
    EyeSide,
    IrisSegmentation,
    NormalizedIris,
    OcclusionMask,
)
from .results import (
    AllPairsReport,
    BinomialModel,
    FitResult,
    Histogram,
    ImposterStats,
    PairResult,
    RejectionReason,
    SelectionRejection,
    SweepRow,
)

__all__ = [
    "BASE_COLS",
    "BASE_ROWS",
    "DEFAULT_TOLERANCE",
    "TARGET_MEDIAN",
    # 结果
    "AllPairsReport",
    # 配置
    "Amplitude",
    "AmplitudeKind",
    "BinomialModel",
    "CompareConfig",
    # 图像
    "EyeImage",
    "EyeSide",
    "FitResult",
    "Histogram",
    "HistogramNormalization",
    "HistogramSpec",
    "ImposterStats",
    "IrisSegmentation",
    "NormalizedIris",
    "OcclusionMask",
    "PairResult",
    "RejectionReason",
    "ResolutionLevel",
    "SelectionCriteria",
    "SelectionRejection",
    "SweepRow",
    "SynthSpec",
    "scaled_dim",
]
