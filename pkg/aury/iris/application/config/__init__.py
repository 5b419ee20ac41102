"""配置模块。

使用 pydantic-settings 分节管理配置，环境变量以 __ 分隔层级：
    SWEEP__SCALES=1.0,0.5,0.3
    RUNTIME__THREADS=0
"""

from .settings import (
    DEFAULT_SCALES,
    CompareSettings,
    IrisSettings,
    LogSettings,
    NormalizeSettings,
    RunConfig,
    RuntimeSettings,
    SelectionSettings,
    SweepSettings,
    check_scales,
    parse_scales,
)

__all__ = [
    "DEFAULT_SCALES",
    "CompareSettings",
    "IrisSettings",
    "LogSettings",
    "NormalizeSettings",
    "RunConfig",
    "RuntimeSettings",
    "SelectionSettings",
    "SweepSettings",
    "check_scales",
    "parse_scales",
]
