"""Application 层模块。

- config：pydantic-settings 配置与 RunConfig
- pipeline：子命令对应的流水线编排
"""

from .config import IrisSettings, RunConfig
from .pipeline import StageSummary

__all__ = [
    "IrisSettings",
    "RunConfig",
    "StageSummary",
]
