"""Common 层模块。

最基础层，提供：
- 异常基类与退出码
- 日志系统
- 计算线程池
"""

from .compute import ComputePool, resolve_threads
from .exceptions import ExitCode, IrisError
from .logging import (
    PipelineStage,
    log_exception,
    log_performance,
    logger,
    setup_logging,
)

__all__ = [
    "ComputePool",
    "ExitCode",
    "IrisError",
    "PipelineStage",
    "log_exception",
    "log_performance",
    "logger",
    "resolve_threads",
    "setup_logging",
]
