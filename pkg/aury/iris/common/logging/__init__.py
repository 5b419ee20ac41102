"""日志管理器 - 统一的日志配置和管理。

提供：
- 统一的日志配置（控制台 + 可选按阶段分离的滚动文件）
- 阶段耗时监控装饰器
- 运行 ID / 流水线阶段上下文
- 自定义日志 sink 注册 API

日志文件（启用 enable_file 时）：
- {stage}_info_{date}.log  - INFO/WARNING/DEBUG 日志
- {stage}_error_{date}.log - ERROR/CRITICAL 日志
- rejected_{date}.log      - 图像选择淘汰记录
"""

from __future__ import annotations

from loguru import logger

# 移除默认配置，由 setup_logging 统一配置
logger.remove()

from aury.iris.common.logging.context import (
    PipelineStage,
    get_run_id,
    get_stage,
    set_run_id,
    set_stage,
)
from aury.iris.common.logging.decorators import log_performance
from aury.iris.common.logging.format import format_exception_compact, log_exception
from aury.iris.common.logging.setup import REJECTED_SINK, register_log_sink, setup_logging

__all__ = [
    "REJECTED_SINK",
    "PipelineStage",
    "format_exception_compact",
    "get_run_id",
    "get_stage",
    "log_exception",
    "log_performance",
    "logger",
    "register_log_sink",
    "set_run_id",
    "set_stage",
    "setup_logging",
]
