"""日志配置和初始化。

提供 setup_logging 和 register_log_sink 功能。
"""

from __future__ import annotations

import logging
import os
import sys
from typing import Any

from loguru import logger

from aury.iris.common.logging.context import (
    PipelineStage,
    _to_stage,
    get_run_id,
    get_stage,
    set_stage,
)
from aury.iris.common.logging.format import create_console_sink, format_message

#: 图像选择淘汰记录的 sink 名与过滤键
REJECTED_SINK = "rejected"

# 全局日志配置状态
_log_config: dict[str, Any] = {
    "log_dir": "logs",
    "rotation": None,
    "retention_days": 7,
    "enqueue": False,
    "initialized": False,
}


def register_log_sink(
    name: str,
    *,
    filter_key: str | None = None,
    level: str = "INFO",
) -> None:
    """注册自定义日志 sink。

    使用 logger.bind() 标记的日志会写入对应文件。

    Args:
        name: 日志文件名前缀（如 "pairs" -> pairs_2024-01-01.log）
        filter_key: 过滤键名，日志需要 logger.bind(key=True) 才会写入
        level: 日志级别

    使用示例:
        register_log_sink("rejected", filter_key="rejected")
        logger.bind(rejected=True).info("img_0001 中位数 63.0 < 70")
    """
    if not _log_config["initialized"]:
        raise RuntimeError("请先调用 setup_logging() 初始化日志系统")

    if filter_key:
        def sink_filter(record, key=filter_key):
            return record["extra"].get(key, False)
    else:
        sink_filter = None

    logger.add(
        os.path.join(_log_config["log_dir"], f"{name}_{{time:YYYY-MM-DD}}.log"),
        rotation=_log_config["rotation"],
        retention=f"{_log_config['retention_days']} days",
        level=level,
        format="{time:YYYY-MM-DD HH:mm:ss} | {extra[run_id]} | {message}",
        encoding="utf-8",
        enqueue=_log_config["enqueue"],
        delay=True,
        filter=sink_filter,
    )
    logger.debug(f"注册日志 sink: {name} (filter_key={filter_key})")


class _InterceptHandler(logging.Handler):
    """将标准 logging 日志（matplotlib、PIL 等）转发到 loguru。"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        frame = logging.currentframe()
        depth = 0
        while frame is not None:
            filename = frame.f_code.co_filename
            if "logging" not in filename and "loguru" not in filename:
                break
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def _setup_global_intercept(logger_levels: list[tuple[str, str]] | None = None) -> None:
    """全局接管标准 logging，转发到 loguru。

    Args:
        logger_levels: 需要单独设置级别的 logger 列表，格式: [("name", "LEVEL"), ...]
    """
    logging.root.handlers = [_InterceptHandler()]
    logging.root.setLevel(logging.DEBUG)
    for name, level in logger_levels or []:
        logging.getLogger(name).setLevel(level.upper())


def setup_logging(
    log_level: str = "INFO",
    log_dir: str | None = None,
    stage: PipelineStage | str = PipelineStage.SWEEP,
    enable_console: bool = True,
    enable_file: bool = False,
    rotation_size: str = "50 MB",
    retention_days: int = 7,
    logger_levels: list[tuple[str, str]] | None = None,
    enqueue: bool = False,
) -> None:
    """设置日志配置（幂等，可重复调用）。

    控制台输出到 stderr，仅在终端上着色；启用文件日志时按阶段分离：
    - {stage}_info_{date}.log  - 当前级别及以上
    - {stage}_error_{date}.log - ERROR/CRITICAL
    - rejected_{date}.log      - 图像选择淘汰记录（logger.bind(rejected=True)）

    Args:
        log_level: 日志级别（DEBUG/INFO/WARNING/ERROR/CRITICAL）
        log_dir: 日志目录（默认：./logs，仅在 enable_file 时创建）
        stage: 当前流水线阶段
        enable_console: 是否输出到控制台
        enable_file: 是否写入日志文件
        rotation_size: 单文件大小上限
        retention_days: 日志保留天数
        logger_levels: 第三方 logger 的级别覆盖，默认压低 matplotlib/PIL
        enqueue: 是否后台线程写入文件
    """
    log_level = log_level.upper()
    log_dir = log_dir or "logs"
    stage_enum = _to_stage(stage)

    logger.remove()
    _log_config.update({
        "log_dir": log_dir,
        "rotation": rotation_size,
        "retention_days": retention_days,
        "enqueue": enqueue,
        "initialized": True,
    })
    set_stage(stage_enum)

    # 每条日志都带有 run_id 和 stage
    logger.configure(patcher=lambda record: record["extra"].update({
        "run_id": get_run_id(),
        "stage": get_stage().value,
    }))

    if enable_console:
        console_sink = create_console_sink(colorize=sys.stderr.isatty())
        logger.add(console_sink, format="{message}", level=log_level, colorize=False)

    if enable_file:
        os.makedirs(log_dir, exist_ok=True)
        ctx = stage_enum.value
        logger.add(
            os.path.join(log_dir, f"{ctx}_info_{{time:YYYY-MM-DD}}.log"),
            format=lambda record: format_message(record),
            rotation=rotation_size,
            retention=f"{retention_days} days",
            level=log_level,
            encoding="utf-8",
            enqueue=enqueue,
        )
        logger.add(
            os.path.join(log_dir, f"{ctx}_error_{{time:YYYY-MM-DD}}.log"),
            format=lambda record: format_message(record),
            rotation=rotation_size,
            retention=f"{retention_days} days",
            level="ERROR",
            encoding="utf-8",
            enqueue=enqueue,
        )
        register_log_sink(REJECTED_SINK, filter_key=REJECTED_SINK)

    _setup_global_intercept(logger_levels or [("matplotlib", "WARNING"), ("PIL", "WARNING")])
    logger.debug(f"日志初始化完成: level={log_level}, stage={stage_enum.value}, file={enable_file}")


__all__ = [
    "REJECTED_SINK",
    "register_log_sink",
    "setup_logging",
]
