"""日志格式化函数。

提供控制台 sink、文件格式化以及紧凑的 Java 风格异常堆栈。
"""

from __future__ import annotations

import linecache
import sys
from typing import Any

from loguru import logger

# 过滤掉的第三方模块（不显示在堆栈中）
_INTERNAL_MODULES = {"concurrent", "threading", "typer", "click"}


def _describe_local(value: Any) -> str:
    """局部变量的简短描述，数组只显示形状和类型。"""
    shape = getattr(value, "shape", None)
    dtype = getattr(value, "dtype", None)
    if shape is not None and dtype is not None:
        return f"<ndarray shape={tuple(shape)} dtype={dtype}>"
    if hasattr(value, "model_dump"):
        return repr(value.model_dump())
    if isinstance(value, str | int | float | bool):
        return repr(value)
    return f"<{type(value).__name__}>"


def format_exception_compact(
    exc_type: type[BaseException],
    exc_value: BaseException,
    exc_tb: Any,
) -> str:
    """格式化异常为 Java 风格堆栈 + 局部变量摘要。"""
    lines = [f"{exc_type.__name__}: {exc_value}"]
    all_locals: dict[str, str] = {}

    tb = exc_tb
    while tb:
        frame = tb.tb_frame
        filename = frame.f_code.co_filename
        short_file = filename.split("/")[-1]
        lineno = tb.tb_lineno

        is_site_package = "site-packages/" in filename
        if is_site_package:
            module = filename.split("site-packages/")[-1].replace("/", ".").removesuffix(".py")
            if module.split(".")[0] in _INTERNAL_MODULES:
                tb = tb.tb_next
                continue
        else:
            module = short_file.removesuffix(".py")

        lines.append(f"    at {module}.{frame.f_code.co_name}({short_file}:{lineno})")
        if not is_site_package:
            source_line = linecache.getline(filename, lineno).strip()
            if source_line:
                lines.append(f"        >> {source_line}")
            for k, v in frame.f_locals.items():
                if k.startswith("_") or k in ("self", "cls") or k in all_locals:
                    continue
                try:
                    described = _describe_local(v)
                except Exception:
                    described = f"<{type(v).__name__}>"
                all_locals[k] = described[:200]
        tb = tb.tb_next

    if all_locals:
        lines.append("  Locals:")
        lines.extend(f"    {k} = {v}" for k, v in list(all_locals.items())[:10])
    return "\n".join(lines)


def create_console_sink(colorize: bool = True):
    """创建控制台 sink（输出到 stderr，避免污染 stdout 上的结果）。"""
    if colorize:
        green, cyan, yellow, red, reset, bold = (
            "\033[32m", "\033[36m", "\033[33m", "\033[31m", "\033[0m", "\033[1m",
        )
    else:
        green = cyan = yellow = red = reset = bold = ""

    level_colors = {
        "DEBUG": cyan,
        "INFO": green,
        "WARNING": yellow,
        "ERROR": red,
        "CRITICAL": f"{bold}{red}",
    }

    def sink(message) -> None:
        record = message.record
        exc = record.get("exception")
        level = record["level"].name
        level_color = level_colors.get(level, "")
        stage = record["extra"].get("stage", "")
        run_id = record["extra"].get("run_id", "")[:8]

        output = (
            f"{green}{record['time'].strftime('%Y-%m-%d %H:%M:%S')}{reset} | "
            f"{cyan}[{stage}]{reset} | "
            f"{level_color}{level: <8}{reset} | "
            f"{cyan}{record['name']}:{record['function']}:{record['line']}{reset} | "
            f"{run_id} - "
            f"{level_color}{record['message']}{reset}\n"
        )
        if exc and exc.type:
            output += f"{red}{format_exception_compact(exc.type, exc.value, exc.traceback)}{reset}\n"
        sys.stderr.write(output)

    return sink


def _escape_tags(s: str) -> str:
    """转义 loguru 格式特殊字符，避免解析错误。"""
    return s.replace("{", "{{").replace("}", "}}").replace("<", r"\<")


def format_message(record: dict) -> str:
    """格式化日志消息（用于文件 sink）。"""
    exc = record.get("exception")
    output = (
        f"{record['time'].strftime('%Y-%m-%d %H:%M:%S')} | {record['level'].name: <8} | "
        f"{record['name']}:{_escape_tags(record['function'])}:{record['line']} | "
        f"{record['extra'].get('run_id', '')} - {_escape_tags(record['message'])}\n"
    )
    if exc and exc.type:
        output += f"{_escape_tags(format_exception_compact(exc.type, exc.value, exc.traceback))}\n"
    return output


def log_exception(
    message: str,
    *,
    level: str = "ERROR",
    context: dict[str, Any] | None = None,
) -> None:
    """记录当前异常（紧凑堆栈），用于命令层在退出前留下诊断信息。

    使用示例:
        try:
            run_sweep(config)
        except IrisError:
            log_exception("扫描失败", context={"input": str(path)})
            raise
    """
    exc_type, exc_value, exc_tb = sys.exc_info()
    parts = [message]
    if context:
        parts.append("上下文: " + " | ".join(f"{k}={v}" for k, v in context.items()))
    text = " | ".join(parts)
    if exc_type is not None and exc_value is not None:
        text += "\n" + format_exception_compact(exc_type, exc_value, exc_tb)
    logger.opt(depth=1).log(level, text)


__all__ = [
    "create_console_sink",
    "format_exception_compact",
    "format_message",
    "log_exception",
]
