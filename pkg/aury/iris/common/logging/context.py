"""日志上下文管理。

提供运行 ID（run_id）与流水线阶段（stage）的上下文变量。
工作线程通过 contextvars.copy_context() 继承提交方的上下文，
因此比对引擎中输出的日志同样带有 run_id 和 stage。
"""

from __future__ import annotations

from contextvars import ContextVar
from enum import Enum
import uuid


class PipelineStage(str, Enum):
    """日志用流水线阶段常量（决定日志写入哪个文件）。"""

    NORMALIZE = "normalize"
    PYRAMID = "pyramid"
    COMPARE = "compare"
    STATS = "stats"
    SWEEP = "sweep"
    SYNTH = "synth"
    CHECK = "check"


_stage: ContextVar[PipelineStage] = ContextVar("pipeline_stage", default=PipelineStage.SWEEP)

_run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def _to_stage(stage: PipelineStage | str) -> PipelineStage:
    """将输入标准化为 PipelineStage，未知值回退到 sweep。"""
    if isinstance(stage, PipelineStage):
        return stage
    try:
        return PipelineStage(str(stage).strip().lower())
    except ValueError:
        return PipelineStage.SWEEP


def get_stage() -> PipelineStage:
    """获取当前流水线阶段。"""
    return _stage.get()


def set_stage(stage: PipelineStage | str) -> None:
    """设置当前流水线阶段。

    每个子命令在执行前调用一次，之后该上下文中的日志都带有该阶段标记。
    """
    _stage.set(_to_stage(stage))


def get_run_id() -> str:
    """获取当前运行 ID，未设置时生成一个新的随机 ID。"""
    run_id = _run_id_var.get()
    if not run_id:
        run_id = uuid.uuid4().hex
        _run_id_var.set(run_id)
    return run_id


def set_run_id(run_id: str) -> None:
    """设置运行 ID。"""
    _run_id_var.set(run_id)


__all__ = [
    "PipelineStage",
    "get_run_id",
    "get_stage",
    "set_run_id",
    "set_stage",
]
