"""table1-check 子命令（别名 dof-check）- 由已发表的 (mean, std) 表直接计算自由度（无需数据集）。

使用示例：
    aury-iris table1-check --table tests/data/reference_sweep.csv
    aury-iris dof-check --table moments.csv
"""

from __future__ import annotations

from pathlib import Path

import typer

from aury.iris.application.pipeline import run_dof_check

from .state import get_state, print_summary


def dof_check(
    ctx: typer.Context,
    table: Path = typer.Option(..., "--table", "-t", help="含 mean,std[,scale|scale_pct] 列的 CSV"),
) -> None:
    """N = p(1−p)/σ²，四舍五入（远离零）到整数。"""
    config = get_state(ctx).run_config()
    print_summary(run_dof_check(config, table))


__all__ = [
    "dof_check",
]
