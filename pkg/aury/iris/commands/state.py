"""命令共享状态与 rich 输出。"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table
import typer

from aury.iris.application.config import IrisSettings, RunConfig
from aury.iris.application.pipeline import StageSummary
from aury.iris.domain.models import SweepRow

console = Console()
err_console = Console(stderr=True)


@dataclass
class CliState:
    """全局选项 + 配置，由根回调放入 ctx.obj。"""

    settings: IrisSettings
    overrides: dict[str, Any] = field(default_factory=dict)

    def run_config(self, **extra: Any) -> RunConfig:
        return self.settings.run_config(**{**self.overrides, **extra})


def get_state(ctx: typer.Context) -> CliState:
    state = ctx.find_object(CliState)
    if state is None:
        # 直接调用子命令（测试中常见）时按默认配置构造
        state = CliState(IrisSettings())
        ctx.obj = state
    return state


def _fmt(value: Any) -> str:
    if value is None:
        return "—"
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def sweep_table(rows: Sequence[SweepRow], title: str = "冒名分布统计") -> Table:
    table = Table(title=title, show_lines=False)
    for column in ("scale", "size", "n_pairs", "mean", "std", "dof_real", "dof"):
        table.add_column(column, justify="right")
    for r in rows:
        table.add_row(
            "—" if r.scale is None else f"{100 * r.scale:g}%",
            "—" if r.rows is None else f"{r.rows}x{r.cols}",
            str(r.n_pairs),
            _fmt(r.mean),
            _fmt(r.std),
            "—" if r.dof_real is None else f"{r.dof_real:.3f}",
            _fmt(r.dof),
        )
    return table


def print_summary(summary: StageSummary) -> None:
    console.print(f"[bold cyan]{summary.stage.value}[/bold cyan] → [green]{summary.output_dir}[/green]")
    for key, value in summary.details.items():
        console.print(f"   {key}: [green]{_fmt(value)}[/green]")
    if summary.rows:
        console.print(sweep_table(summary.rows))
    written = [p for p in summary.files if Path(p).suffix != ".nir"]
    nir_count = len(summary.files) - len(written)
    if nir_count:
        console.print(f"   写出 {nir_count} 个 NIR1 文件")
    for path in written:
        console.print(f"   [dim]{path}[/dim]")


__all__ = [
    "CliState",
    "console",
    "err_console",
    "get_state",
    "print_summary",
    "sweep_table",
]
