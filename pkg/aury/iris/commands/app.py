"""Aury Iris 统一命令行入口。

提供统一的 CLI 入口，整合所有子命令：
- aury-iris normalize    清单 → 归一化 NIR1
- aury-iris pyramid      分辨率金字塔
- aury-iris compare      全部冒名对比对
- aury-iris stats        pairs.csv → 统计与直方图
- aury-iris sweep        完整分辨率扫描
- aury-iris synth        合成数据
- aury-iris table1-check 由 (mean, std) 表计算自由度（别名 dof-check）

退出码：0 成功，1 用法错误，2 数据/格式错误，3 统计退化。
"""

from __future__ import annotations

from pathlib import Path
import sys
from typing import Any

from pydantic import ValidationError
import typer
from typer.core import TyperGroup

try:
    # typer ≥ 0.26 自带 click 实现
    from typer import _click as click
except ImportError:
    import click  # type: ignore[no-redef]

from aury.iris.common.exceptions import ExitCode, IrisError

app: typer.Typer | None = None
_registered = False


class IrisGroup(TyperGroup):
    """把 click 的用法错误映射为退出码 1，IrisError 映射为其 exit_code。"""

    def main(  # type: ignore[override]
        self,
        args: Any = None,
        prog_name: str | None = None,
        complete_var: str | None = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else ExitCode.SUCCESS
        except click.exceptions.ClickException as exc:
            exc.show()
            code = ExitCode.USAGE
        except click.exceptions.Abort:
            click.echo("已中止", err=True)
            code = ExitCode.USAGE
        except ValidationError as exc:
            from .state import err_console

            err_console.print(f"[bold red]配置错误[/bold red]: {exc}", highlight=False)
            code = ExitCode.USAGE
        except IrisError as exc:
            from aury.iris.common.logging import log_exception

            from .state import err_console

            log_exception(f"{type(exc).__name__}: {exc}", level="DEBUG")
            err_console.print(f"[bold red]错误[/bold red] ({type(exc).__name__}): {exc}", highlight=False)
            code = exc.exit_code
        if standalone_mode:
            sys.exit(int(code))
        return int(code)


def _get_app() -> typer.Typer:
    """获取并初始化 Typer 应用（延迟加载）。"""
    global app, _registered

    if app is None:
        app = typer.Typer(
            name="aury-iris",
            cls=IrisGroup,
            help="Aury Iris - 虹膜纹理二项自由度测量",
            add_completion=False,
            no_args_is_help=True,
            rich_markup_mode="rich",
            pretty_exceptions_enable=False,
        )

        @app.callback()
        def callback(
            ctx: typer.Context,
            threads: int | None = typer.Option(None, "--threads", help="工作线程数（0 = CPU 核数），输出与之无关"),
            output_dir: Path | None = typer.Option(None, "--output-dir", "-o", help="结果输出目录"),
            log_level: str | None = typer.Option(None, "--log-level", help="日志级别（默认 LOG__LEVEL）"),
            version: bool = typer.Option(False, "--version", "-v", help="显示版本信息", is_eager=True),
        ) -> None:
            """Aury Iris - 逐像素比对测量虹膜纹理的二项自由度。"""
            if version:
                from aury.iris import __version__

                from .state import console

                console.print(f"[bold cyan]Aury Iris[/bold cyan] v{__version__}")
                raise typer.Exit()

            from aury.iris.application.config import IrisSettings
            from aury.iris.common.logging import setup_logging

            from .state import CliState

            settings = IrisSettings()
            setup_logging(
                log_level=(log_level or settings.log.level).upper(),
                log_dir=settings.log.dir,
                enable_console=settings.log.enable_console,
                enable_file=settings.log.enable_file,
                rotation_size=settings.log.rotation_size,
                retention_days=settings.log.retention_days,
            )
            ctx.obj = CliState(settings, {"threads": threads, "output_dir": output_dir})

    if not _registered:
        _registered = True
        # 延迟导入子命令
        from .check import dof_check
        from .pipeline import compare, normalize, pyramid, stats, sweep
        from .synth import synth

        app.command(name="normalize")(normalize)
        app.command(name="pyramid")(pyramid)
        app.command(name="compare")(compare)
        app.command(name="stats")(stats)
        app.command(name="sweep")(sweep)
        app.command(name="synth")(synth)
        app.command(name="table1-check")(dof_check)
        app.command(name="dof-check", hidden=True)(dof_check)

    return app


def main() -> None:
    """CLI 入口点。"""
    _get_app()()


__all__ = [
    "IrisGroup",
    "main",
]
