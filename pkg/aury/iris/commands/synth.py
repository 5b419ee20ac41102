"""synth 子命令 - 生成合成归一化虹膜集合。

使用示例：
    aury-iris synth --count 300 --rows 32 --cols 240 --seed 42
    aury-iris synth --count 300 --rows 64 --cols 480 --sigma 2 --seed 7
    aury-iris synth --count 20 --rows 128 --cols 960 --eyes
"""

from __future__ import annotations

import typer

from aury.iris.application.pipeline import run_synth
from aury.iris.domain.models import Amplitude, AmplitudeKind, SynthSpec

from .state import get_state, print_summary


def synth(
    ctx: typer.Context,
    count: int = typer.Option(..., "--count", "-n", help="图像数量（≥ 2）"),
    rows: int = typer.Option(..., "--rows", help="径向尺寸"),
    cols: int = typer.Option(..., "--cols", help="角向尺寸"),
    sigma: float = typer.Option(0.0, "--sigma", help="高斯模糊半径（网格单元），0 为独立同分布"),
    occlusion: float = typer.Option(0.0, "--occlusion", help="每幅图像的遮挡比例 [0, 1)"),
    amplitude: AmplitudeKind = typer.Option(AmplitudeKind.UNIFORM01, "--amplitude", help="像素幅值分布"),
    mu: float = typer.Option(127.0, "--mu", help="gaussian 幅值均值（0–255 刻度）"),
    spread: float = typer.Option(20.0, "--spread", help="gaussian 幅值标准差（0–255 刻度）"),
    jitter: float = typer.Option(0.25, "--jitter", help="相关纹理逐图对比度增益的对数正态 sigma"),
    seed: int | None = typer.Option(None, "--seed", help="随机种子（默认 RUNTIME__SEED）"),
    eyes: bool = typer.Option(False, "--eyes", help="另外写出 PGM 眼部图像与清单"),
) -> None:
    """生成 i.i.d. 或空间相关的合成纹理（NIR1）。"""
    config = get_state(ctx).run_config(seed=seed)
    if amplitude is AmplitudeKind.GAUSSIAN:
        amp = Amplitude.gaussian(mu / 255.0, spread / 255.0)
    else:
        amp = Amplitude.uniform01()
    spec = SynthSpec(
        count=count,
        rows=rows,
        cols=cols,
        amplitude=amp,
        correlation_sigma=sigma,
        occlusion_fraction=occlusion,
        seed=config.seed,
        contrast_jitter=jitter,
    )
    print_summary(run_synth(config, spec, eyes=eyes))


__all__ = [
    "synth",
]
