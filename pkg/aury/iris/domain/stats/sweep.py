"""分辨率扫描表：每个分辨率层一行，按 scale 降序输出。"""

from __future__ import annotations

from collections.abc import Sequence

from aury.iris.common.logging import logger
from aury.iris.domain.models import PairResult, ResolutionLevel, SweepRow

from .binomial import estimate_dof
from .imposter import imposter_stats


def sweep_table(levels: Sequence[tuple[ResolutionLevel, Sequence[PairResult]]]) -> list[SweepRow]:
    """对每个分辨率层计算冒名统计。

    少于 2 个比对结果的层被跳过并记录警告；自由度无定义的层保留，dof 为空。
    """
    rows: list[SweepRow] = []
    for level, pairs in sorted(levels, key=lambda item: item[0].scale, reverse=True):
        if len(pairs) < 2:
            logger.warning(f"分辨率层 scale={level.scale} 只有 {len(pairs)} 个比对结果，已跳过")
            continue
        st = imposter_stats(pairs)
        if not st.dof_defined:
            logger.warning(f"分辨率层 scale={level.scale} 标准差为 0，自由度无定义")
        rows.append(
            SweepRow(
                scale=level.scale,
                rows=level.rows,
                cols=level.cols,
                n_pairs=st.n_pairs,
                mean=st.mean,
                std=st.std,
                dof_real=st.dof_real,
                dof=st.dof,
            )
        )
        logger.info(
            f"scale={level.scale:g} ({level.rows}×{level.cols}): n={st.n_pairs}, "
            f"mean={st.mean:.9f}, std={st.std:.9f}, dof={st.dof}"
        )
    return rows


def row_from_moments(level: ResolutionLevel | None, mean: float, std: float, n_pairs: int = 0) -> SweepRow:
    """由已知的 (均值, 标准差) 直接构造扫描行，用于核对已发表的统计表。

    level 为 None 时行不对应任何分辨率层。
    """
    dof_real, dof = estimate_dof(mean, std)
    return SweepRow(
        scale=None if level is None else level.scale,
        rows=None if level is None else level.rows,
        cols=None if level is None else level.cols,
        n_pairs=n_pairs,
        mean=mean,
        std=std,
        dof_real=dof_real,
        dof=dof,
    )


__all__ = [
    "row_from_moments",
    "sweep_table",
]
