"""冒名分布统计。

均值与离差平方和都用 math.fsum（精确舍入求和），
结果与输入顺序无关；标准差为样本标准差（分母 n − 1）。
"""

from __future__ import annotations

from collections.abc import Sequence
import math

import numpy as np

from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import ImposterStats, PairResult

from .binomial import estimate_dof


def hamming_values(pairs: Sequence[PairResult]) -> np.ndarray:
    return np.fromiter((p.hamming for p in pairs), dtype=np.float64, count=len(pairs))


def stats_from_values(values: np.ndarray) -> ImposterStats:
    """从汉明距离数组计算统计量。"""
    values = np.asarray(values, dtype=np.float64).reshape(-1)
    n = int(values.size)
    if n < 2:
        raise ArgumentError(f"至少需要 2 个比对结果，实际 {n}")
    # 全部相等时 fsum(values) / n 可能不精确，离差留下 ~1e-17 的残差
    if np.all(values == values[0]):
        return ImposterStats(n_pairs=n, mean=float(values[0]), std=0.0, dof_real=None, dof=None)
    mean = math.fsum(values) / n
    std = math.sqrt(math.fsum((values - mean) ** 2) / (n - 1))
    dof_real, dof = estimate_dof(mean, std)
    return ImposterStats(n_pairs=n, mean=mean, std=std, dof_real=dof_real, dof=dof)


def imposter_stats(pairs: Sequence[PairResult]) -> ImposterStats:
    """均值、样本标准差与自由度；标准差为 0 时自由度无定义。"""
    return stats_from_values(hamming_values(pairs))


__all__ = [
    "hamming_values",
    "imposter_stats",
    "stats_from_values",
]
