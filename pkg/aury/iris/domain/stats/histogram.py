"""汉明距离直方图、二项分布叠加与卡方拟合优度。"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy import stats as sps

from aury.iris.domain.exceptions import ArgumentError, DegenerateDistributionError
from aury.iris.domain.models import (
    BinomialModel,
    FitResult,
    Histogram,
    HistogramNormalization,
    HistogramSpec,
    ImposterStats,
    PairResult,
)

from .binomial import binomial_pmf_all
from .imposter import hamming_values

# 分箱时吸收 k/N·N 之类的浮点误差
_BIN_EPS = 1e-9
#: 卡方检验合并分箱的最小期望频数
MIN_EXPECTED = 5.0


def _bin_index(x: np.ndarray, n_bins: int) -> np.ndarray:
    idx = np.floor(np.asarray(x, dtype=np.float64) * n_bins + _BIN_EPS).astype(np.intp)
    return np.clip(idx, 0, n_bins - 1)


def histogram_from_values(
    values: np.ndarray,
    stats: ImposterStats,
    spec: HistogramSpec | None = None,
) -> Histogram:
    """由汉明距离数组构建直方图和叠加。"""
    spec = spec or HistogramSpec()
    if not stats.dof_defined:
        raise DegenerateDistributionError("自由度无定义，无法构建二项叠加", metadata={"mean": stats.mean})
    values = np.asarray(values, dtype=np.float64).reshape(-1)
    if values.size == 0:
        raise ArgumentError("没有可统计的汉明距离")

    model = BinomialModel(trials=stats.dof, success_prob=stats.mean)
    n_bins = spec.n_bins(model.trials)
    edges = np.arange(n_bins + 1, dtype=np.float64) / n_bins
    counts = np.bincount(_bin_index(values, n_bins), minlength=n_bins)

    total = float(values.size)
    pmf = binomial_pmf_all(model)
    overlay_x = np.arange(model.trials + 1, dtype=np.float64) / model.trials
    if spec.normalization is HistogramNormalization.PROBABILITY:
        heights = counts / total
        overlay_mass = pmf
    else:
        heights = counts.astype(np.float64)
        overlay_mass = pmf * total
    overlay_binned = np.bincount(_bin_index(overlay_x, n_bins), weights=overlay_mass, minlength=n_bins)

    return Histogram(
        edges=edges,
        counts=counts,
        values=heights,
        overlay_x=overlay_x,
        overlay_mass=overlay_mass,
        overlay_binned=overlay_binned,
        normalization=spec.normalization,
        model=model,
    )


def histogram_with_overlay(
    pairs: Sequence[PairResult],
    stats: ImposterStats,
    spec: HistogramSpec | None = None,
) -> Histogram:
    """汉明距离直方图 + 同均值同自由度的二项分布叠加（总质量相同）。

    默认分箱宽度为 1/N，每个分箱对齐一个二项格点；
    k = N 的格点落入最后一个分箱。
    """
    return histogram_from_values(hamming_values(pairs), stats, spec)


def goodness_of_fit(hist: Histogram, fitted_params: int = 2) -> FitResult:
    """直方图与叠加之间的 Pearson 卡方检验。

    分箱按顺序合并，直到每个合并单元的期望频数 ≥ 5；
    剩余尾部并入最后一个单元。自由度 = 单元数 − 1 − fitted_params。
    """
    observed = hist.counts.astype(np.float64)
    total = observed.sum()
    expected = hist.overlay_binned / hist.overlay_binned.sum() * total

    obs_cells: list[float] = []
    exp_cells: list[float] = []
    acc_obs = acc_exp = 0.0
    for o, e in zip(observed, expected, strict=True):
        acc_obs += o
        acc_exp += e
        if acc_exp >= MIN_EXPECTED:
            obs_cells.append(acc_obs)
            exp_cells.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if exp_cells:
        obs_cells[-1] += acc_obs
        exp_cells[-1] += acc_exp
    else:
        obs_cells.append(acc_obs)
        exp_cells.append(acc_exp)

    obs = np.array(obs_cells)
    exp = np.array(exp_cells)
    chi2 = float(np.sum((obs - exp) ** 2 / exp))
    dof = max(1, len(exp) - 1 - fitted_params)
    return FitResult(chi2=chi2, dof=dof, p_value=float(sps.chi2.sf(chi2, dof)), n_cells=len(exp))


__all__ = [
    "MIN_EXPECTED",
    "goodness_of_fit",
    "histogram_from_values",
    "histogram_with_overlay",
]
