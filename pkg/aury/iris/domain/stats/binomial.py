"""二项分布与自由度估计。

f(k) = C(N, k)·p^k·(1−p)^(N−k)，通过 log-gamma 计算，N 为数百时依然有限。
自由度 N = p(1−p)/σ²，四舍五入（.5 远离零）。
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from aury.iris.domain.exceptions import ArgumentError, DegenerateDistributionError
from aury.iris.domain.models import BinomialModel

#: 基于相位编码的虹膜码自由度，用于对照
PHASE_CODE_DOF = 244


def _log_pmf(trials: int, prob: float, k: np.ndarray) -> np.ndarray:
    k = np.asarray(k, dtype=np.float64)
    log_comb = special.gammaln(trials + 1) - special.gammaln(k + 1) - special.gammaln(trials - k + 1)
    return log_comb + special.xlogy(k, prob) + special.xlog1py(trials - k, -prob)


def binomial_pmf(model: BinomialModel, k: int) -> float:
    """单点概率 P(K = k)，0 ≤ k ≤ N。"""
    if not (0 <= k <= model.trials):
        raise ArgumentError(f"k 超出范围 [0, {model.trials}]: {k}")
    value = float(np.exp(_log_pmf(model.trials, model.success_prob, np.array(k))))
    return min(max(value, 0.0), 1.0)


def binomial_pmf_all(model: BinomialModel) -> np.ndarray:
    """k = 0..N 的全部概率。"""
    k = np.arange(model.trials + 1)
    return np.clip(np.exp(_log_pmf(model.trials, model.success_prob, k)), 0.0, 1.0)


def round_half_away(value: float) -> int:
    """四舍五入，.5 远离零。"""
    return int(math.copysign(math.floor(abs(value) + 0.5), value))


def estimate_dof(mean: float, std: float) -> tuple[float, int]:
    """由冒名分布的均值和标准差估计二项自由度。

    Returns:
        (dof_real, dof)
    """
    if not (math.isfinite(mean) and math.isfinite(std)) or std < 0:
        raise ArgumentError(f"无效的均值/标准差: mean={mean}, std={std}")
    if std == 0:
        raise DegenerateDistributionError("标准差为 0，自由度无定义", metadata={"mean": mean})
    if not (0.0 < mean < 1.0):
        raise DegenerateDistributionError(f"均值必须在 (0, 1) 内: {mean}", metadata={"std": std})
    dof_real = mean * (1.0 - mean) / (std * std)
    return dof_real, round_half_away(dof_real)


def reference_ratio(dof: float, reference: float = PHASE_CODE_DOF) -> float:
    """实测自由度相对于参考自由度（默认 244）的倍数。"""
    if reference <= 0:
        raise ArgumentError(f"reference 必须为正: {reference}")
    return dof / reference


__all__ = [
    "PHASE_CODE_DOF",
    "binomial_pmf",
    "binomial_pmf_all",
    "estimate_dof",
    "reference_ratio",
    "round_half_away",
]
