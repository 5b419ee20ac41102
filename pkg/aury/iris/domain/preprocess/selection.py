"""图像选择：未遮挡像素中位数下限 + 瞳孔半径上限（均为闭区间）。"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from aury.iris.common.logging import logger
from aury.iris.domain.models import (
    IrisSegmentation,
    NormalizedIris,
    RejectionReason,
    SelectionCriteria,
    SelectionRejection,
)

# 0–255 刻度上比较时容忍 v/255·255 的舍入误差
_MEDIAN_EPS = 1e-9

type SelectionItem = tuple[NormalizedIris, IrisSegmentation]


def median_intensity(nir: NormalizedIris) -> float | None:
    """未遮挡像素强度中位数（0–255 刻度）；偶数个取中间两数的均值。"""
    values = nir.unmasked()
    if values.size == 0:
        return None
    return float(np.median(values)) * 255.0


def _judge(item: SelectionItem, criteria: SelectionCriteria) -> SelectionRejection | None:
    nir, seg = item
    median = median_intensity(nir)
    if median is None:
        return SelectionRejection(nir.image_id, None, seg.pupil_r, RejectionReason.EMPTY)
    if median + _MEDIAN_EPS < criteria.min_median_intensity:
        return SelectionRejection(nir.image_id, median, seg.pupil_r, RejectionReason.DARK)
    if seg.pupil_r > criteria.max_pupil_radius:
        return SelectionRejection(nir.image_id, median, seg.pupil_r, RejectionReason.PUPIL)
    return None


def selection_report(
    items: Sequence[SelectionItem],
    criteria: SelectionCriteria,
) -> tuple[list[SelectionItem], list[SelectionRejection]]:
    """返回 (接受项, 淘汰诊断)，接受项保持输入顺序。"""
    accepted: list[SelectionItem] = []
    rejected: list[SelectionRejection] = []
    for item in items:
        verdict = _judge(item, criteria)
        if verdict is None:
            accepted.append(item)
        else:
            rejected.append(verdict)
    return accepted, rejected


def log_rejections(rejected: Sequence[SelectionRejection], accepted: int, total: int) -> None:
    for rej in rejected:
        median = "n/a" if rej.median is None else f"{rej.median:.1f}"
        logger.bind(rejected=True).info(
            f"淘汰 {rej.image_id}: reason={rej.reason.value}, median={median}, pupil_r={rej.pupil_radius}"
        )
    logger.info(f"图像选择: 接受 {accepted} / {total}")


def select_images(items: Sequence[SelectionItem], criteria: SelectionCriteria) -> list[SelectionItem]:
    """按选择条件过滤，淘汰项只写日志，不抛异常。"""
    accepted, rejected = selection_report(items, criteria)
    log_rejections(rejected, len(accepted), len(items))
    return accepted


__all__ = [
    "SelectionItem",
    "log_rejections",
    "median_intensity",
    "select_images",
    "selection_report",
]
