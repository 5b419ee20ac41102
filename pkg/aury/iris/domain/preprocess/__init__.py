"""预处理模块：图像选择、强度归一化和分辨率金字塔。"""

from .intensity import normalize_intensity
from .resample import COVERAGE_THRESHOLD, build_pyramid, downscale, keys_cubic, resample_weights
from .selection import SelectionItem, log_rejections, median_intensity, select_images, selection_report

__all__ = [
    "COVERAGE_THRESHOLD",
    "SelectionItem",
    "build_pyramid",
    "downscale",
    "keys_cubic",
    "log_rejections",
    "median_intensity",
    "normalize_intensity",
    "resample_weights",
    "select_images",
    "selection_report",
]
