"""Domain 层异常定义。

Domain 层异常，继承自 IrisError。
非致命情况（选择淘汰、重叠不足、空分辨率层）不在此定义，
它们以诊断记录的形式返回并写入日志。
"""

from __future__ import annotations

from aury.iris.common.exceptions import ExitCode, IrisError


class DomainError(IrisError):
    """Domain 层异常基类。"""

    pass


class ArgumentError(DomainError):
    """参数错误（尺寸不匹配、取值越界、配置不变量被破坏）。"""

    exit_code = ExitCode.USAGE


class SegmentationError(DomainError):
    """分割圆几何无效（射线与虹膜外圆无交点、瞳孔不在虹膜内等）。"""

    exit_code = ExitCode.DATA


class DegenerateImageError(DomainError):
    """图像退化：没有未遮挡像素，或未遮挡像素中位数为 0。

    Attributes:
        image_id: 出问题的图像 ID
    """

    exit_code = ExitCode.DATA

    def __init__(self, message: str, *args: object, image_id: str | None = None, **kwargs) -> None:
        super().__init__(message, *args, **kwargs)
        self.image_id = image_id

    def __str__(self) -> str:
        if self.image_id:
            return f"{self.message} (image_id={self.image_id})"
        return self.message


class DegenerateDistributionError(DomainError):
    """分布退化：标准差为 0 或均值落在 {0, 1}，自由度无定义。"""

    exit_code = ExitCode.DEGENERATE


__all__ = [
    "ArgumentError",
    "DegenerateDistributionError",
    "DegenerateImageError",
    "DomainError",
    "SegmentationError",
]
