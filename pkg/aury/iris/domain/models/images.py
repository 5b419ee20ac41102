"""图像类领域模型。

眼部原图、分割圆、归一化虹膜和遮挡掩码。
数组持有者均为不可变 dataclass：构造后数组被设为只读，
因此同一个 NormalizedIris 可以安全地在多个比对线程间共享。
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from aury.iris.domain.exceptions import ArgumentError, SegmentationError

#: 全分辨率归一化网格（径向 × 角向）
BASE_ROWS = 128
BASE_COLS = 960


def _frozen_array(values: np.ndarray, dtype: type | np.dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True, order="C")
    arr.flags.writeable = False
    return arr


class EyeSide(str, Enum):
    """左右眼标记。"""

    LEFT = "left"
    RIGHT = "right"
    UNKNOWN = "unknown"

    @classmethod
    def parse(cls, value: str | None) -> EyeSide:
        """宽松解析（空值、未知值都视为 unknown）。"""
        if not value:
            return cls.UNKNOWN
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            return cls.UNKNOWN


@dataclass(frozen=True, eq=False)
class EyeImage:
    """8 位灰度眼部图像（行优先，height × width）。"""

    image_id: str
    subject_id: str
    intensities: np.ndarray
    eye_side: EyeSide = EyeSide.UNKNOWN

    def __post_init__(self) -> None:
        arr = np.asarray(self.intensities)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ArgumentError(
                "眼部图像必须是非空二维网格",
                metadata={"image_id": self.image_id, "shape": tuple(arr.shape)},
            )
        if arr.dtype != np.uint8:
            if np.any(arr < 0) or np.any(arr > 255):
                raise ArgumentError("眼部图像强度必须在 [0, 255]", metadata={"image_id": self.image_id})
        object.__setattr__(self, "intensities", _frozen_array(arr, np.uint8))

    @property
    def width(self) -> int:
        return int(self.intensities.shape[1])

    @property
    def height(self) -> int:
        return int(self.intensities.shape[0])


class IrisSegmentation(BaseModel):
    """瞳孔圆与虹膜外圆（源图像素坐标，允许亚像素）。

    不变量：瞳孔圆完全位于虹膜圆内部，
    即 |瞳孔中心 − 虹膜中心| + 瞳孔半径 < 虹膜半径。
    违反时抛出 SegmentationError。
    """

    model_config = ConfigDict(frozen=True)

    pupil_x: float = Field(description="瞳孔中心 x")
    pupil_y: float = Field(description="瞳孔中心 y")
    pupil_r: float = Field(description="瞳孔半径（像素）")
    iris_x: float = Field(description="虹膜中心 x")
    iris_y: float = Field(description="虹膜中心 y")
    iris_r: float = Field(description="虹膜半径（像素）")

    @model_validator(mode="after")
    def _check_geometry(self) -> IrisSegmentation:
        values = (self.pupil_x, self.pupil_y, self.pupil_r, self.iris_x, self.iris_y, self.iris_r)
        if not all(math.isfinite(v) for v in values):
            raise SegmentationError("分割参数必须是有限数", metadata=self.model_dump())
        if self.pupil_r <= 0 or self.iris_r <= 0:
            raise SegmentationError("瞳孔/虹膜半径必须大于 0", metadata=self.model_dump())
        if self.pupil_r >= self.iris_r:
            raise SegmentationError(
                f"瞳孔半径 {self.pupil_r} 必须小于虹膜半径 {self.iris_r}",
                metadata=self.model_dump(),
            )
        offset = math.hypot(self.pupil_x - self.iris_x, self.pupil_y - self.iris_y)
        if offset + self.pupil_r >= self.iris_r:
            raise SegmentationError("瞳孔圆未完全位于虹膜圆内", metadata=self.model_dump())
        return self

    @classmethod
    def concentric(cls, x: float, y: float, pupil_r: float, iris_r: float) -> IrisSegmentation:
        """同心圆分割的便捷构造。"""
        return cls(pupil_x=x, pupil_y=y, pupil_r=pupil_r, iris_x=x, iris_y=y, iris_r=iris_r)


@dataclass(frozen=True, eq=False)
class OcclusionMask:
    """遮挡掩码，True 表示可用虹膜像素。"""

    valid: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.valid)
        if arr.ndim != 2:
            raise ArgumentError("掩码必须是二维网格", metadata={"shape": tuple(arr.shape)})
        object.__setattr__(self, "valid", _frozen_array(arr, np.bool_))

    @property
    def rows(self) -> int:
        return int(self.valid.shape[0])

    @property
    def cols(self) -> int:
        return int(self.valid.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def all_valid(cls, rows: int, cols: int) -> OcclusionMask:
        return cls(np.ones((rows, cols), dtype=np.bool_))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OcclusionMask):
            return NotImplemented
        return bool(np.array_equal(self.valid, other.valid))

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class NormalizedIris:
    """归一化虹膜：极坐标展开后的矩形强度网格。

    第 0 行对应瞳孔边界，最后一行对应虹膜外缘；
    第 0 列与最后一列在角向相邻（角向周期）。
    强度以单位刻度（8 位值 v 对应 v/255）存储为 float64，
    强度归一化之后允许大于 1.0。
    """

    intensities: np.ndarray
    mask: np.ndarray
    image_id: str
    subject_id: str
    scale: float = 1.0
    intensity_scale: float = 1.0

    def __post_init__(self) -> None:
        values = np.asarray(self.intensities, dtype=np.float64)
        mask = np.asarray(self.mask)
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise ArgumentError(
                "归一化虹膜必须是非空二维网格",
                metadata={"image_id": self.image_id, "shape": tuple(values.shape)},
            )
        if mask.shape != values.shape:
            raise ArgumentError(
                "掩码尺寸与强度网格不一致",
                metadata={"image_id": self.image_id, "mask": tuple(mask.shape), "intensities": tuple(values.shape)},
            )
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ArgumentError("归一化强度必须是非负有限数", metadata={"image_id": self.image_id})
        if not (0.0 < self.scale <= 1.0):
            raise ArgumentError(f"scale 必须在 (0, 1] 内: {self.scale}", metadata={"image_id": self.image_id})
        if not (self.intensity_scale > 0 and math.isfinite(self.intensity_scale)):
            raise ArgumentError(
                f"intensity_scale 必须为正: {self.intensity_scale}", metadata={"image_id": self.image_id}
            )
        object.__setattr__(self, "intensities", _frozen_array(values, np.float64))
        object.__setattr__(self, "mask", _frozen_array(mask, np.bool_))

    @property
    def rows(self) -> int:
        return int(self.intensities.shape[0])

    @property
    def cols(self) -> int:
        return int(self.intensities.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def valid_count(self) -> int:
        return int(np.count_nonzero(self.mask))

    def unmasked(self) -> np.ndarray:
        """未遮挡像素的强度（一维）。"""
        return self.intensities[self.mask]

    def occlusion(self) -> OcclusionMask:
        return OcclusionMask(self.mask)

    def evolve(self, **changes: object) -> NormalizedIris:
        """返回修改了部分字段的新实例。"""
        return replace(self, **changes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalizedIris):
            return NotImplemented
        return (
            self.image_id == other.image_id
            and self.subject_id == other.subject_id
            and self.scale == other.scale
            and self.intensity_scale == other.intensity_scale
            and np.array_equal(self.intensities, other.intensities)
            and np.array_equal(self.mask, other.mask)
        )

    __hash__ = None  # type: ignore[assignment]


__all__ = [
    "BASE_COLS",
    "BASE_ROWS",
    "EyeImage",
    "EyeSide",
    "IrisSegmentation",
    "NormalizedIris",
    "OcclusionMask",
]
