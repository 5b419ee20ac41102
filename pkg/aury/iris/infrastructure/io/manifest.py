"""数据集清单（CSV）解析与写出。

列：image_id, subject_id, eye_side, image_path, pupil_x, pupil_y, pupil_r,
iris_x, iris_y, iris_r, mask_path（可选）。
相对路径以清单所在目录为基准；行号从 1 开始，不含表头。
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
import math
from pathlib import Path

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from aury.iris.common.logging import logger
from aury.iris.domain.exceptions import SegmentationError
from aury.iris.domain.models import EyeSide, IrisSegmentation

from .exceptions import ManifestError

REQUIRED_COLUMNS = (
    "image_id",
    "subject_id",
    "eye_side",
    "image_path",
    "pupil_x",
    "pupil_y",
    "pupil_r",
    "iris_x",
    "iris_y",
    "iris_r",
)
OPTIONAL_COLUMNS = ("mask_path",)
_NUMERIC = ("pupil_x", "pupil_y", "pupil_r", "iris_x", "iris_y", "iris_r")


class ManifestEntry(BaseModel):
    """清单中的一行。"""

    model_config = ConfigDict(frozen=True)

    image_id: str = Field(description="图像 ID（唯一）")
    subject_id: str = Field(description="个体 ID")
    eye_side: EyeSide = Field(default=EyeSide.UNKNOWN)
    image_path: Path = Field(description="PGM 眼部图像路径（绝对）")
    segmentation: IrisSegmentation
    mask_path: Path | None = Field(default=None, description="可选 PBM 掩码路径（绝对）")


@dataclass
class DatasetManifest:
    """解析后的数据集清单。"""

    path: Path
    entries: list[ManifestEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ManifestEntry]:
        return iter(self.entries)


def _resolve(base: Path, value: str) -> Path:
    p = Path(value)
    return p if p.is_absolute() else base / p


def _parse_row(row: pd.Series, row_no: int, base: Path) -> ManifestEntry:
    numbers: dict[str, float] = {}
    for column in _NUMERIC:
        text = str(row[column]).strip()
        try:
            value = float(text)
        except ValueError:
            raise ManifestError(f"非数值字段: {text!r}", row=row_no, column=column) from None
        if not math.isfinite(value):
            raise ManifestError(f"字段必须是有限数: {text!r}", row=row_no, column=column)
        numbers[column] = value

    image_id = str(row["image_id"]).strip()
    if not image_id:
        raise ManifestError("image_id 为空", row=row_no, column="image_id")

    try:
        seg = IrisSegmentation(**numbers)
    except SegmentationError as exc:
        raise ManifestError(f"分割参数无效: {exc.message}", row=row_no, column="pupil_r", cause=exc) from exc

    image_path = _resolve(base, str(row["image_path"]).strip())
    if not image_path.is_file():
        raise ManifestError(f"图像文件不存在: {image_path}", row=row_no, column="image_path")

    mask_text = str(row.get("mask_path", "") or "").strip()
    mask_path = _resolve(base, mask_text) if mask_text else None
    if mask_path is not None and not mask_path.is_file():
        raise ManifestError(f"掩码文件不存在: {mask_path}", row=row_no, column="mask_path")

    return ManifestEntry(
        image_id=image_id,
        subject_id=str(row["subject_id"]).strip(),
        eye_side=EyeSide.parse(str(row["eye_side"])),
        image_path=image_path,
        segmentation=seg,
        mask_path=mask_path,
    )


def parse_manifest(path: str | Path) -> DatasetManifest:
    """解析清单：校验表头、逐行校验分割不变量和文件存在性、检查 image_id 唯一。"""
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except FileNotFoundError as exc:
        raise ManifestError(f"清单文件不存在: {path}", cause=exc) from exc
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise ManifestError(f"清单无法解析: {exc}", cause=exc) from exc

    frame.columns = [str(c).strip() for c in frame.columns]
    missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
    if missing:
        raise ManifestError(f"缺少列: {', '.join(missing)}", row=0, column=missing[0])

    base = path.parent
    manifest = DatasetManifest(path=path)
    seen: dict[str, int] = {}
    for offset, (_, row) in enumerate(frame.iterrows()):
        row_no = offset + 1
        entry = _parse_row(row, row_no, base)
        if entry.image_id in seen:
            raise ManifestError(
                f"image_id 重复: {entry.image_id}（首次出现于第 {seen[entry.image_id]} 行）",
                row=row_no,
                column="image_id",
            )
        seen[entry.image_id] = row_no
        manifest.entries.append(entry)

    logger.info(f"清单 {path.name}: {len(manifest)} 条记录")
    return manifest


def write_manifest(entries: Sequence[ManifestEntry], path: str | Path) -> Path:
    """写出清单，路径相对于清单所在目录（无法相对化时保留绝对路径）。"""
    path = Path(path)
    base = path.parent.resolve()

    def rel(p: Path | None) -> str:
        if p is None:
            return ""
        try:
            return str(p.resolve().relative_to(base))
        except ValueError:
            return str(p)

    frame = pd.DataFrame(
        [
            {
                "image_id": e.image_id,
                "subject_id": e.subject_id,
                "eye_side": e.eye_side.value,
                "image_path": rel(e.image_path),
                "pupil_x": e.segmentation.pupil_x,
                "pupil_y": e.segmentation.pupil_y,
                "pupil_r": e.segmentation.pupil_r,
                "iris_x": e.segmentation.iris_x,
                "iris_y": e.segmentation.iris_y,
                "iris_r": e.segmentation.iris_r,
                "mask_path": rel(e.mask_path),
            }
            for e in entries
        ],
        columns=[*REQUIRED_COLUMNS, *OPTIONAL_COLUMNS],
    )
    frame.to_csv(path, index=False, lineterminator="\n", float_format="%.9g")
    return path


__all__ = [
    "OPTIONAL_COLUMNS",
    "REQUIRED_COLUMNS",
    "DatasetManifest",
    "ManifestEntry",
    "parse_manifest",
    "write_manifest",
]
