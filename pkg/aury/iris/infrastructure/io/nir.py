"""NIR1 归一化虹膜容器。

布局（全部小端）：
    0   4B   魔数 "NIR1"
    4   u32  rows
    8   u32  cols
    12  f32  scale
    16  f32  intensity_scale
    20  16B  image_id（UTF-8，零填充，超长按字符边界截断）
    36  16B  subject_id
    52  f32 × rows·cols  强度（行优先，第 0 行为瞳孔边界）
    ..  u8  × rows·cols  掩码（1 有效，0 遮挡）

强度以单精度存储、双精度计算；单精度可表示的值往返逐位一致。
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

import numpy as np

from aury.iris.common.logging import logger
from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import NormalizedIris

from .exceptions import FormatError

MAGIC = b"NIR1"
ID_BYTES = 16
SUFFIX = ".nir"
# 单个文件的像素数上限（2³¹ 个像素）
MAX_CELLS = 1 << 31

HEADER = np.dtype(
    [
        ("magic", "S4"),
        ("rows", "<u4"),
        ("cols", "<u4"),
        ("scale", "<f4"),
        ("intensity_scale", "<f4"),
        ("image_id", f"S{ID_BYTES}"),
        ("subject_id", f"S{ID_BYTES}"),
    ]
)
HEADER_SIZE = HEADER.itemsize


def _encode_id(value: str, field: str) -> bytes:
    raw = value.encode("utf-8")
    if len(raw) <= ID_BYTES:
        return raw
    truncated = raw[:ID_BYTES].decode("utf-8", errors="ignore").encode("utf-8")
    logger.warning(f"{field} 超过 {ID_BYTES} 字节，已截断: {value!r} -> {truncated.decode('utf-8')!r}")
    return truncated


def encode_nir(nir: NormalizedIris) -> bytes:
    header = np.zeros(1, dtype=HEADER)
    header["magic"] = MAGIC
    header["rows"] = nir.rows
    header["cols"] = nir.cols
    header["scale"] = nir.scale
    header["intensity_scale"] = nir.intensity_scale
    header["image_id"] = _encode_id(nir.image_id, "image_id")
    header["subject_id"] = _encode_id(nir.subject_id, "subject_id")
    return b"".join(
        (
            header.tobytes(),
            nir.intensities.astype("<f4").tobytes(order="C"),
            nir.mask.astype(np.uint8).tobytes(order="C"),
        )
    )


def decode_nir(data: bytes) -> NormalizedIris:
    if len(data) < HEADER_SIZE:
        raise FormatError(f"文件头被截断: 需要 {HEADER_SIZE} 字节，实际 {len(data)} 字节", offset=len(data))
    header = np.frombuffer(data, dtype=HEADER, count=1)[0]
    if bytes(header["magic"]) != MAGIC:
        raise FormatError(f"魔数错误: {bytes(header['magic'])!r}，期望 {MAGIC!r}", offset=0)

    rows = int(header["rows"])
    cols = int(header["cols"])
    cells = rows * cols
    if rows < 1 or cols < 1 or cells > MAX_CELLS:
        raise FormatError(f"尺寸无效或溢出: {rows}×{cols}", offset=4)

    values_end = HEADER_SIZE + 4 * cells
    mask_end = values_end + cells
    if len(data) < values_end:
        raise FormatError(
            f"强度段被截断: 需要 {4 * cells} 字节，实际 {len(data) - HEADER_SIZE} 字节",
            offset=HEADER_SIZE,
        )
    if len(data) < mask_end:
        raise FormatError(
            f"掩码段被截断: 需要 {cells} 字节，实际 {len(data) - values_end} 字节",
            offset=values_end,
        )
    if len(data) > mask_end:
        raise FormatError(f"文件尾部有 {len(data) - mask_end} 字节多余数据", offset=mask_end)

    values = np.frombuffer(data, dtype="<f4", count=cells, offset=HEADER_SIZE).reshape(rows, cols)
    raw_mask = np.frombuffer(data, dtype=np.uint8, count=cells, offset=values_end)
    bad = np.flatnonzero(raw_mask > 1)
    if bad.size:
        raise FormatError(f"掩码字节只能是 0 或 1，实际 {int(raw_mask[bad[0]])}", offset=values_end + int(bad[0]))

    try:
        return NormalizedIris(
            intensities=values.astype(np.float64),
            mask=raw_mask.reshape(rows, cols).astype(np.bool_),
            image_id=bytes(header["image_id"]).decode("utf-8"),
            subject_id=bytes(header["subject_id"]).decode("utf-8"),
            scale=float(header["scale"]),
            intensity_scale=float(header["intensity_scale"]),
        )
    except (ArgumentError, UnicodeDecodeError) as exc:
        raise FormatError(f"NIR1 内容无效: {exc}", offset=HEADER_SIZE, cause=exc) from exc


def save_nir(nir: NormalizedIris, path: str | Path) -> Path:
    path = Path(path)
    path.write_bytes(encode_nir(nir))
    return path


def load_nir(path: str | Path) -> NormalizedIris:
    path = Path(path)
    try:
        return decode_nir(path.read_bytes())
    except FormatError as exc:
        raise exc.with_metadata(path=str(path))


def nir_filename(image_id: str) -> str:
    """由图像 ID 得到文件名（路径分隔符替换为下划线）。"""
    return image_id.replace("/", "_").replace("\\", "_") + SUFFIX


def save_set(images: Iterable[NormalizedIris], directory: str | Path) -> list[Path]:
    """把图像集写入目录，每幅一个 {image_id}.nir。"""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [save_nir(nir, directory / nir_filename(nir.image_id)) for nir in images]


def load_set(directory: str | Path) -> list[NormalizedIris]:
    """读取目录下全部 .nir 文件（按文件名排序）。"""
    directory = Path(directory)
    if not directory.is_dir():
        raise FormatError(f"输入目录不存在: {directory}")
    paths = sorted(directory.glob(f"*{SUFFIX}"))
    images = [load_nir(p) for p in paths]
    logger.info(f"从 {directory} 读取 {len(images)} 幅归一化虹膜")
    return images


__all__ = [
    "HEADER",
    "HEADER_SIZE",
    "MAGIC",
    "decode_nir",
    "encode_nir",
    "load_nir",
    "load_set",
    "nir_filename",
    "save_nir",
    "save_set",
]
