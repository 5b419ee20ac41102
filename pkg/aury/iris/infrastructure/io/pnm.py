"""PGM (P5) 眼部图像与 PBM (P4) 掩码读写，基于 Pillow。

PBM 中黑色像素（位 1）表示遮挡，白色（位 0）表示有效；
Pillow 以 mode "1" 读取，白色为 True，因此 True 即有效。
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from aury.iris.domain.models import EyeImage, EyeSide, OcclusionMask

from .exceptions import FormatError


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """读取 PNM 文件头的前 count 个记号（跳过 # 注释），返回 (记号, 结束偏移)。"""
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < count:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise FormatError("PNM 文件头被截断", offset=pos)
        if data[pos : pos + 1] == b"#":
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def _open(path: Path, magic: bytes) -> Image.Image:
    head = path.read_bytes()[:512]
    if head[:2] != magic:
        raise FormatError(f"{path.name}: 魔数 {head[:2]!r}，期望 {magic!r}", offset=0)
    if magic == b"P5":
        tokens, _ = _header_tokens(head, 4)
        if tokens[3] != b"255":
            raise FormatError(f"{path.name}: PGM maxval 必须为 255，实际 {tokens[3].decode(errors='replace')}", offset=0)
    try:
        image = Image.open(path)
        image.load()
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise FormatError(f"{path.name}: 无法解析 PNM 数据: {exc}", cause=exc) from exc
    return image


def read_pgm(path: str | Path, image_id: str, subject_id: str, eye_side: EyeSide = EyeSide.UNKNOWN) -> EyeImage:
    """读取 8 位二进制 PGM（P5, maxval 255）。"""
    path = Path(path)
    image = _open(path, b"P5")
    if image.mode != "L":
        raise FormatError(f"{path.name}: 期望 8 位灰度，实际 mode={image.mode}")
    return EyeImage(
        image_id=image_id,
        subject_id=subject_id,
        intensities=np.asarray(image, dtype=np.uint8),
        eye_side=eye_side,
    )


def write_pgm(eye: EyeImage, path: str | Path) -> Path:
    path = Path(path)
    Image.fromarray(eye.intensities).save(path, format="PPM")
    return path


def read_pbm(path: str | Path) -> OcclusionMask:
    """读取二进制 PBM（P4）掩码，白色为有效。"""
    path = Path(path)
    image = _open(path, b"P4")
    if image.mode != "1":
        raise FormatError(f"{path.name}: 期望 1 位图像，实际 mode={image.mode}")
    return OcclusionMask(np.asarray(image, dtype=np.bool_))


def write_pbm(mask: OcclusionMask, path: str | Path) -> Path:
    path = Path(path)
    Image.fromarray(mask.valid).save(path, format="PPM")
    return path


__all__ = [
    "read_pbm",
    "read_pgm",
    "write_pbm",
    "write_pgm",
]
