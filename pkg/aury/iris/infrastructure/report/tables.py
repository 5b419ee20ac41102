"""结果 CSV 读写（pandas）。

所有浮点数以 9 位有效数字输出，换行固定为 "\\n"，
同样的输入总是得到逐字节相同的文件。
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pandas as pd

from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import Histogram, PairResult, SelectionRejection, SweepRow

from ..io.exceptions import EmissionError, FormatError

FLOAT_FORMAT = "%.9g"

PAIRS_COLUMNS = ("id_a", "id_b", "overlap", "mismatches", "hamming")
STATS_COLUMNS = ("scale", "rows", "cols", "n_pairs", "mean", "std", "dof_real", "dof")
HISTOGRAM_COLUMNS = ("bin_left", "count", "overlay_mass")
REJECTION_COLUMNS = ("image_id", "reason", "median", "pupil_r")


def _write(frame: pd.DataFrame, path: Path) -> Path:
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="")
    except OSError as exc:
        raise EmissionError(f"无法写出 {path}: {exc}", metadata={"path": str(path)}, cause=exc) from exc
    return path


def _read(path: Path, columns: Sequence[str], dtype: dict[str, type] | None = None) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, dtype=dtype, keep_default_na=False, na_values=[""])
    except FileNotFoundError as exc:
        raise FormatError(f"文件不存在: {path}", cause=exc) from exc
    except (pd.errors.ParserError, pd.errors.EmptyDataError, ValueError) as exc:
        raise FormatError(f"{path.name}: 无法解析 CSV: {exc}", cause=exc) from exc
    missing = [c for c in columns if c not in frame.columns]
    if missing:
        raise FormatError(f"{path.name}: 缺少列 {', '.join(missing)}", metadata={"path": str(path)})
    return frame


def write_pairs_csv(pairs: Sequence[PairResult], path: str | Path) -> Path:
    frame = pd.DataFrame(
        {
            "id_a": [p.id_a for p in pairs],
            "id_b": [p.id_b for p in pairs],
            "overlap": np.fromiter((p.overlap for p in pairs), dtype=np.int64, count=len(pairs)),
            "mismatches": np.fromiter((p.mismatches for p in pairs), dtype=np.int64, count=len(pairs)),
            "hamming": np.fromiter((p.hamming for p in pairs), dtype=np.float64, count=len(pairs)),
        },
        columns=list(PAIRS_COLUMNS),
    )
    return _write(frame, Path(path))


def read_pairs_csv(path: str | Path) -> list[PairResult]:
    """读取 pairs.csv；hamming 列由 overlap/mismatches 重新计算。"""
    path = Path(path)
    frame = _read(path, PAIRS_COLUMNS, dtype={"id_a": str, "id_b": str})
    try:
        return [
            PairResult(str(a), str(b), int(o), int(m))
            for a, b, o, m in zip(frame["id_a"], frame["id_b"], frame["overlap"], frame["mismatches"], strict=True)
        ]
    except (ArgumentError, ValueError, TypeError) as exc:
        raise FormatError(f"{path.name}: 比对记录无效: {exc}", cause=exc) from exc


def write_stats_csv(rows: Sequence[SweepRow], path: str | Path) -> Path:
    frame = pd.DataFrame(
        {
            "scale": pd.array([np.nan if r.scale is None else r.scale for r in rows], dtype="float64"),
            "rows": pd.array([r.rows for r in rows], dtype="Int64"),
            "cols": pd.array([r.cols for r in rows], dtype="Int64"),
            "n_pairs": pd.array([r.n_pairs for r in rows], dtype="Int64"),
            "mean": pd.array([r.mean for r in rows], dtype="float64"),
            "std": pd.array([r.std for r in rows], dtype="float64"),
            "dof_real": pd.array([np.nan if r.dof_real is None else r.dof_real for r in rows], dtype="float64"),
            "dof": pd.array([r.dof for r in rows], dtype="Int64"),
        },
        columns=list(STATS_COLUMNS),
    )
    return _write(frame, Path(path))


def read_stats_csv(path: str | Path) -> list[SweepRow]:
    path = Path(path)
    frame = _read(path, STATS_COLUMNS)

    def opt_float(v: object) -> float | None:
        return None if pd.isna(v) else float(v)  # type: ignore[arg-type]

    def opt_int(v: object) -> int | None:
        return None if pd.isna(v) else int(v)  # type: ignore[call-overload]

    return [
        SweepRow(
            scale=opt_float(r.scale),
            rows=opt_int(r.rows),
            cols=opt_int(r.cols),
            n_pairs=int(r.n_pairs),
            mean=float(r.mean),
            std=float(r.std),
            dof_real=opt_float(r.dof_real),
            dof=opt_int(r.dof),
        )
        for r in frame.itertuples(index=False)
    ]


def write_histogram_csv(hist: Histogram, path: str | Path) -> Path:
    frame = pd.DataFrame(
        {
            "bin_left": hist.bin_left,
            "count": hist.counts.astype(np.int64),
            "overlay_mass": hist.overlay_binned,
        },
        columns=list(HISTOGRAM_COLUMNS),
    )
    return _write(frame, Path(path))


def write_rejections_csv(rejections: Sequence[SelectionRejection], path: str | Path) -> Path:
    """选择淘汰诊断（median 为 0–255 刻度，无有效像素时为空）。"""
    frame = pd.DataFrame(
        {
            "image_id": [r.image_id for r in rejections],
            "reason": [r.reason.value for r in rejections],
            "median": pd.array([np.nan if r.median is None else r.median for r in rejections], dtype="float64"),
            "pupil_r": pd.array([r.pupil_radius for r in rejections], dtype="float64"),
        },
        columns=list(REJECTION_COLUMNS),
    )
    return _write(frame, Path(path))


def read_moments_table(path: str | Path) -> pd.DataFrame:
    """读取 (mean, std[, scale | scale_pct]) 表，供 dof-check 使用。

    scale 为比例 (0, 1]，scale_pct 为百分数 (0, 100]，两列最多出现一列。
    """
    path = Path(path)
    frame = _read(path, ("mean", "std"))
    if "scale" in frame.columns and "scale_pct" in frame.columns:
        raise FormatError(f"{path.name}: scale 与 scale_pct 只能出现一列", metadata={"path": str(path)})
    for column in ("mean", "std", "scale", "scale_pct"):
        if column in frame.columns and not pd.api.types.is_numeric_dtype(frame[column]):
            raise FormatError(f"{path.name}: 列 {column} 必须是数值", metadata={"column": column})
    return frame


__all__ = [
    "FLOAT_FORMAT",
    "HISTOGRAM_COLUMNS",
    "PAIRS_COLUMNS",
    "REJECTION_COLUMNS",
    "STATS_COLUMNS",
    "read_moments_table",
    "read_pairs_csv",
    "read_stats_csv",
    "write_histogram_csv",
    "write_pairs_csv",
    "write_rejections_csv",
    "write_stats_csv",
]
