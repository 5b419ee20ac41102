"""文件格式与清单相关异常定义。

Infrastructure 层异常，继承自 IrisError，退出码均为 2（数据/格式错误）。
"""

from __future__ import annotations

from typing import Any

from aury.iris.common.exceptions import ExitCode, IrisError


class IOLayerError(IrisError):
    """文件读写相关错误基类。"""

    exit_code = ExitCode.DATA


class FormatError(IOLayerError):
    """二进制格式错误（魔数、截断、尺寸溢出等）。

    Attributes:
        offset: 出错位置的字节偏移
    """

    def __init__(self, message: str, *args: object, offset: int | None = None, **kwargs: Any) -> None:
        super().__init__(message, *args, **kwargs)
        self.offset = offset

    def __str__(self) -> str:
        if self.offset is not None:
            return f"{self.message} (offset={self.offset})"
        return self.message


class ManifestError(IOLayerError):
    """数据集清单错误。

    Attributes:
        row: 出错的数据行号（从 1 开始，不含表头）
        column: 出错的列名
    """

    def __init__(
        self,
        message: str,
        *args: object,
        row: int | None = None,
        column: str | None = None,
        **kwargs: Any,
    ) -> None:
        super().__init__(message, *args, **kwargs)
        self.row = row
        self.column = column

    def __str__(self) -> str:
        where = []
        if self.row is not None:
            where.append(f"row={self.row}")
        if self.column is not None:
            where.append(f"column={self.column}")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class EmissionError(IOLayerError):
    """结果文件写出失败。"""

    pass


__all__ = [
    "EmissionError",
    "FormatError",
    "IOLayerError",
    "ManifestError",
]
