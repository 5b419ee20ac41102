"""基础异常定义。

Common 层是最底层，不依赖任何其它层。
所有 aury-iris 异常都继承 IrisError，并携带命令行退出码。
"""

from __future__ import annotations

from typing import Any, ClassVar

from .codes import ExitCode


class IrisError(Exception):
    """异常体系根类。

    提供可选的元数据和原因链支持，方便调试和异常包装。
    `exit_code` 由子类覆盖，命令行层据此决定进程退出码
    （1 用法错误、2 数据/格式错误、3 统计退化）。

    Attributes:
        message: 错误消息
        metadata: 可选的元数据字典，用于存储额外的上下文信息
        cause: 可选的原始异常，用于异常链

    使用示例:
        raise IrisError("读取失败", metadata={"path": "a.nir"})

        try:
            parse(data)
        except ValueError as e:
            raise IrisError("解析失败", cause=e) from e
    """

    exit_code: ClassVar[ExitCode] = ExitCode.DATA

    def __init__(
        self,
        message: str,
        *args: object,
        metadata: dict[str, Any] | None = None,
        cause: Exception | None = None,
    ) -> None:
        self.message = message
        self.metadata = metadata or {}
        self.cause = cause

        super().__init__(message, *args)

        if cause is not None:
            self.__cause__ = cause

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        parts = [f"{self.__class__.__name__}(message={self.message!r}"]
        if self.metadata:
            parts.append(f", metadata={self.metadata}")
        if self.cause:
            parts.append(f", cause={self.cause.__class__.__name__}")
        parts.append(")")
        return "".join(parts)

    def with_metadata(self, **kwargs: Any) -> IrisError:
        """添加或更新元数据（链式调用）。

        使用示例:
            raise IrisError("比对失败").with_metadata(id_a="a", id_b="b")
        """
        self.metadata.update(kwargs)
        return self


__all__ = [
    "ExitCode",
    "IrisError",
]
