"""进程退出码定义。

命令行的退出码约定：
- 0: 成功
- 1: 用法错误（参数缺失、参数越界）
- 2: 数据/格式错误（文件损坏、清单非法、几何不合法、写入失败）
- 3: 统计退化（标准差为 0、均值为 0 或 1 等无法估计自由度的情况）
"""

from __future__ import annotations

from enum import IntEnum


class ExitCode(IntEnum):
    """aury-iris 命令行退出码。"""

    SUCCESS = 0
    USAGE = 1
    DATA = 2
    DEGENERATE = 3


__all__ = [
    "ExitCode",
]
