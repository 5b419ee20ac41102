"""测试支持模块。

提供测试数据工厂（眼部图像、分割参数、归一化虹膜、数据集清单）。

注意：此模块需要 pytest 作为依赖，仅在开发环境可用。
"""

# 检查 pytest 是否可用，如果不可用则让导入失败（由外层捕获）
try:
    import pytest
except ImportError:
    raise ImportError("testing 模块需要 pytest，仅在开发环境可用")

from .factory import IrisFactory

__all__ = [
    "IrisFactory",
]
