"""命令行工具模块。

统一入口: aury-iris
"""

from __future__ import annotations


# 延迟导入 app、main，避免加载 scipy/matplotlib 等重型依赖
def __getattr__(name: str):
    if name in ("app", "main"):
        from .app import _get_app, main

        if name == "main":
            return main
        return _get_app()
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "app",
    "main",
]
