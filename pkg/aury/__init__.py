"""Aury 命名空间包（pkgutil namespace）。

`aury` 顶层命名空间由多个分发包共同提供（例如 `aury-iris`）。
使用 `pkgutil.extend_path` 将其声明为 pkgutil 命名空间包，
保证其它 sys.path 上的 `aury.*` 子包仍然可以被发现。
"""

from pkgutil import extend_path

__path__ = extend_path(__path__, __name__)
