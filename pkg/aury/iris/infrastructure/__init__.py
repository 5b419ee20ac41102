"""Infrastructure 层模块。

- io：NIR1 / PGM / PBM / 清单
- report：CSV 与 SVG 输出
"""

from . import io, report
from .io import FormatError, ManifestError
from .report import emit_results

__all__ = [
    "FormatError",
    "ManifestError",
    "emit_results",
    "io",
    "report",
]
