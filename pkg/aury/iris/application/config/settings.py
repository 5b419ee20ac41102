"""运行配置。

使用 pydantic-settings 分节管理配置，初始化时先加载 .env（环境变量优先）。

环境变量格式：使用双下划线 (__) 作为层级分隔符
    LOG__LEVEL=DEBUG
    COMPARE__TOLERANCE=0.00196
    SWEEP__SCALES=1.0,0.5,0.3,0.1
    RUNTIME__THREADS=0
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Annotated, Any

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, NoDecode, SettingsConfigDict

from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import (
    BASE_COLS,
    BASE_ROWS,
    DEFAULT_TOLERANCE,
    CompareConfig,
    ResolutionLevel,
    SelectionCriteria,
)

#: 默认分辨率层（100% 到 5%）
DEFAULT_SCALES: tuple[float, ...] = (1.0, 0.8, 0.5, 0.4, 0.3, 0.2, 0.1, 0.05)


def _load_env_file(env_file: str | Path, override: bool = False) -> bool:
    return load_dotenv(env_file, override=override)


def parse_scales(value: object) -> list[float]:
    """解析 scale 列表：JSON 数组、逗号分隔字符串或序列。"""
    if value is None or value == "":
        return list(DEFAULT_SCALES)
    if isinstance(value, str):
        text = value.strip()
        if text.startswith("["):
            try:
                parsed: Any = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ArgumentError(f"scale 列表不是合法 JSON: {text}") from exc
        else:
            parsed = [item for item in text.replace(" ", "").split(",") if item]
    elif isinstance(value, (list, tuple)):
        parsed = value
    else:
        raise ArgumentError(f"无法解析 scale 列表: {value!r}")
    try:
        return [float(item) for item in parsed]
    except (TypeError, ValueError) as exc:
        raise ArgumentError(f"scale 必须是数值: {parsed!r}") from exc


def check_scales(scales: list[float]) -> list[float]:
    """scale ∈ (0, 1]，严格降序，不重复。"""
    if not scales:
        raise ArgumentError("scale 列表不能为空")
    for s in scales:
        if not (math.isfinite(s) and 0.0 < s <= 1.0):
            raise ArgumentError(f"scale 必须在 (0, 1] 内: {s}")
    for prev, cur in zip(scales, scales[1:], strict=False):
        if not cur < prev:
            raise ArgumentError(f"scale 必须严格降序且不重复: {scales}")
    return scales


class LogSettings(BaseModel):
    """日志配置。

    环境变量格式: LOG__{FIELD}
    """

    level: str = Field(default="INFO", description="日志级别 (DEBUG/INFO/WARNING/ERROR)")
    dir: str | None = Field(default=None, description="日志文件目录（启用文件日志时默认 ./log）")
    enable_file: bool = Field(default=False, description="是否写日志文件")
    enable_console: bool = Field(default=True, description="是否输出日志到 stderr")
    rotation_size: str = Field(default="50 MB", description="日志文件轮转大小")
    retention_days: int = Field(default=7, description="日志文件保留天数")


class SelectionSettings(BaseModel):
    """图像选择配置。

    环境变量格式: SELECTION__{FIELD}
    """

    min_median_intensity: float = Field(default=70.0, description="未遮挡像素中位数下限（0–255）")
    max_pupil_radius: float = Field(default=52.0, description="瞳孔半径上限（像素）")


class CompareSettings(BaseModel):
    """比对配置。

    环境变量格式: COMPARE__{FIELD}
    """

    tolerance: float = Field(default=DEFAULT_TOLERANCE, description="像素匹配容差（单位刻度）")
    exclude_same_subject: bool = Field(default=True, description="跳过同一个体的图像对")
    min_overlap: int = Field(default=1, description="最小共同有效像素数")


class SweepSettings(BaseModel):
    """分辨率扫描配置。

    环境变量格式: SWEEP__{FIELD}
    SWEEP__SCALES 支持 JSON 数组或逗号分隔
    """

    scales: Annotated[list[float], NoDecode] = Field(
        default_factory=lambda: list(DEFAULT_SCALES),
        description="分辨率层（严格降序，(0, 1]）",
    )
    base_rows: int = Field(default=BASE_ROWS, description="全分辨率径向行数")
    base_cols: int = Field(default=BASE_COLS, description="全分辨率角向列数")

    @field_validator("scales", mode="before")
    @classmethod
    def _parse_scales(cls, value: object) -> list[float]:
        return parse_scales(value)


class RuntimeSettings(BaseModel):
    """运行时配置。

    环境变量格式: RUNTIME__{FIELD}
    """

    threads: int = Field(default=1, description="工作线程数（0 = CPU 核数）")
    output_dir: Path = Field(default=Path("out"), description="结果输出目录")
    seed: int = Field(default=0, description="合成数据随机种子")


class NormalizeSettings(BaseModel):
    """展开与遮挡配置。

    环境变量格式: NORMALIZE__{FIELD}
    """

    specular_threshold: int = Field(default=250, description="镜面反射灰度阈值（0–255）")
    specular_dilation: int = Field(default=2, description="镜面反射掩码膨胀半径（网格单元）")


class IrisSettings(BaseSettings):
    """aury-iris 配置。

    初始化时自动从 .env 文件加载环境变量，然后由 pydantic-settings 读取。
    """

    def __init__(self, _env_file: str | Path = ".env", _env_file_override: bool = False, **kwargs: Any) -> None:
        _load_env_file(_env_file, override=_env_file_override)
        super().__init__(**kwargs)

    log: LogSettings = Field(default_factory=LogSettings)
    selection: SelectionSettings = Field(default_factory=SelectionSettings)
    compare: CompareSettings = Field(default_factory=CompareSettings)
    sweep: SweepSettings = Field(default_factory=SweepSettings)
    runtime: RuntimeSettings = Field(default_factory=RuntimeSettings)
    normalize: NormalizeSettings = Field(default_factory=NormalizeSettings)

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
        env_nested_delimiter="__",
    )

    def run_config(self, **overrides: Any) -> RunConfig:
        """由配置 + 命令行覆盖项组装 RunConfig（值为 None 的覆盖项忽略）。"""
        given = {k: v for k, v in overrides.items() if v is not None}
        compare = CompareConfig(
            tolerance=given.pop("tolerance", self.compare.tolerance),
            exclude_same_subject=given.pop("exclude_same_subject", self.compare.exclude_same_subject),
            min_overlap=given.pop("min_overlap", self.compare.min_overlap),
        )
        criteria = SelectionCriteria(
            min_median_intensity=self.selection.min_median_intensity,
            max_pupil_radius=self.selection.max_pupil_radius,
        )
        return RunConfig(
            criteria=criteria,
            compare=compare,
            scales=parse_scales(given.pop("scales", self.sweep.scales)),
            base_rows=self.sweep.base_rows,
            base_cols=self.sweep.base_cols,
            output_dir=Path(given.pop("output_dir", self.runtime.output_dir)),
            seed=given.pop("seed", self.runtime.seed),
            threads=given.pop("threads", self.runtime.threads),
            specular_threshold=self.normalize.specular_threshold,
            specular_dilation=self.normalize.specular_dilation,
            **given,
        )


class RunConfig(BaseModel):
    """一次运行的完整配置（冻结）。"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    criteria: SelectionCriteria = Field(default_factory=SelectionCriteria)
    compare: CompareConfig = Field(default_factory=CompareConfig)
    scales: list[float] = Field(default_factory=lambda: list(DEFAULT_SCALES))
    base_rows: int = BASE_ROWS
    base_cols: int = BASE_COLS
    output_dir: Path = Path("out")
    seed: int = 0
    threads: int = 1
    specular_threshold: int = 250
    specular_dilation: int = 2

    @model_validator(mode="after")
    def _check(self) -> RunConfig:
        check_scales(self.scales)
        if self.base_rows < 1 or self.base_cols < 1:
            raise ArgumentError(f"全分辨率网格尺寸无效: {self.base_rows}×{self.base_cols}")
        if self.threads < 0:
            raise ArgumentError(f"threads 不能为负: {self.threads}")
        if not (0 <= self.specular_threshold <= 255) or self.specular_dilation < 0:
            raise ArgumentError("镜面反射阈值必须在 [0, 255]，膨胀半径不能为负")
        return self

    def levels(self) -> list[ResolutionLevel]:
        return [ResolutionLevel.for_scale(s, self.base_rows, self.base_cols) for s in self.scales]


__all__ = [
    "DEFAULT_SCALES",
    "CompareSettings",
    "IrisSettings",
    "LogSettings",
    "NormalizeSettings",
    "RunConfig",
    "RuntimeSettings",
    "SelectionSettings",
    "SweepSettings",
    "check_scales",
    "parse_scales",
]
