from __future__ import annotations

from pathlib import Path

import pytest

from aury.iris.application.config import DEFAULT_SCALES, IrisSettings, RunConfig, parse_scales
from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import DEFAULT_TOLERANCE


@pytest.fixture
def no_env_file(tmp_path: Path) -> Path:
    return tmp_path / "absent.env"


def test_defaults(no_env_file: Path) -> None:
    config = IrisSettings(_env_file=no_env_file).run_config()

    assert config.scales == list(DEFAULT_SCALES)
    assert config.compare.tolerance == DEFAULT_TOLERANCE
    assert config.compare.exclude_same_subject
    assert config.criteria.min_median_intensity == 70.0
    assert config.criteria.max_pupil_radius == 52.0
    assert [(lv.rows, lv.cols) for lv in config.levels()][-1] == (7, 48)


@pytest.mark.parametrize("raw", ["1.0,0.5,0.1", "[1.0, 0.5, 0.1]", " 1 , 0.5 ,0.1 "])
def test_scales_from_env(monkeypatch: pytest.MonkeyPatch, no_env_file: Path, raw: str) -> None:
    monkeypatch.setenv("SWEEP__SCALES", raw)

    settings = IrisSettings(_env_file=no_env_file)

    assert settings.sweep.scales == [1.0, 0.5, 0.1]


@pytest.mark.parametrize("raw", ["0.5,1.0", "1.0,1.0", "1.2,0.5", "0,", "a,b"])
def test_invalid_scales(raw: str) -> None:
    with pytest.raises(ArgumentError):
        RunConfig(scales=parse_scales(raw))


def test_nested_env_and_overrides(monkeypatch: pytest.MonkeyPatch, no_env_file: Path) -> None:
    monkeypatch.setenv("COMPARE__MIN_OVERLAP", "50")
    monkeypatch.setenv("RUNTIME__THREADS", "3")

    config = IrisSettings(_env_file=no_env_file).run_config(threads=None, tolerance=1.5 / 255, seed=9)

    assert config.compare.min_overlap == 50
    assert config.compare.tolerance == pytest.approx(1.5 / 255)
    assert config.threads == 3
    assert config.seed == 9


def test_env_file_is_loaded_without_overriding(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    env_file = tmp_path / ".env"
    env_file.write_text("COMPARE__MIN_OVERLAP=7\nRUNTIME__SEED=11\n", encoding="utf-8")
    # 先登记再删除，测试结束后恢复原状
    monkeypatch.setenv("COMPARE__MIN_OVERLAP", "")
    monkeypatch.delenv("COMPARE__MIN_OVERLAP")
    monkeypatch.setenv("RUNTIME__SEED", "5")

    settings = IrisSettings(_env_file=env_file)

    assert settings.compare.min_overlap == 7
    assert settings.runtime.seed == 5


def test_run_config_rejects_bad_values(no_env_file: Path) -> None:
    settings = IrisSettings(_env_file=no_env_file)
    with pytest.raises(ArgumentError):
        settings.run_config(threads=-1)
    with pytest.raises(ArgumentError):
        settings.run_config(min_overlap=0)
    with pytest.raises(ArgumentError):
        settings.run_config(scales="0.5,0.8")
