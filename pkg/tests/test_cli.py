from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
import pytest
from typer.testing import CliRunner

from aury.iris.commands.app import _get_app
from aury.iris.domain.models import NormalizedIris
from aury.iris.infrastructure.io import load_set, save_set
from aury.iris.testing import IrisFactory

REFERENCE = Path(__file__).parent / "data" / "reference_sweep.csv"

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("LOG__LEVEL", "WARNING")


def _invoke(*args: str):
    return runner.invoke(_get_app(), list(args))


def test_version() -> None:
    result = _invoke("--version")

    assert result.exit_code == 0
    assert "Aury Iris" in result.output


def test_table1_check_reproduces_published_table(tmp_path: Path) -> None:
    result = _invoke("-o", str(tmp_path / "out"), "table1-check", "--table", str(REFERENCE))

    assert result.exit_code == 0, result.output
    stats = pd.read_csv(tmp_path / "out" / "stats.csv")
    assert stats["dof"].tolist() == [536, 529, 506, 488, 461, 407, 266, 123]
    assert stats["scale"].tolist() == pytest.approx([1.0, 0.8, 0.5, 0.4, 0.3, 0.2, 0.1, 0.05])
    assert stats["rows"].tolist() == [128, 103, 64, 52, 39, 26, 13, 7]
    assert (tmp_path / "out" / "dof_vs_resolution.svg").exists()


def test_dof_check_alias(tmp_path: Path) -> None:
    result = _invoke("-o", str(tmp_path / "out"), "dof-check", "--table", str(REFERENCE))

    assert result.exit_code == 0, result.output
    assert pd.read_csv(tmp_path / "out" / "stats.csv")["dof"].tolist()[0] == 536


def test_table1_check_without_scale_column(tmp_path: Path) -> None:
    table = tmp_path / "moments.csv"
    table.write_text("mean,std\n0.973508055,0.006933829\n0.968513619,0.015774466\n", encoding="utf-8")

    result = _invoke("-o", str(tmp_path / "out"), "table1-check", "--table", str(table))

    assert result.exit_code == 0, result.output
    stats = pd.read_csv(tmp_path / "out" / "stats.csv")
    assert stats["dof"].tolist() == [536, 123]
    assert stats["scale"].isna().all()
    assert stats["rows"].isna().all()
    assert not (tmp_path / "out" / "dof_vs_resolution.svg").exists()


@pytest.mark.parametrize(("header", "value"), [("scale_pct", "1"), ("scale", "0.01")])
def test_table1_check_scale_unit_follows_column(tmp_path: Path, header: str, value: str) -> None:
    table = tmp_path / "moments.csv"
    table.write_text(f"{header},mean,std\n{value},0.973508055,0.006933829\n", encoding="utf-8")

    result = _invoke("-o", str(tmp_path / "out"), "table1-check", "--table", str(table))

    assert result.exit_code == 0, result.output
    stats = pd.read_csv(tmp_path / "out" / "stats.csv")
    assert stats["scale"].tolist() == pytest.approx([0.01])
    assert (stats["rows"].iloc[0], stats["cols"].iloc[0]) == (2, 10)


def test_table1_check_rejects_both_scale_columns(tmp_path: Path) -> None:
    table = tmp_path / "moments.csv"
    table.write_text("scale,scale_pct,mean,std\n1.0,100,0.97,0.007\n", encoding="utf-8")

    result = _invoke("-o", str(tmp_path / "out"), "table1-check", "--table", str(table))

    assert result.exit_code == 2


def test_table1_check_zero_std_is_degenerate(tmp_path: Path) -> None:
    table = tmp_path / "moments.csv"
    table.write_text("scale,mean,std\n1.0,0.97,0.0\n", encoding="utf-8")

    result = _invoke("-o", str(tmp_path / "out"), "table1-check", "--table", str(table))

    assert result.exit_code == 3


def test_synth_then_sweep_is_thread_independent(tmp_path: Path) -> None:
    data = tmp_path / "data"
    result = _invoke(
        "-o", str(data), "synth", "--count", "8", "--rows", "16", "--cols", "96", "--sigma", "1.5", "--seed", "3"
    )
    assert result.exit_code == 0, result.output
    assert len(list((data / "synth").glob("*.nir"))) == 8

    for threads, name in (("1", "a"), ("8", "b")):
        result = _invoke(
            "--threads", threads, "-o", str(tmp_path / name), "sweep", "--input", str(data / "synth"),
            "--scales", "1.0,0.5,0.25",
        )
        assert result.exit_code == 0, result.output

    for filename in ("stats.csv", "pairs.csv", "histogram.csv", "dof_vs_resolution.svg"):
        assert (tmp_path / "a" / filename).read_bytes() == (tmp_path / "b" / filename).read_bytes(), filename
    stats = pd.read_csv(tmp_path / "a" / "stats.csv")
    assert stats["n_pairs"].tolist() == [28, 28, 28]
    assert stats[["rows", "cols"]].values.tolist() == [[16, 96], [8, 48], [4, 24]]


def test_usage_errors_exit_one(tmp_path: Path) -> None:
    assert _invoke("compare").exit_code == 1
    assert _invoke("pyramid", "--input", str(tmp_path), "--scales", "0.5,1.0").exit_code == 1
    assert _invoke("compare", "--input", str(tmp_path), "--tolerance", "-1").exit_code == 1


def test_bad_magic_exits_two(tmp_path: Path, factory: IrisFactory) -> None:
    data = tmp_path / "set"
    save_set(factory.normalized_set(2), data)
    (data / "broken.nir").write_bytes(b"NIR0" + bytes(60))

    result = _invoke("-o", str(tmp_path / "out"), "compare", "--input", str(data))

    assert result.exit_code == 2


def test_empty_input_is_degenerate(tmp_path: Path) -> None:
    (tmp_path / "empty").mkdir()

    result = _invoke("-o", str(tmp_path / "out"), "compare", "--input", str(tmp_path / "empty"))

    assert result.exit_code == 3
    assert not (tmp_path / "out" / "pairs.csv").exists()


def test_compare_then_stats(tmp_path: Path, factory: IrisFactory) -> None:
    data = tmp_path / "set"
    save_set(factory.normalized_set(6, rows=8, cols=64), data)

    result = _invoke("-o", str(tmp_path / "out"), "compare", "--input", str(data))
    assert result.exit_code == 0, result.output
    pairs = pd.read_csv(tmp_path / "out" / "pairs.csv")
    assert len(pairs) == 15

    result = _invoke("-o", str(tmp_path / "stats"), "stats", "--pairs", str(tmp_path / "out" / "pairs.csv"))
    assert result.exit_code == 0, result.output
    stats = pd.read_csv(tmp_path / "stats" / "stats.csv")
    assert stats["n_pairs"].tolist() == [15]
    assert stats["mean"].iloc[0] == pytest.approx(pairs["hamming"].mean())


def test_stats_on_constant_pairs_skips_histogram(tmp_path: Path) -> None:
    pairs = tmp_path / "pairs.csv"
    pairs.write_text(
        "id_a,id_b,overlap,mismatches,hamming\na,b,10,1,0.1\na,c,10,1,0.1\nb,c,10,1,0.1\n", encoding="utf-8"
    )

    result = _invoke("-o", str(tmp_path / "out"), "stats", "--pairs", str(pairs))

    assert result.exit_code == 0, result.output
    stats = pd.read_csv(tmp_path / "out" / "stats.csv")
    assert stats["std"].tolist() == [0.0]
    assert stats["dof"].isna().all()
    assert not (tmp_path / "out" / "histogram.csv").exists()


def test_normalize_end_to_end(monkeypatch: pytest.MonkeyPatch, tmp_path: Path, factory: IrisFactory) -> None:
    monkeypatch.setenv("SWEEP__BASE_ROWS", "16")
    monkeypatch.setenv("SWEEP__BASE_COLS", "64")
    manifest = factory.manifest(tmp_path / "data", count=4, mask_shape=(16, 64))

    result = _invoke("-o", str(tmp_path / "out"), "normalize", "--manifest", str(manifest))

    assert result.exit_code == 0, result.output
    images: list[NormalizedIris] = load_set(tmp_path / "out" / "normalized")
    assert len(images) == 4
    for nir in images:
        assert nir.shape == (16, 64)
        assert 0 < nir.valid_count < 16 * 64
        assert float(np.median(nir.unmasked())) == pytest.approx(127 / 255, abs=1e-9)
    assert (tmp_path / "out" / "normalized" / "rejections.csv").exists()


def test_normalize_mask_shape_mismatch(monkeypatch: pytest.MonkeyPatch, tmp_path: Path, factory: IrisFactory) -> None:
    monkeypatch.setenv("SWEEP__BASE_ROWS", "16")
    monkeypatch.setenv("SWEEP__BASE_COLS", "64")
    manifest = factory.manifest(tmp_path / "data", count=2, mask_shape=(8, 64))

    result = _invoke("-o", str(tmp_path / "out"), "normalize", "--manifest", str(manifest))

    assert result.exit_code == 2
