from __future__ import annotations

from pathlib import Path

import pandas as pd
import pytest

from aury.iris.domain.compare import all_pairs
from aury.iris.domain.exceptions import DegenerateDistributionError
from aury.iris.domain.models import PairResult, ResolutionLevel, SweepRow
from aury.iris.domain.stats import imposter_stats, row_from_moments
from aury.iris.infrastructure.report import (
    DOF_SVG,
    HISTOGRAM_CSV,
    HISTOGRAM_SVG,
    PAIRS_FILE,
    STATS_FILE,
    emit_results,
    emit_stats,
    read_pairs_csv,
    read_stats_csv,
)
from aury.iris.testing import IrisFactory

REFERENCE = Path(__file__).parent / "data" / "reference_sweep.csv"


def _published_sweep() -> list[SweepRow]:
    table = pd.read_csv(REFERENCE)
    return [
        row_from_moments(ResolutionLevel.for_scale(r.scale_pct / 100), r.mean, r.std)
        for r in table.itertuples(index=False)
    ]


def test_emit_stats_writes_published_dof(tmp_path: Path) -> None:
    emitted = emit_stats(_published_sweep(), tmp_path)

    assert emitted.names() == [STATS_FILE, DOF_SVG]
    frame = pd.read_csv(tmp_path / STATS_FILE)
    assert frame["dof"].tolist() == pd.read_csv(REFERENCE)["dof"].tolist()
    assert frame["rows"].tolist() == [128, 103, 64, 52, 39, 26, 13, 7]
    assert (tmp_path / DOF_SVG).read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_stats_csv_round_trip(tmp_path: Path) -> None:
    rows = _published_sweep()
    emit_stats(rows, tmp_path, plot=False)

    restored = read_stats_csv(tmp_path / STATS_FILE)

    assert [r.dof for r in restored] == [r.dof for r in rows]
    assert [r.cols for r in restored] == [r.cols for r in rows]
    assert restored[0].mean == pytest.approx(rows[0].mean, rel=1e-9)


def test_empty_pairs_write_nothing(tmp_path: Path) -> None:
    out = tmp_path / "out"

    with pytest.raises(DegenerateDistributionError):
        emit_results([], None, [], out)

    assert not out.exists()


@pytest.mark.parametrize("mismatches", [5, 1])
def test_undefined_dof_skips_histogram(tmp_path: Path, mismatches: int) -> None:
    pairs = [PairResult("a", c, 10, mismatches) for c in ("b", "c", "d")]

    emitted = emit_results(pairs, None, [], tmp_path)

    assert emitted.names() == [PAIRS_FILE]


def test_emit_results_files_and_reparse(tmp_path: Path, factory: IrisFactory) -> None:
    report = all_pairs(factory.normalized_set(12, rows=8, cols=64))
    stats = imposter_stats(report.results)

    emitted = emit_results(report.results, stats, [], tmp_path)

    assert emitted.names() == [PAIRS_FILE, HISTOGRAM_CSV, HISTOGRAM_SVG]
    assert read_pairs_csv(tmp_path / PAIRS_FILE) == report.results
    hist = pd.read_csv(tmp_path / HISTOGRAM_CSV)
    assert list(hist.columns) == ["bin_left", "count", "overlay_mass"]
    assert hist["count"].sum() == report.n_pairs
    assert hist["overlay_mass"].sum() == pytest.approx(1.0)


def test_emission_is_byte_identical(tmp_path: Path) -> None:
    images = IrisFactory(seed=8).normalized_set(10, rows=8, cols=48)
    report = all_pairs(images)
    sweep = _published_sweep()

    first = emit_results(report.results, None, sweep, tmp_path / "a")
    second = emit_results(all_pairs(images, threads=3).results, None, sweep, tmp_path / "b")

    assert first.names() == second.names()
    for name in first.names():
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes(), name
