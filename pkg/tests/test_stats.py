from __future__ import annotations

import numpy as np
import pytest

from aury.iris.domain.compare import all_pairs
from aury.iris.domain.exceptions import ArgumentError, DegenerateDistributionError
from aury.iris.domain.models import (
    BinomialModel,
    HistogramNormalization,
    HistogramSpec,
    PairResult,
    ResolutionLevel,
    SynthSpec,
)
from aury.iris.domain.preprocess import downscale
from aury.iris.domain.stats import (
    PHASE_CODE_DOF,
    binomial_pmf,
    binomial_pmf_all,
    estimate_dof,
    goodness_of_fit,
    histogram_from_values,
    histogram_with_overlay,
    imposter_stats,
    reference_ratio,
    round_half_away,
    row_from_moments,
    stats_from_values,
    sweep_table,
)
from aury.iris.domain.synth import gen_iid

#: 已发表的分辨率扫描表：(scale, mean, std, dof)
PUBLISHED_ROWS = [
    (1.0, 0.973508055, 0.006933829, 536),
    (0.8, 0.973432739, 0.006990415, 529),
    (0.5, 0.973239352, 0.007175015, 506),
    (0.4, 0.973124211, 0.007317235, 488),
    (0.3, 0.972883953, 0.007562925, 461),
    (0.2, 0.972312082, 0.008135030, 407),
    (0.1, 0.970584522, 0.010361062, 266),
    (0.05, 0.968513619, 0.015774466, 123),
]


def _pairs(values: list[tuple[int, int]]) -> list[PairResult]:
    return [PairResult(f"a{i:03d}", f"b{i:03d}", overlap, mismatches) for i, (overlap, mismatches) in enumerate(values)]


# ---------------------------------------------------------------- binomial


def test_pmf_single_trial() -> None:
    model = BinomialModel(trials=1, success_prob=0.3)
    assert binomial_pmf(model, 0) == pytest.approx(0.7)
    assert binomial_pmf(model, 1) == pytest.approx(0.3)
    with pytest.raises(ArgumentError):
        binomial_pmf(model, 2)


def test_pmf_degenerate_probabilities() -> None:
    assert binomial_pmf(BinomialModel(trials=10, success_prob=0.0), 0) == 1.0
    assert binomial_pmf(BinomialModel(trials=10, success_prob=1.0), 10) == 1.0
    assert binomial_pmf(BinomialModel(trials=10, success_prob=1.0), 3) == 0.0


@pytest.mark.parametrize("trials", [1, 10, 536])
@pytest.mark.parametrize("prob", [0.1, 0.5, 0.973508])
def test_pmf_moments(trials: int, prob: float) -> None:
    pmf = binomial_pmf_all(BinomialModel(trials=trials, success_prob=prob))
    k = np.arange(trials + 1)

    mean = float(np.sum(k * pmf))
    var = float(np.sum((k - mean) ** 2 * pmf))

    assert np.isfinite(pmf).all()
    assert pmf.sum() == pytest.approx(1.0, abs=1e-9)
    assert mean == pytest.approx(trials * prob, rel=1e-6)
    assert var == pytest.approx(trials * prob * (1 - prob), rel=1e-6)


@pytest.mark.parametrize("trials", [1, 10, 37, 244, 536])
def test_dof_round_trip(trials: int) -> None:
    p = 0.9735
    _, dof = estimate_dof(p, np.sqrt(p * (1 - p) / trials))
    assert dof == trials


@pytest.mark.parametrize(("scale", "mean", "std", "dof"), PUBLISHED_ROWS)
def test_published_rows(scale: float, mean: float, std: float, dof: int) -> None:
    row = row_from_moments(ResolutionLevel.for_scale(scale), mean, std)

    assert row.dof == dof
    assert row.dof_real == pytest.approx(mean * (1 - mean) / std**2)


def test_dof_examples() -> None:
    assert estimate_dof(0.5, 0.5) == (1.0, 1)
    stats = stats_from_values(np.array([0.4, 0.6]))
    assert stats.dof_real == pytest.approx(12.5)
    assert stats.dof == 13
    assert reference_ratio(536) == pytest.approx(536 / PHASE_CODE_DOF)


def test_dof_degenerate() -> None:
    with pytest.raises(DegenerateDistributionError):
        estimate_dof(0.5, 0.0)
    with pytest.raises(DegenerateDistributionError):
        estimate_dof(1.0, 0.1)
    stats = stats_from_values(np.array([0.5, 0.5]))
    assert stats.std == 0.0
    assert stats.dof is None
    assert not stats.dof_defined


def test_round_half_away() -> None:
    assert round_half_away(12.5) == 13
    assert round_half_away(13.5) == 14
    assert round_half_away(-2.5) == -3
    assert round_half_away(2.4999) == 2


# ------------------------------------------------------------------ moments


def test_imposter_stats_uses_sample_std() -> None:
    pairs = _pairs([(10, 9), (10, 8), (10, 10), (10, 7)])

    stats = imposter_stats(pairs)

    assert stats.n_pairs == 4
    assert stats.mean == pytest.approx(0.85)
    assert stats.std == pytest.approx(np.std([0.9, 0.8, 1.0, 0.7], ddof=1))


def test_stats_are_permutation_invariant() -> None:
    rng = np.random.default_rng(3)
    values = rng.binomial(300, 0.97, size=5000) / 300

    a = stats_from_values(values)
    b = stats_from_values(rng.permutation(values))

    assert (a.mean, a.std, a.dof) == (b.mean, b.std, b.dof)


def test_stats_need_two_values() -> None:
    with pytest.raises(ArgumentError):
        stats_from_values(np.array([0.5]))


def test_constant_non_dyadic_values_have_no_dof() -> None:
    # 0.1 无法精确表示，逐项求均值会留下舍入残差
    stats = imposter_stats(_pairs([(10, 1), (10, 1), (10, 1)]))

    assert stats.std == 0.0
    assert stats.mean == 0.1
    assert stats.dof_real is None
    assert stats.dof is None
    assert not stats.dof_defined


# ---------------------------------------------------------------- histogram


def test_histogram_single_bin() -> None:
    pairs = _pairs([(10, 9), (10, 8), (10, 10)])
    stats = imposter_stats(pairs)

    hist = histogram_with_overlay(pairs, stats, HistogramSpec(bin_width=1.0))

    assert hist.n_bins == 1
    assert hist.counts.tolist() == [3]
    assert hist.values.tolist() == [1.0]
    assert hist.overlay_binned.sum() == pytest.approx(1.0)


def test_histogram_default_bins_follow_dof() -> None:
    rng = np.random.default_rng(11)
    values = rng.binomial(50, 0.9, size=20000) / 50
    stats = stats_from_values(values)

    hist = histogram_from_values(values, stats)

    assert hist.n_bins == stats.dof
    assert hist.counts.sum() == values.size
    assert hist.values.sum() == pytest.approx(1.0)
    assert hist.overlay_mass.sum() == pytest.approx(1.0)
    assert len(hist.overlay_x) == stats.dof + 1


def test_histogram_count_normalization() -> None:
    rng = np.random.default_rng(12)
    values = rng.binomial(40, 0.8, size=1000) / 40
    stats = stats_from_values(values)

    hist = histogram_from_values(values, stats, HistogramSpec(normalization=HistogramNormalization.COUNTS))

    assert hist.values.sum() == pytest.approx(1000)
    assert hist.overlay_binned.sum() == pytest.approx(1000)


def test_histogram_rejects_undefined_dof() -> None:
    values = np.array([0.5, 0.5])
    with pytest.raises(DegenerateDistributionError):
        histogram_from_values(values, stats_from_values(values))


def test_histogram_spec_validation() -> None:
    with pytest.raises(ArgumentError):
        HistogramSpec(bin_width=0.3)
    with pytest.raises(ArgumentError):
        HistogramSpec(bin_width=0.0)


def test_binomial_draws_pass_goodness_of_fit() -> None:
    rng = np.random.default_rng(2024)
    values = rng.binomial(100, 0.97, size=1_000_000) / 100
    stats = stats_from_values(values)
    assert stats.dof == 100

    fit = goodness_of_fit(histogram_from_values(values, stats))

    assert fit.p_value > 0.001


# -------------------------------------------------------------------- sweep


def test_sweep_table_orders_and_skips_levels() -> None:
    full = ResolutionLevel.for_scale(1.0)
    half = ResolutionLevel.for_scale(0.5)
    tiny = ResolutionLevel.for_scale(0.05)

    rows = sweep_table(
        [
            (half, _pairs([(10, 6), (10, 4)])),
            (tiny, _pairs([(10, 5)])),
            (full, _pairs([(10, 5), (10, 5)])),
        ]
    )

    assert [r.scale for r in rows] == [1.0, 0.5]
    assert rows[0].dof is None
    assert rows[1].mean == pytest.approx(0.5)
    assert rows[1].dof == round_half_away(0.25 / np.var([0.6, 0.4], ddof=1))
    assert (rows[1].rows, rows[1].cols) == (64, 480)


def test_sweep_table_iid_dof_tracks_pixel_count() -> None:
    images = gen_iid(SynthSpec(count=60, rows=32, cols=240, seed=11))
    levels = [
        (ResolutionLevel.for_scale(scale, 32, 240), all_pairs([downscale(nir, scale) for nir in images]).results)
        for scale in (1.0, 0.5)
    ]

    full, half = sweep_table(levels)

    assert (half.rows, half.cols) == (16, 120)
    assert half.pixel_count * 4 == full.pixel_count
    assert 0.7 <= half.dof / half.pixel_count <= 1.3
