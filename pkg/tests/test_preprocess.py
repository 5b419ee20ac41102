from __future__ import annotations

import numpy as np
import pytest

from aury.iris.domain.exceptions import ArgumentError, DegenerateImageError
from aury.iris.domain.models import (
    TARGET_MEDIAN,
    IrisSegmentation,
    NormalizedIris,
    RejectionReason,
    SelectionCriteria,
)
from aury.iris.domain.preprocess import (
    build_pyramid,
    downscale,
    median_intensity,
    normalize_intensity,
    resample_weights,
    select_images,
    selection_report,
)
from aury.iris.testing import IrisFactory


def _nir(levels: list[float], image_id: str = "a", mask: list[bool] | None = None) -> NormalizedIris:
    values = np.array([levels], dtype=np.float64) / 255.0
    valid = np.ones_like(values, dtype=bool) if mask is None else np.array([mask])
    return NormalizedIris(values, valid, image_id, "s")


# ----------------------------------------------------------------- selection


@pytest.mark.parametrize(
    ("levels", "pupil_r", "accepted"),
    [
        ([70.0], 40.0, True),
        ([69.0, 70.0], 40.0, False),
        ([100.0], 52.0, True),
        ([100.0], 53.0, False),
    ],
)
def test_selection_boundaries(levels: list[float], pupil_r: float, accepted: bool) -> None:
    item = (_nir(levels), IrisSegmentation.concentric(100, 100, pupil_r, 90))

    kept = select_images([item], SelectionCriteria())

    assert (len(kept) == 1) is accepted


def test_selection_report_diagnostics() -> None:
    seg = IrisSegmentation.concentric(100, 100, 30, 90)
    items = [
        (_nir([120.0], "ok"), seg),
        (_nir([20.0], "dark"), seg),
        (_nir([120.0], "empty", mask=[False]), seg),
        (_nir([120.0], "big"), IrisSegmentation.concentric(100, 100, 60, 90)),
    ]

    accepted, rejected = selection_report(items, SelectionCriteria())

    assert [nir.image_id for nir, _ in accepted] == ["ok"]
    reasons = {r.image_id: r.reason for r in rejected}
    assert reasons == {
        "dark": RejectionReason.DARK,
        "empty": RejectionReason.EMPTY,
        "big": RejectionReason.PUPIL,
    }
    dark = next(r for r in rejected if r.image_id == "dark")
    assert dark.median == pytest.approx(20.0)


def test_median_uses_mean_of_middle_pair() -> None:
    assert median_intensity(_nir([69.0, 70.0])) == pytest.approx(69.5)
    assert median_intensity(_nir([10.0], mask=[False])) is None


# ---------------------------------------------------------------- intensity


def test_normalize_intensity_scales_to_target() -> None:
    nir = _nir([50.0, 70.0, 90.0])

    out = normalize_intensity(nir)

    assert out.intensities[0, 1] == pytest.approx(127 / 255, abs=1e-12)
    assert out.intensities[0, 0] / out.intensities[0, 2] == pytest.approx(50 / 90)
    assert out.intensity_scale == pytest.approx(127 / 70)


def test_normalize_intensity_examples() -> None:
    unchanged = normalize_intensity(_nir([100.0, 127.0, 150.0]))
    assert np.allclose(unchanged.intensities, np.array([[100, 127, 150]]) / 255, atol=1e-12)

    bright = normalize_intensity(_nir([100.0, 254.0, 254.0]))
    assert bright.intensities[0, 0] == pytest.approx(50 / 255, abs=1e-12)
    assert bright.intensities[0, 1] == pytest.approx(127 / 255, abs=1e-12)


def test_normalize_intensity_sets_masked_cells_to_target() -> None:
    out = normalize_intensity(_nir([60.0, 200.0, 80.0], mask=[True, False, True]))

    assert out.intensities[0, 1] == pytest.approx(TARGET_MEDIAN)
    assert np.median(out.unmasked()) == pytest.approx(TARGET_MEDIAN)


def test_normalize_intensity_degenerate() -> None:
    with pytest.raises(DegenerateImageError) as exc:
        normalize_intensity(_nir([10.0, 20.0], "dead", mask=[False, False]))
    assert exc.value.image_id == "dead"
    with pytest.raises(DegenerateImageError):
        normalize_intensity(_nir([0.0, 0.0, 5.0]))


# --------------------------------------------------------------- downscale


@pytest.mark.parametrize(
    ("scale", "shape"),
    [
        (0.8, (103, 768)),
        (0.5, (64, 480)),
        (0.4, (52, 384)),
        (0.3, (39, 288)),
        (0.2, (26, 192)),
        (0.1, (13, 96)),
        (0.05, (7, 48)),
    ],
)
def test_downscale_dimensions(factory: IrisFactory, scale: float, shape: tuple[int, int]) -> None:
    nir = factory.normalized(rows=128, cols=960)

    out = downscale(nir, scale)

    assert out.shape == shape
    assert out.scale == pytest.approx(scale)


def test_downscale_identity_and_constant(factory: IrisFactory) -> None:
    nir = factory.normalized(rows=32, cols=96)
    assert downscale(nir, 1.0) is nir

    constant = NormalizedIris(np.full((32, 96), 0.42), np.ones((32, 96), dtype=bool), "c", "s")
    for scale in (0.5, 0.3, 0.1):
        out = downscale(constant, scale)
        assert np.allclose(out.intensities, 0.42, atol=1e-9)
        assert out.mask.all()


def test_downscale_all_invalid_stays_invalid() -> None:
    nir = NormalizedIris(np.full((32, 96), 0.5), np.zeros((32, 96), dtype=bool), "x", "s")

    out = downscale(nir, 0.5)

    assert not out.mask.any()


def test_downscale_occluded_block_does_not_bleed() -> None:
    values = np.full((32, 96), 0.4)
    values[:, :48] = 3.0
    mask = np.ones((32, 96), dtype=bool)
    mask[:, :48] = False
    nir = NormalizedIris(values, mask, "b", "s")

    out = downscale(nir, 0.5)

    assert np.allclose(out.intensities[out.mask], 0.4, atol=1e-9)


def test_downscale_rejects_bad_scale(factory: IrisFactory) -> None:
    nir = factory.normalized()
    for scale in (0.0, 1.5, -0.2):
        with pytest.raises(ArgumentError):
            downscale(nir, scale)


def test_pyramid_is_not_chained(factory: IrisFactory) -> None:
    nir = factory.normalized(rows=64, cols=480, mask_fraction=0.1)

    levels = build_pyramid(nir, [0.5, 0.1])

    assert levels[1] == downscale(nir, 0.1)
    assert [level.shape for level in levels] == [(32, 240), (7, 48)]


def test_resample_weights_are_normalized() -> None:
    for periodic in (False, True):
        weights = resample_weights(128, 39, 0.3, periodic)
        assert weights.shape == (39, 128)
        assert np.allclose(weights.sum(axis=1), 1.0)
