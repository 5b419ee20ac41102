from __future__ import annotations

import math

import numpy as np
import pytest

from aury.iris.domain.compare import all_pairs
from aury.iris.domain.exceptions import ArgumentError
from aury.iris.domain.models import TARGET_MEDIAN, Amplitude, SynthSpec
from aury.iris.domain.preprocess import downscale
from aury.iris.domain.stats import imposter_stats
from aury.iris.domain.synth import (
    gen_correlated,
    gen_iid,
    gen_occlusion,
    generate,
    mask_rng,
    occlusion_mask,
    synth_eyes,
    synth_ids,
)


def test_generation_is_deterministic() -> None:
    spec = SynthSpec(count=6, rows=8, cols=32, correlation_sigma=1.5, occlusion_fraction=0.2, seed=17)

    first = generate(spec)
    again = generate(spec, threads=4)
    other = generate(spec.model_copy(update={"seed": 18}))

    assert first == again
    assert first != other
    assert [nir.image_id for nir in first] == [synth_ids(i)[0] for i in range(6)]
    assert len({nir.subject_id for nir in first}) == 6


def test_iid_amplitudes() -> None:
    uniform = gen_iid(SynthSpec(count=2, rows=64, cols=64, seed=1))
    assert all((0 <= nir.intensities).all() and (nir.intensities < 1).all() for nir in uniform)

    gaussian = gen_iid(SynthSpec(count=2, rows=64, cols=64, amplitude=Amplitude.gaussian(127 / 255, 20 / 255)))
    values = np.concatenate([nir.intensities.ravel() for nir in gaussian])
    assert values.mean() == pytest.approx(127 / 255, abs=0.005)
    assert values.std() == pytest.approx(20 / 255, rel=0.05)


def test_correlated_texture_is_centered() -> None:
    images = gen_correlated(SynthSpec(count=4, rows=32, cols=96, correlation_sigma=2.0, seed=3))

    for nir in images:
        assert np.median(nir.intensities) == pytest.approx(TARGET_MEDIAN, abs=1e-9)
        assert (nir.intensities >= 0).all()


def test_generator_preconditions() -> None:
    with pytest.raises(ArgumentError):
        gen_iid(SynthSpec(count=2, rows=4, cols=4, correlation_sigma=1.0))
    with pytest.raises(ArgumentError):
        gen_correlated(SynthSpec(count=2, rows=4, cols=4))
    with pytest.raises(ArgumentError):
        SynthSpec(count=1, rows=4, cols=4)
    with pytest.raises(ArgumentError):
        SynthSpec(count=2, rows=4, cols=4, occlusion_fraction=1.0)


@pytest.mark.parametrize("fraction", [0.05, 0.27, 0.6])
def test_occlusion_budget_is_exact(fraction: float) -> None:
    mask = occlusion_mask(32, 240, fraction, mask_rng(5, 0))

    invalid = np.count_nonzero(~mask.valid)

    assert invalid == math.ceil(fraction * 32 * 240)


def test_occlusion_fraction_in_range() -> None:
    spec = SynthSpec(count=20, rows=32, cols=240, occlusion_fraction=0.27, seed=9)

    masks = gen_occlusion(spec)
    fractions = [np.count_nonzero(~m.valid) / spec.pixel_count for m in masks]

    assert all(0.25 <= f <= 0.30 for f in fractions)
    assert len({m.valid.tobytes() for m in masks}) > 1


def test_near_zero_correlation_matches_iid() -> None:
    iid = gen_iid(SynthSpec(count=30, rows=16, cols=64, seed=21))
    smooth = gen_correlated(
        SynthSpec(count=30, rows=16, cols=64, seed=21, correlation_sigma=0.01, contrast_jitter=0.0)
    )

    dof_iid = imposter_stats(all_pairs(iid).results).dof
    dof_smooth = imposter_stats(all_pairs(smooth).results).dof

    assert dof_smooth == pytest.approx(dof_iid, rel=0.10)


def test_masked_iid_dof_tracks_overlap() -> None:
    images = gen_iid(SynthSpec(count=40, rows=32, cols=240, occlusion_fraction=0.25, seed=4))

    pairs = all_pairs(images).results
    mean_overlap = np.mean([p.overlap for p in pairs])
    dof = imposter_stats(pairs).dof

    assert 0.8 * mean_overlap <= dof <= 1.25 * mean_overlap


def test_dof_does_not_grow_with_correlation() -> None:
    dofs = []
    for sigma in (0.5, 1.0, 2.0, 4.0):
        spec = SynthSpec(count=40, rows=32, cols=240, correlation_sigma=sigma, seed=13)
        dofs.append(imposter_stats(all_pairs(gen_correlated(spec)).results).dof)

    assert all(b <= 1.05 * a for a, b in zip(dofs, dofs[1:], strict=False))


def test_synth_eyes_render_annulus() -> None:
    spec = SynthSpec(count=3, rows=16, cols=64, seed=2)

    eyes = synth_eyes(spec, width=160, height=140)

    assert len(eyes) == 3
    for eye, seg in eyes:
        assert eye.intensities.shape == (140, 160)
        assert 25 <= seg.pupil_r <= 45
        assert seg.iris_r == pytest.approx(0.45 * 140)
        assert (eye.intensities == 255).any()
        assert eye.intensities[70, 80] == 15


@pytest.mark.slow
def test_iid_acceptance_run() -> None:
    spec = SynthSpec(count=300, rows=32, cols=240, seed=42)

    stats = imposter_stats(all_pairs(gen_iid(spec, threads=0), threads=0).results)

    assert stats.mean == pytest.approx(0.996082, abs=0.0005)
    assert 0.8 * spec.pixel_count <= stats.dof <= 1.25 * spec.pixel_count


@pytest.mark.slow
def test_correlated_dof_shrinks_with_resolution() -> None:
    spec = SynthSpec(count=300, rows=64, cols=480, correlation_sigma=2.0, seed=7)
    images = gen_correlated(spec, threads=0)

    dofs = []
    for scale in (1.0, 0.5, 0.3, 0.1):
        level = [downscale(nir, scale) for nir in images]
        dofs.append(imposter_stats(all_pairs(level, threads=0).results).dof)

    assert all(b <= 1.05 * a for a, b in zip(dofs, dofs[1:], strict=False))
    assert dofs[0] < 0.5 * spec.pixel_count


@pytest.mark.slow
def test_correlated_acceptance_run() -> None:
    spec = SynthSpec(count=300, rows=32, cols=240, correlation_sigma=2.0, seed=42)

    stats = imposter_stats(all_pairs(gen_correlated(spec, threads=0), threads=0).results)

    assert stats.dof < 0.5 * spec.pixel_count
