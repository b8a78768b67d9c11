"""Tests for mask sampling and application."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import chisquare

from phase_perturbation.augment import (
    RandomSource,
    SampledMask,
    apply_masks,
    mask_matrix,
    sample_freq_masks,
    sample_time_masks,
    time_mask_cap,
)
from phase_perturbation.dsp import PhaseSpectrum
from phase_perturbation.errors import InvalidInput, InvalidPolicy
from phase_perturbation.models import MaskPolicy


@pytest.fixture
def default_policy() -> MaskPolicy:
    """F=10, mF=2, T=45, mT=2, p=0.1."""
    return MaskPolicy()


def test_freq_masks_stay_inside_bins(default_policy: MaskPolicy) -> None:
    """Two bands of width at most 10 inside 513 bins."""
    masks = sample_freq_masks(513, default_policy, RandomSource(0))
    assert len(masks) == 2
    for mask in masks:
        assert mask.axis == "frequency"
        assert 0 <= mask.width <= 10
        assert mask.stop <= 513


def test_zero_width_cap_gives_empty_masks() -> None:
    """F=0 and T=0 draw only zero-width bands."""
    policy = MaskPolicy(freq_mask_max=0, time_mask_max=0)
    rng = RandomSource(1)
    masks = sample_freq_masks(513, policy, rng) + sample_time_masks(100, policy, rng)
    assert all(mask.width == 0 for mask in masks)


def test_freq_widths_are_uniform() -> None:
    """Widths over 1e5 draws pass a chi-square test against uniform {0..10}."""
    policy = MaskPolicy(freq_mask_max=10, freq_mask_count=100_000)
    masks = sample_freq_masks(513, policy, RandomSource(2024))
    counts = np.bincount([mask.width for mask in masks], minlength=11)
    assert counts.shape == (11,)
    _, p_value = chisquare(counts)
    assert p_value > 0.001


def test_time_cap_uses_ratio_of_frames(default_policy: MaskPolicy) -> None:
    """With 100 frames and p=0.1 no time mask exceeds 10 frames."""
    assert time_mask_cap(100, default_policy) == 10
    assert time_mask_cap(1000, default_policy) == 45

    policy = default_policy.model_copy(update={"time_mask_count": 10_000})
    widths = [m.width for m in sample_time_masks(100, policy, RandomSource(3))]
    assert max(widths) == 10
    assert min(widths) == 0


def test_zero_ratio_cap_disables_time_masks() -> None:
    """p=0 forces width 0 regardless of T."""
    policy = MaskPolicy(time_mask_ratio_cap=0.0, time_mask_count=50)
    masks = sample_time_masks(1000, policy, RandomSource(4))
    assert all(mask.width == 0 for mask in masks)


def test_freq_cap_larger_than_bins_is_invalid() -> None:
    """F > v cannot be sampled."""
    with pytest.raises(InvalidPolicy):
        sample_freq_masks(5, MaskPolicy(freq_mask_max=6), RandomSource(0))


def test_sampling_is_deterministic(default_policy: MaskPolicy) -> None:
    """Equal seeds give equal masks."""
    first = sample_freq_masks(513, default_policy, RandomSource(9))
    second = sample_freq_masks(513, default_policy, RandomSource(9))
    assert first == second


@settings(max_examples=50, deadline=None)
@given(
    n_bins=st.integers(min_value=1, max_value=600),
    n_frames=st.integers(min_value=1, max_value=600),
    freq_max=st.integers(min_value=0, max_value=30),
    time_max=st.integers(min_value=0, max_value=80),
    ratio=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2**64 - 1),
)
def test_masks_always_fit(
    n_bins: int, n_frames: int, freq_max: int, time_max: int, ratio: float, seed: int
) -> None:
    """Sampled bands never run past their axis."""
    policy = MaskPolicy(
        freq_mask_max=min(freq_max, n_bins),
        time_mask_max=time_max,
        time_mask_ratio_cap=ratio,
        freq_mask_count=3,
        time_mask_count=3,
    )
    rng = RandomSource(seed)
    for mask in sample_freq_masks(n_bins, policy, rng):
        assert mask.stop <= n_bins
    cap = time_mask_cap(n_frames, policy)
    for mask in sample_time_masks(n_frames, policy, rng):
        assert mask.width <= cap
        assert mask.stop <= n_frames


def test_no_masks_is_identity() -> None:
    """An empty mask list returns an equal matrix."""
    phase = PhaseSpectrum(np.random.default_rng(0).uniform(-3, 3, size=(10, 4)))
    assert np.array_equal(apply_masks(phase, []).data, phase.data)


def test_frequency_mask_zeroes_whole_rows() -> None:
    """Rows 5, 6, 7 of a 10 x 4 matrix become zero; 12 entries change."""
    phase = PhaseSpectrum(np.ones((10, 4)))
    masked = apply_masks(phase, [SampledMask(axis="frequency", start=5, width=3)])
    assert np.count_nonzero(masked.data != phase.data) == 12
    assert np.all(masked.data[5:8] == 0)
    assert np.all(masked.data[:5] == 1) and np.all(masked.data[8:] == 1)


def test_time_mask_zeroes_whole_columns() -> None:
    """A time band clears every bin of its frames."""
    masked = mask_matrix(np.ones((6, 8)), [SampledMask(axis="time", start=2, width=2)])
    assert np.all(masked[:, 2:4] == 0)
    assert np.count_nonzero(masked == 0) == 12


def test_masking_is_idempotent() -> None:
    """Applying the same masks twice equals applying them once."""
    phase = PhaseSpectrum(np.random.default_rng(1).uniform(-3, 3, size=(10, 8)))
    masks = [
        SampledMask(axis="frequency", start=1, width=2),
        SampledMask(axis="time", start=4, width=3),
    ]
    once = apply_masks(phase, masks)
    assert np.array_equal(apply_masks(once, masks).data, once.data)


def test_masking_does_not_touch_input() -> None:
    """The source matrix is left as it was."""
    data = np.ones((4, 4))
    mask_matrix(data, [SampledMask(axis="frequency", start=0, width=4)])
    assert np.all(data == 1)


def test_out_of_range_mask_is_invalid() -> None:
    """A band past the end of its axis is rejected."""
    with pytest.raises(InvalidInput):
        mask_matrix(np.ones((10, 4)), [SampledMask(axis="frequency", start=8, width=3)])
    with pytest.raises(InvalidInput):
        mask_matrix(np.ones((10, 4)), [SampledMask(axis="time", start=4, width=1)])
