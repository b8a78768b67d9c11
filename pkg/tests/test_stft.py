"""Tests for STFT analysis, overlap-add synthesis and the DFT oracle."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.lib.stride_tricks import sliding_window_view
from pydantic import ValidationError

from phase_perturbation.dsp import (
    AudioBuffer,
    ComplexSpectrogram,
    hann_window,
    istft,
    naive_dft_frame,
    stft,
    window_sum,
)
from phase_perturbation.errors import InvalidInput, UnsupportedConfig
from phase_perturbation.models import StftConfig

CONFIG = StftConfig()


def noise(length: int, seed: int = 0) -> AudioBuffer:
    """White noise in [-1, 1)."""
    rng = np.random.default_rng(seed)
    return AudioBuffer(samples=rng.uniform(-1.0, 1.0, length), sample_rate=16000)


def padded_frames(audio: AudioBuffer, config: StftConfig) -> np.ndarray:
    """Frames exactly as the analysis path cuts them."""
    padded = np.pad(audio.samples, config.n_fft // 2, mode="reflect")
    return sliding_window_view(padded, config.n_fft)[:: config.hop]


def test_shape_is_one_sided_and_center_padded() -> None:
    """v = n_fft/2 + 1 and frames = 1 + len // hop."""
    spec = stft(noise(4000), CONFIG)
    assert spec.n_bins == 513
    assert spec.n_frames == 1 + 4000 // 256
    assert spec.original_length == 4000


def test_zero_signal_gives_zero_spectrogram() -> None:
    """An all-zero signal analyzes to all zeros."""
    spec = stft(AudioBuffer(samples=np.zeros(4096), sample_rate=16000), CONFIG)
    assert np.all(spec.data == 0)


def test_bin_centered_tone_peaks_at_its_bin() -> None:
    """437.5 Hz at 16 kHz is bin 28 of a 1024-point frame."""
    n = np.arange(16000)
    tone = AudioBuffer(
        samples=0.5 * np.sin(2 * np.pi * 437.5 * n / 16000), sample_rate=16000
    )
    magnitude = np.abs(stft(tone, CONFIG).data)

    for m in range(4, magnitude.shape[1] - 4):
        frame = magnitude[:, m]
        assert np.argmax(frame) == 28
        # Hann main lobe spans bins 27..29; everything else is >20 dB down.
        outside = np.delete(frame, [27, 28, 29])
        assert np.all(20 * np.log10(frame[28] / (outside + 1e-300)) > 20)


def test_frames_match_naive_dft_oracle() -> None:
    """Fifty random frames agree with direct summation within 1e-9."""
    rng = np.random.default_rng(1)
    audio = noise(64000, seed=1)
    spec = stft(audio, CONFIG)
    frames = padded_frames(audio, CONFIG)
    window = hann_window(CONFIG.n_fft)

    for m in rng.choice(spec.n_frames, size=50, replace=False):
        oracle = naive_dft_frame(frames[m] * window)
        assert np.max(np.abs(spec.data[:, m] - oracle)) <= 1e-9


def test_naive_dft_constant_and_impulse() -> None:
    """DC of a constant frame is N*c; an impulse has a flat spectrum."""
    constant = naive_dft_frame(np.full(8, 0.25))
    assert constant[0] == pytest.approx(2.0, abs=1e-12)
    assert np.max(np.abs(constant[1:])) <= 1e-12

    impulse = np.zeros(8)
    impulse[0] = 1.0
    assert np.allclose(naive_dft_frame(impulse), np.ones(5), atol=1e-12, rtol=0)


def test_naive_dft_matches_fft_on_random_frame() -> None:
    """Oracle and numpy's rfft agree on a 1024-sample frame."""
    frame = np.random.default_rng(2).normal(size=1024)
    assert np.max(np.abs(naive_dft_frame(frame) - np.fft.rfft(frame))) <= 1e-9


def test_parseval_holds_per_frame() -> None:
    """Windowed frame energy equals the one-sided spectral energy."""
    audio = noise(8000, seed=3)
    spec = stft(audio, CONFIG)
    frames = padded_frames(audio, CONFIG) * hann_window(CONFIG.n_fft)

    for m in range(spec.n_frames):
        power = np.abs(spec.data[:, m]) ** 2
        spectral = (power[0] + power[-1] + 2 * power[1:-1].sum()) / CONFIG.n_fft
        temporal = np.sum(frames[m] ** 2)
        assert spectral == pytest.approx(temporal, rel=1e-6)


def test_round_trip_on_white_noise() -> None:
    """istft(stft(x)) reproduces a second of noise within 1e-6."""
    audio = noise(16000, seed=4)
    restored = istft(stft(audio, CONFIG))
    assert len(restored) == len(audio)
    assert np.max(np.abs(restored.samples - audio.samples)) <= 1e-6


def test_round_trip_on_hundred_random_lengths() -> None:
    """Round trip holds for lengths 2048..64000 at the default settings."""
    rng = np.random.default_rng(5)
    half = CONFIG.n_fft // 2
    for seed, length in enumerate(rng.integers(2048, 64001, size=100)):
        audio = noise(int(length), seed=seed)
        restored = istft(stft(audio, CONFIG)).samples
        error = np.max(np.abs(restored[half:-half] - audio.samples[half:-half]))
        assert error <= 1e-6


@settings(max_examples=25, deadline=None)
@given(
    length=st.integers(min_value=1, max_value=5000),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    hop=st.sampled_from([128, 256, 512]),
)
def test_round_trip_property(length: int, seed: int, hop: int) -> None:
    """Any length, including inputs shorter than a frame, survives a round trip."""
    config = StftConfig(n_fft=1024, hop=hop)
    audio = noise(length, seed=seed)
    restored = istft(stft(audio, config))
    assert len(restored) == length
    assert np.max(np.abs(restored.samples - audio.samples)) <= 1e-6


def test_short_input_round_trip() -> None:
    """500 samples (< one frame) round-trip over the whole signal."""
    audio = noise(500, seed=6)
    spec = stft(audio, CONFIG)
    assert spec.n_frames == 2
    assert np.max(np.abs(istft(spec).samples - audio.samples)) <= 1e-6


def test_zero_spectrogram_synthesizes_silence() -> None:
    """A zero spectrogram yields a zero signal of the recorded length."""
    spec = ComplexSpectrogram(
        data=np.zeros((513, 1 + 3000 // 256)), config=CONFIG, original_length=3000
    )
    out = istft(spec)
    assert len(out) == 3000
    assert np.all(out.samples == 0)


def test_window_sum_is_constant_in_interior() -> None:
    """Hann at 75% overlap sums to 2 away from the edges."""
    total = window_sum(CONFIG, 40)
    assert np.allclose(total[1024:-1024], 2.0, atol=1e-12)


def test_analysis_is_deterministic() -> None:
    """Identical inputs give bit-identical spectrograms."""
    audio = noise(5000, seed=7)
    assert np.array_equal(stft(audio, CONFIG).data, stft(audio, CONFIG).data)


def test_empty_audio_is_rejected() -> None:
    """An empty signal cannot be analyzed."""
    with pytest.raises(InvalidInput):
        stft(AudioBuffer(samples=np.zeros(0), sample_rate=16000), CONFIG)


def test_non_power_of_two_is_unsupported() -> None:
    """n_fft must be a power of two."""
    with pytest.raises(UnsupportedConfig):
        stft(noise(4000), StftConfig(n_fft=1000, hop=250))


def test_hop_equal_to_frame_is_unsupported() -> None:
    """Hann windows that do not overlap leave zeros in C[n]."""
    with pytest.raises(UnsupportedConfig):
        stft(noise(4000), StftConfig(n_fft=1024, hop=1024))


def test_hop_longer_than_frame_fails_validation() -> None:
    """hop > n_fft is rejected when the config is built."""
    with pytest.raises(ValidationError):
        StftConfig(n_fft=512, hop=1024)


def test_istft_rejects_dimension_mismatch() -> None:
    """Bin or frame counts that disagree with the config are invalid input."""
    spec = stft(noise(4000), CONFIG)
    wrong_bins = ComplexSpectrogram(
        data=spec.data[:-1], config=CONFIG, original_length=4000
    )
    wrong_frames = ComplexSpectrogram(
        data=spec.data[:, :-1], config=CONFIG, original_length=4000
    )
    with pytest.raises(InvalidInput):
        istft(wrong_bins)
    with pytest.raises(InvalidInput):
        istft(wrong_frames)


def test_audio_buffer_rejects_nan_and_bad_rate() -> None:
    """Samples must be finite and the rate positive."""
    with pytest.raises(InvalidInput):
        AudioBuffer(samples=np.array([0.0, np.nan]), sample_rate=16000)
    with pytest.raises(InvalidInput):
        AudioBuffer(samples=np.zeros(4), sample_rate=0)
