"""Center-padded STFT analysis and window-sum normalized overlap-add synthesis.

Frames are taken from the signal after reflection padding by ``n_fft // 2``
on both ends, so frame ``m`` is centered on sample ``m * hop``. The Hann
window is applied on analysis only; synthesis overlap-adds the inverse FFT
of each frame and divides by the shifted window sum ``C[n]``.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from phase_perturbation.dsp.types import (
    AudioBuffer,
    ComplexArray,
    ComplexSpectrogram,
    FloatArray,
)
from phase_perturbation.errors import InvalidInput, UnsupportedConfig
from phase_perturbation.models.policies import StftConfig

# Synthesis divides by max(C[n], WINDOW_SUM_FLOOR).
WINDOW_SUM_FLOOR = 1e-8


def hann_window(n_fft: int) -> FloatArray:
    """Periodic Hann window ``0.5 * (1 - cos(2*pi*n / n_fft))``."""
    n = np.arange(n_fft)
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * n / n_fft))


def check_config(config: StftConfig) -> None:
    """Reject configurations the analysis path cannot run.

    Args:
        config: STFT settings to check.

    Raises:
        UnsupportedConfig: n_fft is not a power of two, the spectrum is
            two-sided, or the shifted Hann windows leave a hole in C[n].
    """
    if config.n_fft & (config.n_fft - 1):
        raise UnsupportedConfig(f"n_fft must be a power of two, got {config.n_fft}")
    if not config.one_sided:
        raise UnsupportedConfig("only one-sided spectra are supported")
    window = hann_window(config.n_fft)
    overlap = min(window[offset :: config.hop].sum() for offset in range(config.hop))
    if overlap <= WINDOW_SUM_FLOOR:
        raise UnsupportedConfig(
            f"hann window with n_fft={config.n_fft} and hop={config.hop} "
            "does not overlap-add to a nonzero sum"
        )


def stft(
    audio: AudioBuffer,
    config: StftConfig,
    *,
    window: FloatArray | None = None,
) -> ComplexSpectrogram:
    """One-sided windowed DFT of every center-padded frame.

    Args:
        audio: Signal to analyze.
        config: STFT settings.
        window: Replacement analysis window, used by the self-test's
            negative control. Defaults to the periodic Hann window.

    Returns:
        Spectrogram of shape ``(n_fft // 2 + 1, 1 + len(audio) // hop)``.

    Raises:
        InvalidInput: The signal is empty.
        UnsupportedConfig: See ``check_config``.
    """
    check_config(config)
    if len(audio) == 0:
        raise InvalidInput("cannot analyze an empty signal")

    if window is None:
        window = hann_window(config.n_fft)
    elif window.shape != (config.n_fft,):
        raise InvalidInput(
            f"window must have length {config.n_fft}, got shape {window.shape}"
        )

    half = config.n_fft // 2
    padded = np.pad(audio.samples, half, mode="reflect")
    frames = sliding_window_view(padded, config.n_fft)[:: config.hop]
    data = np.fft.rfft(frames * window, axis=1).T

    return ComplexSpectrogram(
        data=data,
        config=config,
        original_length=len(audio),
        sample_rate=audio.sample_rate,
    )


def window_sum(config: StftConfig, n_frames: int) -> FloatArray:
    """Shifted window sum C[n] over the padded synthesis buffer.

    Args:
        config: STFT settings.
        n_frames: Number of frames overlap-added.

    Returns:
        Array of length ``n_fft + (n_frames - 1) * hop``.
    """
    window = hann_window(config.n_fft)
    total = np.zeros(config.n_fft + max(n_frames - 1, 0) * config.hop)
    for m in range(n_frames):
        start = m * config.hop
        total[start : start + config.n_fft] += window
    return total


def istft(spec: ComplexSpectrogram) -> AudioBuffer:
    """Overlap-add inverse of ``stft`` normalized by C[n].

    Args:
        spec: Spectrogram whose dimensions match its own config.

    Returns:
        Signal of exactly ``spec.original_length`` samples.

    Raises:
        InvalidInput: Bin or frame count disagrees with the config.
    """
    config = spec.config
    check_config(config)
    if spec.n_bins != config.n_bins:
        raise InvalidInput(
            f"spectrogram has {spec.n_bins} bins, config expects {config.n_bins}"
        )
    expected_frames = config.n_frames(spec.original_length)
    if spec.n_frames != expected_frames:
        raise InvalidInput(
            f"spectrogram has {spec.n_frames} frames, a signal of "
            f"{spec.original_length} samples has {expected_frames}"
        )

    frames = np.fft.irfft(spec.data, n=config.n_fft, axis=0)
    signal = np.zeros(config.n_fft + (spec.n_frames - 1) * config.hop)
    for m in range(spec.n_frames):
        start = m * config.hop
        signal[start : start + config.n_fft] += frames[:, m]
    signal /= np.maximum(window_sum(config, spec.n_frames), WINDOW_SUM_FLOOR)

    half = config.n_fft // 2
    samples = signal[half : half + spec.original_length]
    if samples.shape[0] < spec.original_length:
        samples = np.pad(samples, (0, spec.original_length - samples.shape[0]))
    return AudioBuffer(samples=samples, sample_rate=spec.sample_rate)


def naive_dft_frame(frame: FloatArray) -> ComplexArray:
    """Direct-summation one-sided DFT of a single frame.

    O(N^2); only the self-test and the test suite call it, as an oracle for
    the FFT path.

    Args:
        frame: Real samples of length N (already windowed, if at all).

    Returns:
        Complex vector of length ``N // 2 + 1``.
    """
    frame = np.asarray(frame, dtype=np.float64)
    n_fft = frame.shape[0]
    n = np.arange(n_fft)
    k = np.arange(n_fft // 2 + 1)
    # Reduce k*n modulo N in integers so the angle stays exact.
    angles = -2.0 * np.pi * (np.outer(k, n) % n_fft) / n_fft
    kernel = np.cos(angles) + 1j * np.sin(angles)
    result: ComplexArray = kernel @ frame
    return result
