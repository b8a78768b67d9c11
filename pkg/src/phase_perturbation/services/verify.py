"""Self-test of the STFT pair and the augmentation invariants."""

from pathlib import Path

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from phase_perturbation.audio.wav import read_wav
from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.polar import decompose, recompose
from phase_perturbation.dsp.stft import hann_window, istft, naive_dft_frame, stft
from phase_perturbation.dsp.types import AudioBuffer, FloatArray
from phase_perturbation.logging import logger
from phase_perturbation.models.policies import AugmentPolicy, StftConfig
from phase_perturbation.models.records import CheckResult, VerifyReport
from phase_perturbation.services.augmentation import augment_audio, augment_polar

ROUND_TRIP_TOLERANCE = 1e-6
ORACLE_TOLERANCE = 1e-9
PARSEVAL_TOLERANCE = 1e-6
POLAR_TOLERANCE = 1e-12
ORACLE_FRAMES = 8


def synthesize_noise(
    seed: int = 0, seconds: float = 2.0, sample_rate: int = 16000
) -> AudioBuffer:
    """Gaussian white noise (std 0.25) for the default self-test."""
    rng = RandomSource(seed)
    samples = rng.normal(0.0, 0.25, int(seconds * sample_rate))
    return AudioBuffer(samples=samples, sample_rate=sample_rate)


def corrupted_window(n_fft: int) -> FloatArray:
    """Hann window with its first quarter attenuated; the negative control."""
    window = hann_window(n_fft)
    window[: n_fft // 4] *= 0.5
    return window


def _check(name: str, value: float, tolerance: float) -> CheckResult:
    result = CheckResult(
        name=name, value=value, tolerance=tolerance, passed=value <= tolerance
    )
    if result.passed:
        logger.info(
            "%s: %.3e (tolerance %.0e)", name, value, tolerance, extra={"check": name}
        )
    else:
        logger.error(
            "%s: %.3e exceeds tolerance %.0e",
            name,
            value,
            tolerance,
            extra={"check": name},
        )
    return result


def verify(
    in_path: str | Path | None = None,
    *,
    config: StftConfig | None = None,
    corrupt_window: bool = False,
    seed: int = 0,
) -> VerifyReport:
    """Measure reconstruction, oracle and invariance errors on one signal.

    Args:
        in_path: WAV file to check; synthesized noise when omitted.
        config: STFT settings (1024-point frames, hop 256 when omitted).
        corrupt_window: Analyze with a damaged window so checks must fail.
        seed: Seed for the synthesized signal and the augmentation draws.

    Returns:
        Report with one ``CheckResult`` per measurement.
    """
    config = config or StftConfig()
    if in_path is None:
        audio = synthesize_noise(seed)
        source = "synthesized noise"
    else:
        audio, _meta = read_wav(in_path)
        source = str(in_path)

    window = corrupted_window(config.n_fft) if corrupt_window else None
    spec = stft(audio, config, window=window)
    hann = hann_window(config.n_fft)
    checks = []

    reconstructed = istft(spec).samples
    half = config.n_fft // 2
    interior = slice(None)
    if len(audio) >= 2 * config.n_fft:
        interior = slice(half, len(audio) - half)
    checks.append(
        _check(
            "round_trip",
            float(np.max(np.abs(reconstructed[interior] - audio.samples[interior]))),
            ROUND_TRIP_TOLERANCE,
        )
    )

    padded = np.pad(audio.samples, half, mode="reflect")
    frames = sliding_window_view(padded, config.n_fft)[:: config.hop]
    count = min(ORACLE_FRAMES, spec.n_frames)
    picks = np.linspace(0, spec.n_frames - 1, count).astype(int)
    oracle_error = 0.0
    parseval_error = 0.0
    for m in picks:
        windowed = frames[m] * hann
        bins = spec.data[:, m]
        oracle_error = max(
            oracle_error, float(np.max(np.abs(bins - naive_dft_frame(windowed))))
        )
        time_energy = float(np.sum(windowed**2))
        power = np.abs(bins) ** 2
        freq_energy = (power[0] + power[-1] + 2.0 * np.sum(power[1:-1])) / config.n_fft
        parseval_error = max(
            parseval_error, abs(time_energy - freq_energy) / max(time_energy, 1e-300)
        )
    checks.append(_check("oracle_dft", oracle_error, ORACLE_TOLERANCE))
    checks.append(_check("parseval", parseval_error, PARSEVAL_TOLERANCE))

    amplitude, phase = decompose(spec)
    rebuilt = recompose(
        amplitude, phase, config, spec.original_length, spec.sample_rate
    )
    scale = max(1.0, float(np.max(np.abs(spec.data))))
    checks.append(
        _check(
            "polar_round_trip",
            float(np.max(np.abs(rebuilt.data - spec.data))) / scale,
            POLAR_TOLERANCE,
        )
    )

    phase_policy = AugmentPolicy(name="phase_perturbation", stft=config)
    amp_out, phase_out = augment_polar(
        amplitude, phase, phase_policy, RandomSource(seed), audio.sample_rate
    )
    checks.append(
        _check(
            "phase_only_invariance",
            float(np.count_nonzero(amp_out.data != amplitude.data)),
            0.0,
        )
    )
    # The spectrum handed to synthesis must still carry the input magnitudes.
    resynth_amp, _ = decompose(
        recompose(amp_out, phase_out, config, len(audio), audio.sample_rate)
    )
    checks.append(
        _check(
            "phase_only_magnitude",
            float(np.max(np.abs(resynth_amp.data - amplitude.data))) / scale,
            POLAR_TOLERANCE,
        )
    )

    amp_policy = AugmentPolicy(name="specaug", stft=config)
    amp_out, phase_out = augment_polar(
        amplitude, phase, amp_policy, RandomSource(seed), audio.sample_rate
    )
    checks.append(
        _check(
            "amplitude_only_invariance",
            float(np.count_nonzero(phase_out.data != phase.data)),
            0.0,
        )
    )
    _, resynth_phase = decompose(
        recompose(amp_out, phase_out, config, len(audio), audio.sample_rate)
    )
    # Phase is undefined where a mask zeroed the magnitude.
    live = amp_out.data > 0
    drift = np.angle(np.exp(1j * (resynth_phase.data - phase.data)))[live]
    checks.append(
        _check(
            "amplitude_only_phase",
            float(np.max(np.abs(drift), initial=0.0)),
            POLAR_TOLERANCE,
        )
    )

    perturbed = augment_audio(audio, phase_policy, RandomSource(seed))
    checks.append(
        _check("length_preservation", float(abs(len(perturbed) - len(audio))), 0.0)
    )

    return VerifyReport(source=source, checks=checks)
