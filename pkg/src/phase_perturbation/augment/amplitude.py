"""Amplitude-spectrum augmentations: SpecAugment-style masking and VTLP."""

from typing import Literal

import numpy as np

from phase_perturbation.augment.masks import (
    mask_matrix,
    sample_freq_masks,
    sample_time_masks,
)
from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.polar import decompose, recompose
from phase_perturbation.dsp.stft import istft, stft
from phase_perturbation.dsp.types import AmplitudeSpectrum, AudioBuffer, FloatArray
from phase_perturbation.errors import InvalidInput, InvalidPolicy
from phase_perturbation.models.policies import MaskPolicy, StftConfig, VtlpPolicy


def spec_mask_amplitude(
    amplitude: AmplitudeSpectrum,
    policy: MaskPolicy,
    rng: RandomSource,
) -> AmplitudeSpectrum:
    """Zero sampled frequency bands, then sampled frame bands.

    Uses the same samplers as phase masking; frequency masks are drawn
    before time masks.
    """
    n_bins, n_frames = amplitude.shape
    masks = sample_freq_masks(n_bins, policy, rng)
    masks += sample_time_masks(n_frames, policy, rng)
    return AmplitudeSpectrum(mask_matrix(amplitude.data, masks))


def _check_knee(n_bins: int, alpha: float, boundary_bin: float) -> None:
    nyquist = float(n_bins - 1)
    knee = alpha * boundary_bin
    if not 0.0 < boundary_bin < nyquist or knee >= nyquist:
        raise InvalidInput(
            f"warp knee {knee:.3f} (boundary bin {boundary_bin:.3f}) "
            f"must lie below the Nyquist bin {nyquist:.0f}"
        )


def vtlp_bin_map(n_bins: int, alpha: float, boundary_bin: float) -> FloatArray:
    """Warped position of every source bin.

    Slope ``alpha`` up to ``boundary_bin``, then a straight segment that
    lands the Nyquist bin on itself.

    Raises:
        InvalidInput: ``alpha * boundary_bin`` reaches Nyquist, which would
            fold the upper segment.
    """
    _check_knee(n_bins, alpha, boundary_bin)
    nyquist = float(n_bins - 1)
    knee = alpha * boundary_bin
    source = np.arange(n_bins, dtype=np.float64)
    upper = knee + (nyquist - knee) * (source - boundary_bin) / (nyquist - boundary_bin)
    warped: FloatArray = np.where(source <= boundary_bin, alpha * source, upper)
    return warped


def _inverse_bin_map(n_bins: int, alpha: float, boundary_bin: float) -> FloatArray:
    nyquist = float(n_bins - 1)
    knee = alpha * boundary_bin
    target = np.arange(n_bins, dtype=np.float64)
    upper = boundary_bin + (target - knee) * (nyquist - boundary_bin) / (nyquist - knee)
    source: FloatArray = np.where(target <= knee, target / alpha, upper)
    return np.clip(source, 0.0, nyquist)


def vtlp_warp(
    amplitude: AmplitudeSpectrum,
    alpha: float,
    policy: VtlpPolicy,
    sample_rate: int,
) -> AmplitudeSpectrum:
    """Warp every frame along the piecewise-linear VTLP frequency map.

    Each output bin reads the source spectrum at the inverse-mapped
    position, interpolating linearly between neighbouring bins. With
    ``policy.preserve_energy`` each frame is rescaled to its original
    energy.

    Args:
        amplitude: Magnitudes, shape (bins, frames).
        alpha: Warp factor.
        policy: Warp range and boundary frequency.
        sample_rate: Rate the spectrum was analyzed at.

    Raises:
        InvalidInput: ``alpha`` lies outside the policy range.
        InvalidPolicy: The boundary frequency is not below Nyquist.
    """
    if not policy.warp_min <= alpha <= policy.warp_max:
        raise InvalidInput(
            f"alpha {alpha} outside [{policy.warp_min}, {policy.warp_max}]"
        )
    nyquist_hz = sample_rate / 2.0
    if policy.boundary_freq >= nyquist_hz:
        raise InvalidPolicy(
            f"boundary_freq {policy.boundary_freq} Hz is not below "
            f"Nyquist {nyquist_hz} Hz"
        )

    data = amplitude.data
    n_bins = data.shape[0]
    boundary_bin = policy.boundary_freq / nyquist_hz * (n_bins - 1)
    _check_knee(n_bins, alpha, boundary_bin)

    source = _inverse_bin_map(n_bins, alpha, boundary_bin)
    lower = np.minimum(np.floor(source).astype(np.intp), n_bins - 2)
    frac = (source - lower)[:, np.newaxis]
    warped = data[lower] * (1.0 - frac) + data[lower + 1] * frac

    if policy.preserve_energy:
        energy_in = np.sum(data**2, axis=0)
        energy_out = np.sum(warped**2, axis=0)
        scale = np.ones_like(energy_in)
        nonzero = energy_out > 0.0
        scale[nonzero] = np.sqrt(energy_in[nonzero] / energy_out[nonzero])
        warped = warped * scale[np.newaxis, :]

    return AmplitudeSpectrum(warped)


def augment_amplitude(
    amplitude: AmplitudeSpectrum,
    which: Literal["specaug", "vtlp"],
    params: MaskPolicy | VtlpPolicy,
    rng: RandomSource,
    sample_rate: int,
) -> AmplitudeSpectrum:
    """Dispatch one amplitude operation; VTLP draws alpha uniformly."""
    if which == "specaug":
        if not isinstance(params, MaskPolicy):
            raise InvalidPolicy("specaug needs a MaskPolicy")
        return spec_mask_amplitude(amplitude, params, rng)
    if not isinstance(params, VtlpPolicy):
        raise InvalidPolicy("vtlp needs a VtlpPolicy")
    alpha = rng.uniform(params.warp_min, params.warp_max)
    return vtlp_warp(amplitude, alpha, params, sample_rate)


def amplitude_augment(
    audio: AudioBuffer,
    config: StftConfig,
    which: Literal["specaug", "vtlp"],
    params: MaskPolicy | VtlpPolicy,
    rng: RandomSource,
) -> AudioBuffer:
    """Augment the amplitude spectrum and resynthesize with the original phase."""
    amplitude, phase = decompose(stft(audio, config))
    amplitude = augment_amplitude(amplitude, which, params, rng, audio.sample_rate)
    return istft(recompose(amplitude, phase, config, len(audio), audio.sample_rate))
