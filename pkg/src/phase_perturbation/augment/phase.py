"""Phase-spectrum perturbations: randomization, masking, static rotation."""

from collections.abc import Sequence
from typing import Literal

import numpy as np

from phase_perturbation.augment.masks import (
    apply_masks,
    sample_freq_masks,
    sample_time_masks,
)
from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.polar import decompose, recompose
from phase_perturbation.dsp.stft import istft, stft
from phase_perturbation.dsp.types import AudioBuffer, PhaseSpectrum
from phase_perturbation.models.policies import (
    MaskPolicy,
    PhaseOperation,
    PhaseRandomizationPolicy,
    StftConfig,
)

DEFAULT_OPERATIONS: tuple[PhaseOperation, ...] = (
    "randomize",
    "freq_mask",
    "time_mask",
)


def randomize_phase(
    phase: PhaseSpectrum,
    policy: PhaseRandomizationPolicy,
    rng: RandomSource,
) -> PhaseSpectrum:
    """Scale phase angles by Gaussian multipliers drawn from N(1, sigma**2).

    In ``column`` mode one multiplier is drawn per time frame (frames in
    order) and shared by every bin of that frame. ``element`` mode draws one
    multiplier per entry, frame by frame, which distorts the waveform far
    more and is kept for comparison.
    """
    n_bins, n_frames = phase.shape
    if policy.mode == "column":
        multipliers = rng.normal(1.0, policy.sigma, n_frames)[np.newaxis, :]
    else:
        multipliers = rng.normal(1.0, policy.sigma, (n_frames, n_bins)).T
    return PhaseSpectrum(phase.data * multipliers)


def rotate_phase_static(phase: PhaseSpectrum, angle: float) -> PhaseSpectrum:
    """Add one constant angle (radians) to every entry."""
    return PhaseSpectrum(phase.data + angle)


def perturb_phase_spectrum(
    phase: PhaseSpectrum,
    mask_policy: MaskPolicy,
    rand_policy: PhaseRandomizationPolicy,
    rng: RandomSource,
    *,
    operations: Sequence[PhaseOperation] = DEFAULT_OPERATIONS,
    selection: Literal["all", "one"] = "all",
) -> PhaseSpectrum:
    """Run the dynamic phase operations on a phase matrix.

    Args:
        phase: Phase spectrum to perturb.
        mask_policy: Frequency/time mask parameters.
        rand_policy: Randomization strength and mode.
        rng: Random source, consumed in operation order.
        operations: Operations in application order.
        selection: ``all`` applies every listed operation; ``one`` draws a
            single operation uniformly before drawing its parameters.

    Returns:
        New phase spectrum; the input is untouched.
    """
    if selection == "one" and operations:
        operations = [operations[rng.integer(len(operations) - 1)]]

    n_bins, n_frames = phase.shape
    for operation in operations:
        if operation == "randomize":
            phase = randomize_phase(phase, rand_policy, rng)
        elif operation == "freq_mask":
            phase = apply_masks(phase, sample_freq_masks(n_bins, mask_policy, rng))
        else:
            phase = apply_masks(phase, sample_time_masks(n_frames, mask_policy, rng))
    return phase


def phase_perturb(
    audio: AudioBuffer,
    config: StftConfig,
    mask_policy: MaskPolicy,
    rand_policy: PhaseRandomizationPolicy,
    rng: RandomSource,
    *,
    operations: Sequence[PhaseOperation] = DEFAULT_OPERATIONS,
    selection: Literal["all", "one"] = "all",
) -> AudioBuffer:
    """Perturb the phase of a waveform and resynthesize it.

    The amplitude spectrum is recombined unchanged, so only phase differs
    from a plain STFT round trip. Output length equals input length.
    """
    amplitude, phase = decompose(stft(audio, config))
    phase = perturb_phase_spectrum(
        phase,
        mask_policy,
        rand_policy,
        rng,
        operations=operations,
        selection=selection,
    )
    return istft(recompose(amplitude, phase, config, len(audio), audio.sample_rate))
