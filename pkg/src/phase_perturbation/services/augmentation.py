"""Policy composition: one STFT, amplitude ops, phase ops, one iSTFT."""

from phase_perturbation.augment.amplitude import augment_amplitude
from phase_perturbation.augment.phase import (
    perturb_phase_spectrum,
    rotate_phase_static,
)
from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.polar import decompose, recompose
from phase_perturbation.dsp.stft import istft, stft
from phase_perturbation.dsp.types import AmplitudeSpectrum, AudioBuffer, PhaseSpectrum
from phase_perturbation.models.policies import AugmentPolicy


def augment_polar(
    amplitude: AmplitudeSpectrum,
    phase: PhaseSpectrum,
    policy: AugmentPolicy,
    rng: RandomSource,
    sample_rate: int,
) -> tuple[AmplitudeSpectrum, PhaseSpectrum]:
    """Apply a policy arm to a polar spectrum pair.

    Amplitude operations run (and draw from ``rng``) before phase
    operations. Whichever half the arm does not touch is returned as the
    very same object that was passed in.

    Args:
        amplitude: Magnitudes from ``decompose``.
        phase: Angles from ``decompose``.
        policy: Arm and sub-policies.
        rng: Random source for this output file.
        sample_rate: Rate of the analyzed signal (VTLP needs Nyquist).

    Returns:
        Tuple of (amplitude, phase) ready for ``recompose``.
    """
    operation = policy.amplitude_operation
    if operation == "specaug":
        amplitude = augment_amplitude(
            amplitude, "specaug", policy.amplitude_mask, rng, sample_rate
        )
    elif operation == "vtlp":
        amplitude = augment_amplitude(amplitude, "vtlp", policy.vtlp, rng, sample_rate)

    if policy.name == "phaseaug_static":
        phase = rotate_phase_static(phase, policy.static_angle)
    elif policy.uses_phase_perturbation:
        phase = perturb_phase_spectrum(
            phase,
            policy.mask,
            policy.rand,
            rng,
            operations=policy.operations,
            selection=policy.selection,
        )
    return amplitude, phase


def augment_audio(
    audio: AudioBuffer, policy: AugmentPolicy, rng: RandomSource
) -> AudioBuffer:
    """Run one policy arm on a waveform; the ``none`` arm is a plain resynthesis."""
    amplitude, phase = decompose(stft(audio, policy.stft))
    amplitude, phase = augment_polar(amplitude, phase, policy, rng, audio.sample_rate)
    return istft(
        recompose(amplitude, phase, policy.stft, len(audio), audio.sample_rate)
    )
