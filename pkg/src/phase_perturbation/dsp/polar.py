"""Polar split of a complex spectrogram into amplitude and phase."""

import numpy as np

from phase_perturbation.dsp.types import (
    AmplitudeSpectrum,
    ComplexSpectrogram,
    PhaseSpectrum,
)
from phase_perturbation.errors import InvalidInput
from phase_perturbation.models.policies import StftConfig


def decompose(spec: ComplexSpectrogram) -> tuple[AmplitudeSpectrum, PhaseSpectrum]:
    """Split into ``|S|`` and the four-quadrant angle of ``S``.

    ``np.angle`` is atan2(imag, real), so a zero entry has phase 0 and a
    negative real entry has phase pi.
    """
    amplitude = AmplitudeSpectrum(np.abs(spec.data))
    phase = PhaseSpectrum(np.angle(spec.data))
    return amplitude, phase


def recompose(
    amplitude: AmplitudeSpectrum,
    phase: PhaseSpectrum,
    config: StftConfig,
    original_length: int,
    sample_rate: int = 16000,
) -> ComplexSpectrogram:
    """Rebuild ``amplitude * exp(j * phase)``.

    Phase values outside [-pi, pi] wrap through the complex exponential.

    Args:
        amplitude: Magnitudes, shape (bins, frames).
        phase: Angles in radians, same shape.
        config: STFT settings carried into the spectrogram.
        original_length: Sample count of the analyzed signal.
        sample_rate: Sample rate of the analyzed signal.

    Raises:
        InvalidInput: Shapes differ. Negative amplitudes are rejected when
            the ``AmplitudeSpectrum`` is built.
    """
    if amplitude.shape != phase.shape:
        raise InvalidInput(
            f"amplitude shape {amplitude.shape} != phase shape {phase.shape}"
        )
    return ComplexSpectrogram(
        data=amplitude.data * np.exp(1j * phase.data),
        config=config,
        original_length=original_length,
        sample_rate=sample_rate,
    )
