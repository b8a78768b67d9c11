"""Short-time Fourier analysis/synthesis and polar decomposition."""

from phase_perturbation.dsp.polar import decompose, recompose
from phase_perturbation.dsp.stft import (
    WINDOW_SUM_FLOOR,
    check_config,
    hann_window,
    istft,
    naive_dft_frame,
    stft,
    window_sum,
)
from phase_perturbation.dsp.types import (
    AmplitudeSpectrum,
    AudioBuffer,
    ComplexSpectrogram,
    PhaseSpectrum,
)

__all__ = [
    "WINDOW_SUM_FLOOR",
    "AmplitudeSpectrum",
    "AudioBuffer",
    "ComplexSpectrogram",
    "PhaseSpectrum",
    "check_config",
    "decompose",
    "hann_window",
    "istft",
    "naive_dft_frame",
    "recompose",
    "stft",
    "window_sum",
]
