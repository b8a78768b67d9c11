"""Immutable array containers passed between the DSP and augmentation stages."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from phase_perturbation.errors import InvalidInput
from phase_perturbation.models.policies import StftConfig

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]


def _frozen(array: npt.ArrayLike, dtype: type, ndim: int, what: str) -> np.ndarray:
    data = np.array(array, dtype=dtype)
    if data.ndim != ndim:
        raise InvalidInput(f"{what} must be {ndim}-D, got shape {data.shape}")
    if not np.all(np.isfinite(data)):
        raise InvalidInput(f"{what} contains NaN or Inf")
    data.setflags(write=False)
    return data


@dataclass(frozen=True, eq=False)
class AudioBuffer:
    """Mono samples and their sample rate."""

    samples: FloatArray
    sample_rate: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "samples", _frozen(self.samples, np.float64, 1, "samples")
        )
        if self.sample_rate <= 0:
            raise InvalidInput(f"sample_rate must be positive, got {self.sample_rate}")

    def __len__(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration(self) -> float:
        """Length in seconds."""
        return len(self) / self.sample_rate


@dataclass(frozen=True, eq=False)
class ComplexSpectrogram:
    """One-sided STFT matrix, rows are frequency bins and columns frames."""

    data: ComplexArray
    config: StftConfig
    original_length: int
    sample_rate: int = 16000

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "data", _frozen(self.data, np.complex128, 2, "spectrogram")
        )
        if self.original_length < 0:
            raise InvalidInput("original_length must be non-negative")
        if self.sample_rate <= 0:
            raise InvalidInput(f"sample_rate must be positive, got {self.sample_rate}")

    @property
    def n_bins(self) -> int:
        return int(self.data.shape[0])

    @property
    def n_frames(self) -> int:
        return int(self.data.shape[1])


@dataclass(frozen=True, eq=False)
class PhaseSpectrum:
    """Phase angles in radians, shape (bins, frames)."""

    data: FloatArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "data", _frozen(self.data, np.float64, 2, "phase"))

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.data.shape[0]), int(self.data.shape[1]))


@dataclass(frozen=True, eq=False)
class AmplitudeSpectrum:
    """Non-negative magnitudes, shape (bins, frames)."""

    data: FloatArray

    def __post_init__(self) -> None:
        data = _frozen(self.data, np.float64, 2, "amplitude")
        if np.any(data < 0):
            raise InvalidInput("amplitude contains negative entries")
        object.__setattr__(self, "data", data)

    @property
    def shape(self) -> tuple[int, int]:
        return (int(self.data.shape[0]), int(self.data.shape[1]))
