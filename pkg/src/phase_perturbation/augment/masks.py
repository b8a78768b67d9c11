"""Frequency and time mask sampling shared by phase and amplitude masking."""

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.types import FloatArray, PhaseSpectrum
from phase_perturbation.errors import InvalidInput, InvalidPolicy
from phase_perturbation.logging import logger
from phase_perturbation.models.policies import MaskPolicy


class SampledMask(BaseModel):
    """A contiguous band ``[start, start + width)`` along one axis."""

    model_config = ConfigDict(frozen=True)

    axis: Literal["frequency", "time"]
    start: int = Field(ge=0)
    width: int = Field(ge=0)

    @property
    def stop(self) -> int:
        return self.start + self.width


def _sample(
    axis: Literal["frequency", "time"],
    length: int,
    max_width: int,
    count: int,
    rng: RandomSource,
) -> list[SampledMask]:
    masks = []
    for _ in range(count):
        width = rng.integer(max_width)
        start = rng.integer(length - width)
        masks.append(SampledMask(axis=axis, start=start, width=width))
    return masks


def sample_freq_masks(
    n_bins: int, policy: MaskPolicy, rng: RandomSource
) -> list[SampledMask]:
    """Draw ``freq_mask_count`` frequency bands of width uniform in {0..F}.

    Args:
        n_bins: Number of frequency bins v.
        policy: Mask parameters.
        rng: Source consumed as (width, start) pairs in order.

    Raises:
        InvalidPolicy: F exceeds the bin count.
    """
    if policy.freq_mask_max > n_bins:
        raise InvalidPolicy(
            f"freq_mask_max ({policy.freq_mask_max}) exceeds bin count ({n_bins})"
        )
    return _sample(
        "frequency", n_bins, policy.freq_mask_max, policy.freq_mask_count, rng
    )


def time_mask_cap(n_frames: int, policy: MaskPolicy) -> int:
    """Effective time mask cap ``min(T, floor(p * frames))``."""
    return min(policy.time_mask_max, math.floor(policy.time_mask_ratio_cap * n_frames))


def sample_time_masks(
    n_frames: int, policy: MaskPolicy, rng: RandomSource
) -> list[SampledMask]:
    """Draw ``time_mask_count`` frame bands capped at ``p`` of the length."""
    return _sample(
        "time",
        n_frames,
        time_mask_cap(n_frames, policy),
        policy.time_mask_count,
        rng,
    )


def mask_matrix(data: FloatArray, masks: list[SampledMask]) -> FloatArray:
    """Copy of ``data`` (bins x frames) with every masked span set to zero.

    Raises:
        InvalidInput: A mask runs past the end of its axis.
    """
    out = np.array(data, dtype=np.float64)
    n_bins, n_frames = out.shape
    for mask in masks:
        length = n_bins if mask.axis == "frequency" else n_frames
        if mask.stop > length:
            raise InvalidInput(
                f"{mask.axis} mask [{mask.start}, {mask.stop}) "
                f"exceeds axis length {length}"
            )
        if mask.axis == "frequency":
            out[mask.start : mask.stop, :] = 0.0
        else:
            out[:, mask.start : mask.stop] = 0.0
    logger.debug("Applied %d masks to a %dx%d matrix", len(masks), n_bins, n_frames)
    return out


def apply_masks(phase: PhaseSpectrum, masks: list[SampledMask]) -> PhaseSpectrum:
    """Set the phase inside every mask to 0 radians."""
    return PhaseSpectrum(mask_matrix(phase.data, masks))
