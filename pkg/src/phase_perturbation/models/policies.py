"""Pydantic models for STFT settings and augmentation policies."""

import math
from typing import Literal, get_args

from pydantic import BaseModel, ConfigDict, Field, model_validator

PolicyName = Literal[
    "none",
    "phaseaug_static",
    "vtlp",
    "phase_perturbation",
    "phase_perturbation+vtlp",
    "specaug",
    "phase_perturbation+specaug",
]
PhaseOperation = Literal["randomize", "freq_mask", "time_mask"]

POLICY_NAMES: tuple[str, ...] = get_args(PolicyName)


class StftConfig(BaseModel):
    """Frame length, hop and window of the analysis/synthesis pair."""

    model_config = ConfigDict(frozen=True)

    n_fft: int = Field(default=1024, gt=0)
    hop: int = Field(default=256, gt=0)
    window: Literal["hann"] = "hann"
    one_sided: bool = True

    @model_validator(mode="after")
    def _hop_within_frame(self) -> "StftConfig":
        if self.hop > self.n_fft:
            raise ValueError(f"hop ({self.hop}) must not exceed n_fft ({self.n_fft})")
        return self

    @property
    def n_bins(self) -> int:
        """Number of one-sided frequency bins."""
        return self.n_fft // 2 + 1

    def n_frames(self, length: int) -> int:
        """Number of center-padded analysis frames for a signal length."""
        return 1 + length // self.hop


class MaskPolicy(BaseModel):
    """Frequency and time mask parameters (width caps, counts, ratio cap)."""

    model_config = ConfigDict(frozen=True)

    freq_mask_max: int = Field(default=10, ge=0)
    freq_mask_count: int = Field(default=2, ge=0)
    time_mask_max: int = Field(default=45, ge=0)
    time_mask_count: int = Field(default=2, ge=0)
    time_mask_ratio_cap: float = Field(default=0.1, ge=0.0, le=1.0)


class PhaseRandomizationPolicy(BaseModel):
    """Strength and granularity of the Gaussian phase multiplier."""

    model_config = ConfigDict(frozen=True)

    sigma: float = Field(default=0.1, ge=0.0)
    # "column": one multiplier per time frame; "element": one per entry.
    mode: Literal["column", "element"] = "column"


class VtlpPolicy(BaseModel):
    """Warp-factor range and pivot of the piecewise-linear frequency warp."""

    model_config = ConfigDict(frozen=True)

    warp_min: float = Field(default=0.9, gt=0.0)
    warp_max: float = Field(default=1.1, gt=0.0)
    boundary_freq: float = Field(default=4800.0, gt=0.0)
    preserve_energy: bool = True

    @model_validator(mode="after")
    def _ordered_range(self) -> "VtlpPolicy":
        if self.warp_min > self.warp_max:
            raise ValueError(
                f"warp_min ({self.warp_min}) must not exceed warp_max ({self.warp_max})"
            )
        return self


class AugmentPolicy(BaseModel):
    """A named augmentation arm with every sub-policy it may consult."""

    model_config = ConfigDict(frozen=True)

    name: PolicyName = "phase_perturbation"
    stft: StftConfig = StftConfig()
    mask: MaskPolicy = MaskPolicy()
    rand: PhaseRandomizationPolicy = PhaseRandomizationPolicy()
    operations: tuple[PhaseOperation, ...] = ("randomize", "freq_mask", "time_mask")
    selection: Literal["all", "one"] = "all"
    amplitude_mask: MaskPolicy = MaskPolicy()
    vtlp: VtlpPolicy = VtlpPolicy()
    static_angle: float = math.pi / 2
    copies_per_input: int = Field(default=1, ge=1)
    output_bit_depth: Literal["same", "16", "24", "32"] = "same"

    @model_validator(mode="after")
    def _operations_listed_once(self) -> "AugmentPolicy":
        if len(set(self.operations)) != len(self.operations):
            raise ValueError("phase operations must not repeat")
        if self.selection == "one" and not self.operations:
            raise ValueError("selection 'one' needs at least one phase operation")
        return self

    @property
    def uses_phase_perturbation(self) -> bool:
        """Whether the arm runs the three dynamic phase operations."""
        return self.name.startswith("phase_perturbation")

    @property
    def amplitude_operation(self) -> Literal["vtlp", "specaug"] | None:
        """Amplitude-domain operation of the arm, if any."""
        if self.name.endswith("vtlp"):
            return "vtlp"
        if self.name.endswith("specaug"):
            return "specaug"
        return None
