"""Phase- and amplitude-domain augmentation operations."""

from phase_perturbation.augment.amplitude import (
    amplitude_augment,
    augment_amplitude,
    spec_mask_amplitude,
    vtlp_bin_map,
    vtlp_warp,
)
from phase_perturbation.augment.masks import (
    SampledMask,
    apply_masks,
    mask_matrix,
    sample_freq_masks,
    sample_time_masks,
    time_mask_cap,
)
from phase_perturbation.augment.phase import (
    DEFAULT_OPERATIONS,
    perturb_phase_spectrum,
    phase_perturb,
    randomize_phase,
    rotate_phase_static,
)
from phase_perturbation.augment.random import RandomSource, derive_seed

__all__ = [
    "DEFAULT_OPERATIONS",
    "RandomSource",
    "SampledMask",
    "amplitude_augment",
    "apply_masks",
    "augment_amplitude",
    "derive_seed",
    "mask_matrix",
    "perturb_phase_spectrum",
    "phase_perturb",
    "randomize_phase",
    "rotate_phase_static",
    "sample_freq_masks",
    "sample_time_masks",
    "spec_mask_amplitude",
    "time_mask_cap",
    "vtlp_bin_map",
    "vtlp_warp",
]
