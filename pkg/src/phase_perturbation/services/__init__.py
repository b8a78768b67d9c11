"""Service modules: policy composition, batch runs, inspection, self-test."""

from phase_perturbation.services.augmentation import augment_audio, augment_polar
from phase_perturbation.services.batch import BatchRunner, run_batch
from phase_perturbation.services.inspection import inspect
from phase_perturbation.services.verify import verify

__all__ = [
    "BatchRunner",
    "augment_audio",
    "augment_polar",
    "inspect",
    "run_batch",
    "verify",
]
