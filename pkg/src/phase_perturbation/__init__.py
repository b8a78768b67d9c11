"""Phase Perturbation - phase-spectrum speech data augmentation."""

__version__ = "0.1.0"
