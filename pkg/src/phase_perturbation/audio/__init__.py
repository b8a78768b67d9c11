"""WAV codec and spectrum dump format."""

from phase_perturbation.audio.matrix import (
    MatrixHeader,
    MatrixKind,
    dump_matrix,
    load_matrix,
)
from phase_perturbation.audio.wav import read_wav, write_wav

__all__ = [
    "MatrixHeader",
    "MatrixKind",
    "dump_matrix",
    "load_matrix",
    "read_wav",
    "write_wav",
]
