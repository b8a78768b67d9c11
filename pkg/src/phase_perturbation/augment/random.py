"""Seeded random source and stable per-file seed derivation."""

import hashlib

import numpy as np

from phase_perturbation.dsp.types import FloatArray
from phase_perturbation.errors import InvalidInput

SEED_BITS = 64


def derive_seed(master_seed: int, relative_path: str, copy_index: int) -> int:
    """Stable 64-bit seed for one output file.

    Depends only on its arguments, so workers need no coordination and the
    processing order never changes a seed.

    Args:
        master_seed: Seed given to the batch run.
        relative_path: POSIX path of the input relative to the input root.
        copy_index: Zero-based index of the augmented copy.

    Returns:
        Unsigned 64-bit integer.
    """
    payload = f"{master_seed}\x00{relative_path}\x00{copy_index}".encode()
    digest = hashlib.blake2b(payload, digest_size=SEED_BITS // 8).digest()
    return int.from_bytes(digest, "little")


class RandomSource:
    """PCG64-backed draws owned by a single augmentation call."""

    algorithm = "PCG64"

    def __init__(self, seed: int) -> None:
        """Initialize the generator.

        Args:
            seed: Unsigned 64-bit seed.

        Raises:
            InvalidInput: The seed is outside [0, 2**64).
        """
        if not 0 <= seed < 2**SEED_BITS:
            raise InvalidInput(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, algorithm={self.algorithm!r})"

    def normal(
        self, loc: float, scale: float, size: int | tuple[int, ...]
    ) -> FloatArray:
        """Gaussian draws N(loc, scale**2)."""
        draws: FloatArray = self._generator.normal(loc, scale, size)
        return draws

    def integer(self, high: int) -> int:
        """One integer uniform over {0, ..., high}."""
        return int(self._generator.integers(0, high, endpoint=True))

    def uniform(self, low: float, high: float) -> float:
        """One float uniform over [low, high)."""
        return float(self._generator.uniform(low, high))
