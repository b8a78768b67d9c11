"""Dump the amplitude or phase spectrum of one WAV file."""

from pathlib import Path

from phase_perturbation.audio.matrix import MatrixKind, dump_matrix
from phase_perturbation.audio.wav import read_wav
from phase_perturbation.augment.random import RandomSource
from phase_perturbation.dsp.polar import decompose
from phase_perturbation.dsp.stft import stft
from phase_perturbation.logging import logger
from phase_perturbation.models.policies import AugmentPolicy, StftConfig
from phase_perturbation.services.augmentation import augment_polar


def inspect(
    in_path: str | Path,
    what: MatrixKind,
    out_path: str | Path,
    policy: AugmentPolicy | None = None,
    seed: int = 0,
    *,
    config: StftConfig | None = None,
) -> None:
    """Write the requested spectrum of ``in_path`` with ``dump_matrix``.

    Args:
        in_path: WAV file to analyze.
        what: ``amplitude`` or ``phase``.
        out_path: Dump destination.
        policy: If given, dump the spectrum after this arm is applied
            (pre-iSTFT) using ``RandomSource(seed)``.
        seed: Seed for the augmentation draws.
        config: STFT settings; defaults to the policy's, else 1024/256.
    """
    audio, _meta = read_wav(in_path)
    if config is None:
        config = policy.stft if policy is not None else StftConfig()
    amplitude, phase = decompose(stft(audio, config))
    if policy is not None:
        amplitude, phase = augment_polar(
            amplitude, phase, policy, RandomSource(seed), audio.sample_rate
        )

    matrix = amplitude.data if what == "amplitude" else phase.data
    dump_matrix(out_path, matrix, what, config, audio.sample_rate)
    logger.info(
        "Dumped %s spectrum (%d x %d) of %s to %s",
        what,
        matrix.shape[0],
        matrix.shape[1],
        in_path,
        out_path,
    )
