"""Batch augmentation of a directory tree of WAV files."""

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from phase_perturbation.audio.wav import read_wav, write_wav
from phase_perturbation.augment.random import RandomSource, derive_seed
from phase_perturbation.errors import EmptyInput, InvalidInput, PhasePerturbationError
from phase_perturbation.logging import logger
from phase_perturbation.models.policies import AugmentPolicy
from phase_perturbation.models.records import Manifest, ManifestEntry
from phase_perturbation.services.augmentation import augment_audio

MANIFEST_NAME = "manifest.tsv"


def find_inputs(in_dir: Path, out_dir: Path | None = None) -> list[Path]:
    """All ``*.wav`` files under ``in_dir`` (any case), sorted, minus ``out_dir``."""
    excluded = out_dir.resolve() if out_dir is not None else None
    inputs = []
    for path in in_dir.rglob("*"):
        if not path.is_file() or path.suffix.lower() != ".wav":
            continue
        if excluded is not None and path.resolve().is_relative_to(excluded):
            continue
        inputs.append(path)
    return sorted(inputs, key=lambda p: p.relative_to(in_dir).as_posix())


def output_name(input_path: Path, policy_name: str, copy_index: int) -> str:
    """``<stem>.<policy>.<copy>.wav``."""
    return f"{input_path.stem}.{policy_name}.{copy_index}.wav"


def find_collisions(in_dir: Path, inputs: list[Path]) -> set[Path]:
    """Inputs whose outputs would land on an earlier input's output names.

    Two files in one directory with the same stem (``a.wav``, ``a.WAV``) map
    to the same ``<stem>.<policy>.<copy>.wav``. The first in sorted order
    keeps the name; every later one is returned here and skipped.
    """
    claimed: dict[str, Path] = {}
    colliding: set[Path] = set()
    for path in inputs:
        relative = path.relative_to(in_dir)
        key = (relative.parent / relative.stem).as_posix()
        if key in claimed:
            logger.warning(
                "Skipping %s: outputs would overwrite those of %s",
                relative.as_posix(),
                claimed[key].relative_to(in_dir).as_posix(),
                extra={"input_path": relative.as_posix()},
            )
            colliding.add(path)
        else:
            claimed[key] = path
    return colliding


class BatchRunner:
    """Augments every input file of one batch with a fixed policy and seed."""

    def __init__(
        self,
        in_dir: Path,
        out_dir: Path,
        policy: AugmentPolicy,
        master_seed: int,
    ) -> None:
        """Initialize the runner.

        Args:
            in_dir: Root of the input tree.
            out_dir: Root of the output tree (created if missing).
            policy: Augmentation arm, shared read-only by all workers.
            master_seed: Seed every per-file seed is derived from.
        """
        self.in_dir = in_dir
        self.out_dir = out_dir
        self.policy = policy
        self.master_seed = master_seed

    def process(self, input_path: Path) -> list[ManifestEntry] | None:
        """Write every augmented copy of one input.

        Returns:
            Manifest entries in copy order, or None if the input was skipped.
        """
        relative = input_path.relative_to(self.in_dir)
        rel_posix = relative.as_posix()
        try:
            audio, meta = read_wav(input_path)
            bit_depth = (
                meta.bit_depth
                if self.policy.output_bit_depth == "same"
                else int(self.policy.output_bit_depth)
            )
            target_dir = self.out_dir / relative.parent
            target_dir.mkdir(parents=True, exist_ok=True)

            entries = []
            for copy_index in range(self.policy.copies_per_input):
                seed = derive_seed(self.master_seed, rel_posix, copy_index)
                augmented = augment_audio(audio, self.policy, RandomSource(seed))
                output_path = target_dir / output_name(
                    input_path, self.policy.name, copy_index
                )
                clipped = write_wav(output_path, augmented, bit_depth)
                entries.append(
                    ManifestEntry(
                        input_path=rel_posix,
                        output_path=output_path.relative_to(self.out_dir).as_posix(),
                        policy=self.policy.name,
                        master_seed=self.master_seed,
                        file_seed=seed,
                        clip_count=clipped,
                        input_duration=audio.duration,
                        output_duration=augmented.duration,
                    )
                )
                logger.debug(
                    "Wrote %s",
                    output_path,
                    extra={"input_path": rel_posix, "seed": str(seed)},
                )
        except (PhasePerturbationError, OSError) as e:
            logger.warning(
                "Skipping %s: %s", rel_posix, str(e), extra={"input_path": rel_posix}
            )
            return None
        return entries


def run_batch(
    in_dir: str | Path,
    out_dir: str | Path,
    policy: AugmentPolicy,
    master_seed: int,
    jobs: int = 1,
) -> Manifest:
    """Augment every WAV under ``in_dir`` and write ``manifest.tsv`` to ``out_dir``.

    Outputs depend only on file content, relative path, policy and master
    seed; worker count and completion order never change a byte.

    Args:
        in_dir: Input root, searched recursively.
        out_dir: Output root; mirrors the input layout.
        policy: Augmentation arm.
        master_seed: Batch seed.
        jobs: Worker threads.

    Returns:
        The manifest, entries ordered by input path then copy index.

    Raises:
        InvalidInput: ``in_dir`` is not a directory or ``jobs`` < 1.
        EmptyInput: No WAV files were found.
    """
    in_dir = Path(in_dir)
    out_dir = Path(out_dir)
    if not in_dir.is_dir():
        raise InvalidInput(f"input directory {in_dir} does not exist")
    if jobs < 1:
        raise InvalidInput(f"jobs must be at least 1, got {jobs}")

    inputs = find_inputs(in_dir, out_dir)
    if not inputs:
        raise EmptyInput(f"no WAV files found under {in_dir}")
    colliding = find_collisions(in_dir, inputs)
    runnable = [path for path in inputs if path not in colliding]

    out_dir.mkdir(parents=True, exist_ok=True)
    runner = BatchRunner(in_dir, out_dir, policy, master_seed)
    logger.info(
        "Augmenting %d files with policy %s (seed=%d, jobs=%d)",
        len(inputs),
        policy.name,
        master_seed,
        jobs,
        extra={"policy": policy.name, "seed": str(master_seed)},
    )

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = dict(zip(runnable, pool.map(runner.process, runnable), strict=True))

    manifest = Manifest()
    for input_path in inputs:
        entries = results.get(input_path)
        if entries is None:
            manifest.skipped.append(input_path.relative_to(in_dir).as_posix())
        else:
            manifest.entries.extend(entries)

    (out_dir / MANIFEST_NAME).write_text(manifest.to_tsv(), encoding="utf-8")
    logger.info(
        "Processed %d files, skipped %d, wrote %d outputs",
        manifest.processed,
        len(manifest.skipped),
        len(manifest.entries),
    )
    return manifest
