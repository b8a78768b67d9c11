"""Plain-text dump of amplitude/phase matrices for inspection."""

from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from phase_perturbation.dsp.types import FloatArray
from phase_perturbation.errors import FormatError, InvalidInput
from phase_perturbation.models.policies import StftConfig

MatrixKind = Literal["amplitude", "phase"]


class MatrixHeader(BaseModel):
    """First line of a dump: ``#kind v frames n_fft hop sample_rate``."""

    kind: MatrixKind
    n_bins: int = Field(ge=1)
    n_frames: int = Field(ge=1)
    n_fft: int
    hop: int
    sample_rate: int

    def to_line(self) -> str:
        return (
            f"{self.kind} {self.n_bins} {self.n_frames} "
            f"{self.n_fft} {self.hop} {self.sample_rate}"
        )


def dump_matrix(
    path: str | Path,
    matrix: FloatArray,
    kind: MatrixKind,
    config: StftConfig,
    sample_rate: int,
) -> None:
    """Write a header line then one line per frequency bin.

    Values are space-separated with 9 significant digits; row k is bin k.

    Raises:
        InvalidInput: The matrix is not 2-D or holds non-finite values.
        OSError: The file cannot be written.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.size == 0:
        raise InvalidInput(f"expected a non-empty 2-D matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise InvalidInput("matrix contains NaN or Inf")

    header = MatrixHeader(
        kind=kind,
        n_bins=matrix.shape[0],
        n_frames=matrix.shape[1],
        n_fft=config.n_fft,
        hop=config.hop,
        sample_rate=sample_rate,
    )
    with open(path, "w", encoding="utf-8") as fh:
        np.savetxt(
            fh,
            matrix,
            fmt="%.8e",
            delimiter=" ",
            header=header.to_line(),
            comments="#",
        )


def load_matrix(path: str | Path) -> tuple[MatrixHeader, FloatArray]:
    """Parse a file written by ``dump_matrix``.

    Raises:
        FormatError: Header or body does not match the dump layout; the
            offset is the byte position of the offending line.
    """
    text = Path(path).read_text(encoding="utf-8")
    first, _, body = text.partition("\n")
    fields = first[1:].split()
    if not first.startswith("#") or len(fields) != 6:
        raise FormatError("expected '#kind v frames n_fft hop sample_rate'", 0)
    try:
        header = MatrixHeader(
            kind=fields[0],  # type: ignore[arg-type]
            n_bins=int(fields[1]),
            n_frames=int(fields[2]),
            n_fft=int(fields[3]),
            hop=int(fields[4]),
            sample_rate=int(fields[5]),
        )
    except ValueError as exc:
        raise FormatError(f"bad header: {exc}", 0) from None

    rows = [line for line in body.splitlines() if line.strip()]
    if len(rows) != header.n_bins:
        raise FormatError(
            f"header declares {header.n_bins} rows, found {len(rows)}", len(first) + 1
        )
    try:
        matrix = np.array([[float(v) for v in row.split()] for row in rows])
    except ValueError as exc:
        raise FormatError(f"bad matrix body: {exc}", len(first) + 1) from None
    if matrix.shape != (header.n_bins, header.n_frames):
        raise FormatError(
            f"body shape {matrix.shape} does not match header", len(first) + 1
        )
    return header, matrix
