"""Pydantic models for WAV metadata, batch manifests and verify reports."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

MANIFEST_COLUMNS = (
    "input_path",
    "output_path",
    "policy",
    "master_seed",
    "file_seed",
    "clip_count",
    "input_duration",
    "output_duration",
)


class WavMeta(BaseModel):
    """Header facts of a decoded WAV file."""

    model_config = ConfigDict(frozen=True)

    sample_rate: int = Field(gt=0)
    channels: int = Field(ge=1)
    bit_depth: Literal[16, 24, 32]
    frame_count: int = Field(ge=0)

    @property
    def is_float(self) -> bool:
        """32-bit files are IEEE float; 16 and 24 are integer PCM."""
        return self.bit_depth == 32


class ManifestEntry(BaseModel):
    """One augmented output and where it came from."""

    input_path: str
    output_path: str
    policy: str
    master_seed: int
    file_seed: int
    clip_count: int = Field(ge=0)
    input_duration: float
    output_duration: float

    def to_row(self) -> str:
        """Render as one tab-separated manifest line (no newline)."""
        return "\t".join(
            [
                self.input_path,
                self.output_path,
                self.policy,
                str(self.master_seed),
                str(self.file_seed),
                str(self.clip_count),
                f"{self.input_duration:.6f}",
                f"{self.output_duration:.6f}",
            ]
        )


class Manifest(BaseModel):
    """Result of a batch run: entries in input order plus skipped inputs."""

    entries: list[ManifestEntry] = []
    skipped: list[str] = []

    @property
    def processed(self) -> int:
        """Number of distinct inputs that produced outputs."""
        return len({entry.input_path for entry in self.entries})

    def to_tsv(self) -> str:
        """Render the manifest file body (UTF-8 text, trailing newline)."""
        lines = ["\t".join(MANIFEST_COLUMNS)]
        lines.extend(entry.to_row() for entry in self.entries)
        lines.append(f"# processed\t{self.processed}")
        lines.append(f"# skipped\t{len(self.skipped)}")
        lines.extend(f"# skipped-file\t{path}" for path in self.skipped)
        return "\n".join(lines) + "\n"


class CheckResult(BaseModel):
    """Outcome of one self-test measurement."""

    name: str
    value: float
    tolerance: float
    passed: bool


class VerifyReport(BaseModel):
    """All self-test measurements for one signal."""

    source: str
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        """True when every check is within tolerance."""
        return all(check.passed for check in self.checks)

    @property
    def failing(self) -> list[str]:
        """Names of the checks that exceeded their tolerance."""
        return [check.name for check in self.checks if not check.passed]
