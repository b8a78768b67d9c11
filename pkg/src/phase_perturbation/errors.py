"""Exception hierarchy for Phase Perturbation."""


class PhasePerturbationError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(PhasePerturbationError, ValueError):
    """Input data violates a precondition (empty audio, NaN, bad dims)."""


class UnsupportedConfig(PhasePerturbationError, ValueError):
    """STFT configuration outside what the analysis path supports."""


class InvalidPolicy(PhasePerturbationError, ValueError):
    """Augmentation policy cannot be applied to the given spectrum."""


class EmptyInput(PhasePerturbationError):
    """A batch input directory holds no WAV files."""


class UnsupportedFormat(PhasePerturbationError):
    """WAV codec or bit depth this package does not decode."""


class FormatError(PhasePerturbationError):
    """Malformed or truncated RIFF/WAVE data."""

    def __init__(self, message: str, offset: int) -> None:
        """Initialize with the byte offset where parsing failed.

        Args:
            message: Description of the problem.
            offset: Byte offset into the file.
        """
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class ConfigError(PhasePerturbationError):
    """Policy config file is malformed or carries a bad value."""

    def __init__(self, message: str, key: str | None = None) -> None:
        """Initialize with the offending key, if known.

        Args:
            message: Description of the problem.
            key: Config key (``section.key``) that caused the error.
        """
        super().__init__(message)
        self.key = key
