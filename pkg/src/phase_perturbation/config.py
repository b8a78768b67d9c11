"""Configuration management for Phase Perturbation.

Two layers: process settings read from the environment (``Config``), and
augmentation policies read from flat ``section.key = value`` files
(``load_config`` / ``dump_config``).
"""

import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError

from phase_perturbation.errors import ConfigError
from phase_perturbation.models.policies import AugmentPolicy

load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Config:
    """Process settings loaded from environment variables."""

    def __init__(self) -> None:
        """Initialize configuration from environment variables.

        Raises:
            ConfigError: A variable holds an unusable value.
        """
        self.log_level = os.getenv("PHASEPERTURB_LOG", "INFO").upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(
                f"PHASEPERTURB_LOG must be one of {', '.join(LOG_LEVELS)}, "
                f"got {self.log_level!r}",
                key="PHASEPERTURB_LOG",
            )
        self.json_logs = os.getenv("PHASEPERTURB_JSON_LOGS", "").lower() in (
            "1",
            "true",
            "yes",
        )
        try:
            self.jobs = int(os.getenv("PHASEPERTURB_JOBS", "1"))
        except ValueError:
            self.jobs = 0
        if self.jobs < 1:
            raise ConfigError(
                "PHASEPERTURB_JOBS must be a positive integer", key="PHASEPERTURB_JOBS"
            )


# Global config instance - initialized lazily to allow testing
_config: Config | None = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config()
    return _config


def init_config() -> Config:
    """Rebuild and return the global configuration from the environment."""
    global _config
    _config = Config()
    return _config


# Config file key -> (path of nested model fields inside AugmentPolicy).
# Order here is the canonical serialization order.
CONFIG_KEYS: dict[str, tuple[str, ...]] = {
    "policy.name": ("name",),
    "policy.static_angle": ("static_angle",),
    "policy.copies_per_input": ("copies_per_input",),
    "policy.output_bit_depth": ("output_bit_depth",),
    "stft.n_fft": ("stft", "n_fft"),
    "stft.hop": ("stft", "hop"),
    "stft.window": ("stft", "window"),
    "stft.one_sided": ("stft", "one_sided"),
    "phase.sigma": ("rand", "sigma"),
    "phase.randomization": ("rand", "mode"),
    "phase.freq_mask_max": ("mask", "freq_mask_max"),
    "phase.freq_mask_count": ("mask", "freq_mask_count"),
    "phase.time_mask_max": ("mask", "time_mask_max"),
    "phase.time_mask_count": ("mask", "time_mask_count"),
    "phase.time_mask_ratio_cap": ("mask", "time_mask_ratio_cap"),
    "phase.operations": ("operations",),
    "phase.selection": ("selection",),
    "specaug.freq_mask_max": ("amplitude_mask", "freq_mask_max"),
    "specaug.freq_mask_count": ("amplitude_mask", "freq_mask_count"),
    "specaug.time_mask_max": ("amplitude_mask", "time_mask_max"),
    "specaug.time_mask_count": ("amplitude_mask", "time_mask_count"),
    "specaug.time_mask_ratio_cap": ("amplitude_mask", "time_mask_ratio_cap"),
    "vtlp.warp_min": ("vtlp", "warp_min"),
    "vtlp.warp_max": ("vtlp", "warp_max"),
    "vtlp.boundary_freq": ("vtlp", "boundary_freq"),
    "vtlp.preserve_energy": ("vtlp", "preserve_energy"),
}
_FIELD_KEYS = {path: key for key, path in CONFIG_KEYS.items()}


def _parse_value(key: str, raw: str) -> Any:
    if CONFIG_KEYS[key] == ("operations",):
        return tuple(part.strip() for part in raw.split(",") if part.strip())
    return raw


def parse_config(text: str) -> AugmentPolicy:
    """Build a policy from config text; unspecified keys keep their defaults.

    Args:
        text: Flat ``section.key = value`` lines; ``#`` starts a comment.

    Returns:
        The validated policy.

    Raises:
        ConfigError: Malformed line, unknown or duplicate key, or a value of
            the wrong type or out of range.
    """
    nested: dict[str, Any] = {}
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'section.key = value'")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}", key=key)
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}", key=key)
        seen.add(key)

        target = nested
        *parents, leaf = CONFIG_KEYS[key]
        for parent in parents:
            target = target.setdefault(parent, {})
        target[leaf] = _parse_value(key, raw)

    try:
        return AugmentPolicy.model_validate(nested)
    except ValidationError as exc:
        error = exc.errors()[0]
        path = tuple(str(part) for part in error["loc"] if isinstance(part, str))
        key = _FIELD_KEYS.get(path)
        if key is None and path:
            key = next(
                (k for p, k in _FIELD_KEYS.items() if p[: len(path)] == path), None
            )
        raise ConfigError(f"{key or 'policy'}: {error['msg']}", key=key) from None


def load_config(path: str | Path) -> AugmentPolicy:
    """Read a policy config file.

    Raises:
        ConfigError: See ``parse_config``; also when the file is unreadable.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    return parse_config(text)


def _format_value(value: Any) -> str:
    if isinstance(value, tuple):
        return ",".join(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dump_config(policy: AugmentPolicy) -> str:
    """Serialize every key of a policy in canonical order.

    ``parse_config(dump_config(p)) == p`` for every valid policy.
    """
    lines = []
    for key, path in CONFIG_KEYS.items():
        value: Any = policy
        for part in path:
            value = getattr(value, part)
        if isinstance(value, BaseModel):
            raise TypeError(f"{key} does not address a scalar field")
        lines.append(f"{key} = {_format_value(value)}")
    return "\n".join(lines) + "\n"
