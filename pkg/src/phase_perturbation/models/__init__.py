"""Pydantic models for policies, metadata and reports."""

from phase_perturbation.models.policies import (
    POLICY_NAMES,
    AugmentPolicy,
    MaskPolicy,
    PhaseOperation,
    PhaseRandomizationPolicy,
    PolicyName,
    StftConfig,
    VtlpPolicy,
)
from phase_perturbation.models.records import (
    MANIFEST_COLUMNS,
    CheckResult,
    Manifest,
    ManifestEntry,
    VerifyReport,
    WavMeta,
)

__all__ = [
    "POLICY_NAMES",
    "AugmentPolicy",
    "MaskPolicy",
    "PhaseOperation",
    "PhaseRandomizationPolicy",
    "PolicyName",
    "StftConfig",
    "VtlpPolicy",
    "MANIFEST_COLUMNS",
    "CheckResult",
    "Manifest",
    "ManifestEntry",
    "VerifyReport",
    "WavMeta",
]
