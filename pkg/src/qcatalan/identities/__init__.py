"""Registry of machine-checkable identities.

Each entry evaluates both sides of an identity exactly over a bounded
parameter domain; :func:`check` runs one entry, :func:`check_all` sweeps them.
"""
from .core import (
    CAPS, EXACT, PAIRING, SAMPLE_S, SERIES, SYMBOLIC_Q, Bounds, IdentityCheck, PointResult,
    RangeCapError, UnknownIdentityError, VerificationReport, check, check_all, get_check,
    registry_ids, summarize,
)

__all__ = [
    "CAPS", "EXACT", "PAIRING", "SAMPLE_S", "SERIES", "SYMBOLIC_Q", "Bounds", "IdentityCheck",
    "PointResult", "RangeCapError", "UnknownIdentityError", "VerificationReport", "check",
    "check_all", "get_check", "registry_ids", "summarize",
]
