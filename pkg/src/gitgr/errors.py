"""Error types and the global enumeration budget."""

import os

DEFAULT_ENUM_CAP = 10**6

#: Environment variable that overrides the enumeration cap.
ENUM_CAP_ENV = "GITGR_MAX_ENUM"


class EnumerationCapError(RuntimeError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, message: str, cap: int):
        super().__init__(f"{message} (cap: {cap})")
        self.cap = cap


class UnsupportedCaseError(RuntimeError):
    """The requested structure is only defined in the induction case."""


class InvariantViolationError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class CalibrationError(RuntimeError):
    """No (a, b) in the search grid matches the invariant Hilbert value."""

    def __init__(self, message: str, target: int, attempts):
        super().__init__(message)
        self.target = target
        self.attempts = attempts


def enumeration_cap() -> int:
    """Current enumeration cap, read from GITGR_MAX_ENUM if set."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap <= 0:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap
