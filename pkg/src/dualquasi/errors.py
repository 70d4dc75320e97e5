"""Exception types shared across the package."""

from __future__ import annotations


class DualQuasiError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(DualQuasiError):
    """Structure-constant matrices do not have mutually consistent shapes."""


class InvariantViolation(DualQuasiError):
    """A mathematically guaranteed identity failed on concrete data.

    Raised when a postcondition that is a theorem rather than an input
    check turns out false; it signals corrupted input or a bug upstream.
    """


class ScalarParseError(DualQuasiError):
    """A scalar literal could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at character {position})")
        self.position = position


class DocumentError(DualQuasiError):
    """A document failed to parse, or refers to out-of-range data."""

    def __init__(self, message: str, location: str):
        super().__init__(f"{location}: {message}")
        self.location = location
