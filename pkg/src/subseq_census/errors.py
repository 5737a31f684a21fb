"""Exceptions shared across the package."""


class SubseqError(Exception):
    """Base class for all package-specific errors."""


class GuardExceeded(SubseqError):
    """A practical size guard was exceeded."""


class LengthGuardExceeded(GuardExceeded):
    """A string-length guard on a brute-force oracle was exceeded."""


class DomainError(SubseqError):
    """Arguments are outside the mathematical domain of the operation."""
