"""Shared exception types for the package."""


class DomainError(ValueError):
    """Input lies outside an operation's domain."""


class RangeError(ValueError):
    """A result or enumeration would exceed a configured cap."""


class UnsupportedCaseError(RuntimeError):
    """Field/prime combination outside the implemented splitting rules."""


class VerificationError(AssertionError):
    """A checked inequality or identity failed numerically."""
