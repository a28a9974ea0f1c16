"""Exception types shared across the package."""


class SkewsolError(Exception):
    """Base class for all errors raised by skewsol."""


class FormatError(SkewsolError, ValueError):
    """Malformed tables, wrong dimensions, or bad file payloads."""


class CapacityError(SkewsolError):
    """A documented search or enumeration bound was exceeded."""


class PreconditionError(SkewsolError, ValueError):
    """An operation was called on input that violates its contract."""


class SelfCheckError(SkewsolError, RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
