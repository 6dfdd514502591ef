"""Exception hierarchy shared by all midfea modules.

The CLI maps these onto process exit codes: usage problems exit 2,
data problems exit 3, numeric failures exit 4.
"""


class MidfeaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(MidfeaError, ValueError):
    """A caller violated a documented precondition."""


class ConfigError(MidfeaError):
    """Malformed configuration text or out-of-range value (usage error)."""


class DataError(MidfeaError):
    """Missing, unreadable, or malformed data artifact."""


class NumericFileError(DataError):
    """Base class for numeric container file parse errors."""


class BadMagicError(NumericFileError):
    """File does not start with the expected magic line."""


class BadHeaderError(NumericFileError):
    """Dimension header line is missing or malformed."""


class DimensionOverflowError(NumericFileError):
    """Declared dimensions are negative or implausibly large."""


class TruncatedPayloadError(NumericFileError):
    """Payload holds fewer (or more) values than the header declares."""


class NumericError(MidfeaError):
    """A computation produced non-finite values or failed to converge."""
