"""Exception types shared across the package."""


class LaverError(Exception):
    """Base class for all package errors."""


class ElementRangeError(LaverError, ValueError):
    """An element index is outside {0, ..., 2^n - 1} for the table's rank."""


class TableInvariantError(LaverError, RuntimeError):
    """A table's rows violate the structural invariants (monotone rows,
    power-of-two periods, successor first column)."""


class UndefinedThresholdError(LaverError, ValueError):
    """Threshold requested for the top element 2^n - 1, whose row never
    reaches 2^(n-1)."""


class ResourceLimitError(LaverError, RuntimeError):
    """A table build would exceed the configured entry budget."""


class InsufficientTablesError(LaverError, RuntimeError):
    """An operation needs tables beyond the available/allowed rank."""


class UncertifiedError(LaverError, RuntimeError):
    """A bounded search ended without witnessing the defining inequality,
    and the caller required a certified result."""


class CacheError(LaverError):
    """Base class for table-cache problems."""


class CacheFormatError(CacheError):
    """Cache file has the wrong magic or cannot be parsed."""


class CacheVersionError(CacheError):
    """Cache file was written by an incompatible format version."""


class CacheCorruptionError(CacheError):
    """Cache file fails its checksum or decodes to an invalid table."""


class WordSyntaxError(LaverError, ValueError):
    """A word expression could not be parsed."""


class AmbiguousCandidateError(LaverError, RuntimeError):
    """Two enumeration candidates share the maximal coefficient with
    different cofinality indices."""


class EnumerationError(LaverError, RuntimeError):
    """An enumerated interval violates one of its structural invariants."""


class InvalidRepresentationError(LaverError, ValueError):
    """An ordinal representation does not occur in its interval's
    enumeration."""
