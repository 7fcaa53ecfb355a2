"""Exception types shared across the package."""


class CyclocodeError(Exception):
    """Base class for all package errors."""


class ParameterError(CyclocodeError, ValueError):
    """Invalid or out-of-regime parameters."""


class ZeroCodeError(ParameterError):
    """The requested parameters describe the zero code (a = b = q-1, t = 0)."""


class ResourceLimitError(CyclocodeError):
    """A materialization or enumeration cap would be exceeded."""


class ConsistencyError(CyclocodeError):
    """An internal identity that must always hold was violated."""
