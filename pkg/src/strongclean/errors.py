"""Exception hierarchy.

The CLI maps these onto exit codes: schema problems (2), guard and budget
rejections (3) and verification failures (4).
"""


class StrongCleanError(Exception):
    """Base class for all library errors."""


class SchemaError(StrongCleanError, ValueError):
    """Malformed input: bad descriptor, element encoding or shape."""


class RingMismatchError(SchemaError):
    """Operands live over different ring descriptors."""


class NotMonicError(SchemaError):
    """An operation that needs a monic polynomial got something else."""


class ShapeError(SchemaError):
    """Matrix shapes are incompatible."""


class GuardError(StrongCleanError):
    """A size, depth or search-budget guard was exceeded."""


class InfiniteRingError(GuardError):
    """Enumeration was requested over an infinite ring."""


class UnsupportedRingError(GuardError):
    """The ring is outside the set this operation can reason about."""


class VerificationError(StrongCleanError, AssertionError):
    """A certificate failed its own re-verification.

    This always indicates a bug in the construction, never bad input.
    """
