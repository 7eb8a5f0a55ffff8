"""Exception types shared by all ifsir modules.

Every error raised on purpose by this package derives from :class:`IfsirError`,
so callers can catch one type at the boundary. Most errors also derive from
``ValueError`` because they signal rejected input.
"""


class IfsirError(Exception):
    """Base class for all errors raised by this package."""


class InvalidIfn(IfsirError, ValueError):
    """Membership/non-membership pair violates 0 <= mu, nu and mu + nu <= 1."""


class NonPositiveScalar(IfsirError, ValueError):
    """A scalar exponent for the multiple/exponent laws must be > 0."""


class DegenerateReference(IfsirError, ValueError):
    """Ideal and anti-ideal reference points coincide."""


class UnknownTerm(IfsirError, LookupError):
    """A linguistic term is not defined by the scale it was resolved against."""


class DuplicateTerm(IfsirError, ValueError):
    """A linguistic scale binds the same term or abbreviation twice."""


class LengthMismatch(IfsirError, ValueError):
    """Parallel sequences (values and weights) differ in length."""


class EmptyInput(IfsirError, ValueError):
    """An aggregation was asked to fold zero values."""


class DimensionMismatch(IfsirError, ValueError):
    """Problem tensors disagree on the declared alternative/criterion/expert counts."""


class InvalidThresholdParams(IfsirError, ValueError):
    """Threshold function parameters violate their constraints."""


class ParseError(IfsirError, ValueError):
    """A problem or scale document is structurally malformed. Message carries the path."""
