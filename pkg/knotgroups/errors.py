"""Exception types shared across the package."""


class KnotGroupsError(Exception):
    """Base class for package errors that are not input errors."""


class VerificationError(KnotGroupsError):
    """A claimed identity failed when checked exactly."""


class AlphabetError(ValueError):
    """Words or maps over incompatible alphabets."""


class ParseError(ValueError):
    """Malformed word, braid or polynomial text."""


class BraidError(ValueError):
    """Braid letter out of range for the strand count."""


class TietzeError(ValueError):
    """A Tietze move is not applicable to the presentation."""


class NotDivisibleError(ValueError):
    """Exact division left a nonzero remainder."""


class UnsupportedRangeError(ValueError):
    """Rank or class outside the supported range."""


class AlgebraSpecError(ValueError):
    """Algebra specification is malformed or lacks finite normal forms."""
