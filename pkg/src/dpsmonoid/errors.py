"""Exception hierarchy shared by every module of the package."""


class DPSError(Exception):
    """Base class for all errors raised by :mod:`dpsmonoid`."""


class OutOfRange(DPSError, ValueError):
    """A point is not in ``{0, ..., degree-1}``."""


class DuplicateDomain(DPSError, ValueError):
    """The same domain point was given two images."""


class NotInjective(DPSError, ValueError):
    """Two domain points share an image."""


class DegreeMismatch(DPSError, ValueError):
    """Maps of different degree were combined."""


class NotZeroFree(DPSError, ValueError):
    """A map to be lifted touches the centre 0."""


class InvalidElement(DPSError, ValueError):
    """An argument is not an element of the monoid in question."""


class Unsupported(DPSError, ValueError):
    """The requested construction is not defined for this parameter."""


class LimitExceeded(DPSError, RuntimeError):
    """A size or search budget was exhausted.

    ``count`` carries how far the computation got before giving up.
    """

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class BudgetExceeded(LimitExceeded):
    """A quotient enumeration needed more classes than allowed."""


class UnknownLetter(DPSError, KeyError):
    """A word uses a letter outside the alphabet or assignment."""

    def __str__(self):
        return Exception.__str__(self)


class TietzeError(DPSError, ValueError):
    """A Tietze transformation cannot be applied."""


class NotAConsequence(TietzeError):
    """The relation to add or delete is not a consequence of the others."""


class LetterOccursInW(TietzeError):
    """The eliminating word for a generator contains that generator."""


class RelationNotPresent(TietzeError):
    """The relation named by a Tietze step is not in the presentation."""
