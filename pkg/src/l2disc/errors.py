"""Exception hierarchy shared by all l2disc modules."""


class L2DiscError(Exception):
    """Base class for every error raised by l2disc."""


class EmptyQuotients(L2DiscError, ValueError):
    pass


class NonPositiveQuotient(L2DiscError, ValueError):
    pass


class IntegerOverflow(L2DiscError, OverflowError):
    pass


class NonPositiveModulus(L2DiscError, ValueError):
    pass


class OutOfRange(L2DiscError, ValueError):
    pass


class DimensionMismatch(L2DiscError, ValueError):
    pass


class InexactDyadicRepresentation(L2DiscError, ValueError):
    pass


class EmptyPointSet(L2DiscError, ValueError):
    pass


class TooManyPoints(L2DiscError, ValueError):
    pass


class NonCoprime(L2DiscError, ValueError):
    pass


class NegativeDiscrepancy(L2DiscError, ArithmeticError):
    """A squared discrepancy came out clearly below zero."""


class BadParams(L2DiscError, ValueError):
    pass


class ParseError(L2DiscError, ValueError):
    pass


class MethodUnsupportedForInput(L2DiscError, ValueError):
    pass


class UnknownSuite(L2DiscError, KeyError):
    pass


class UnknownTable(L2DiscError, KeyError):
    pass


class IoError(L2DiscError, OSError):
    pass
