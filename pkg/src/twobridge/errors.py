"""Exception hierarchy shared by every module."""


class TwoBridgeError(Exception):
    """Base class for all errors raised by this package."""


class ParamError(TwoBridgeError, ValueError):
    """An invalid 2-bridge parameter p/q."""


class RangeError(ParamError):
    """``0 < p < q`` (or the size cap on q) is violated."""


class ParityError(ParamError):
    """p is even."""


class GcdError(ParamError):
    """p and q are not coprime."""


class KindError(TwoBridgeError, ValueError):
    """An operation defined only for links was given a knot (or vice versa)."""


class ZeroPolynomial(TwoBridgeError, ValueError):
    """The zero polynomial has no unit normal form."""


class DomainError(TwoBridgeError, ValueError):
    """Evaluation would leave the integers (negative power of a non-unit)."""
