"""Exception hierarchy shared by all modules."""


class SplitFactorError(Exception):
    """Base class for every error raised by this package."""


class NotInvertible(SplitFactorError, ArithmeticError):
    """A quaternion (or leading coefficient) lies on the null cone."""


class DivisorLeadingCoefficientNotInvertible(NotInvertible):
    pass


class NormIdenticallyZero(SplitFactorError, ValueError):
    pass


class OddDegree(SplitFactorError, ValueError):
    pass


class IrrationalSplitting(SplitFactorError, ValueError):
    """The norm polynomial has real quadratic factors with irrational coefficients."""


class ZeroPolynomialError(SplitFactorError, ValueError):
    pass


class InternalAmbiguity(SplitFactorError, AssertionError):
    pass


class NotGeneric(SplitFactorError):
    """A remainder has no unique zero; carries the offending remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotOnCommonRuling(SplitFactorError, ValueError):
    pass


class NoCommonZero(SplitFactorError):
    pass


class AnnihilatedToZero(SplitFactorError, ValueError):
    pass


class SearchExhausted(SplitFactorError):
    pass


class PointOnNullCircle(SplitFactorError, ValueError):
    pass


class EmptyIntersection(SplitFactorError):
    pass


class Unsupported(SplitFactorError):
    pass


class ParseError(SplitFactorError, SyntaxError):
    """Malformed expression; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ModeError(ParseError):
    pass
