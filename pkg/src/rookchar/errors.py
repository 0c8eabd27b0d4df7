"""Exception hierarchy shared by all rookchar modules."""


class RookError(ValueError):
    """Base class for every error raised by rookchar."""


# rook elements

class DuplicateInput(RookError):
    pass


class DuplicateOutput(RookError):
    pass


class NonPositiveIndex(RookError):
    pass


class DuplicatePoint(RookError):
    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class SupportExceedsDimension(RookError):
    pass


class BoundExceeded(RookError):
    pass


# notation

class ExprSyntaxError(RookError):
    """Malformed element expression; ``position`` is a 0-based offset into the source."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyCycle(ExprSyntaxError):
    pass


# character parameters

class InvalidParams(RookError):
    pass


class NotDescending(InvalidParams):
    pass


class MassExceedsOne(InvalidParams):
    pass


class RhoIndexOutOfRange(InvalidParams):
    pass


# gram lab

class NotSymmetric(RookError):
    pass


class NoConvergence(RookError):
    pass


class EmptyPool(RookError):
    pass


# tensor oracle

class InvalidModel(RookError):
    pass


class TraceExceedsOne(InvalidModel):
    pass


class QOnNonpositive(InvalidModel):
    pass


class KernelTooSmall(InvalidModel):
    pass


class BadDimension(InvalidModel):
    pass


class SupportExceedsTruncation(RookError):
    pass


class EMinusIsFull(RookError):
    pass


class BasisTooLarge(RookError):
    pass
