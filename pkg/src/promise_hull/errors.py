"""Exception types shared across the library."""


class PromiseHullError(Exception):
    """Base class for all library errors."""


class GeneralPositionError(PromiseHullError):
    """Two input points share an x- or y-coordinate."""


class CoordinateError(PromiseHullError):
    """A coordinate is not an integer or exceeds the magnitude bound."""


class VerticalLineError(PromiseHullError):
    """A line through two points with equal x was requested."""


class EmptyInputError(PromiseHullError):
    """An algorithm that needs at least one point got none."""


class NotSortedError(PromiseHullError):
    """A presorted-input routine found a descending x pair."""


class TooLargeError(PromiseHullError):
    """A brute-force oracle was asked for more points than its guard allows."""


class NotSpanningError(PromiseHullError):
    """A bridge was requested across a line with all points on one side."""


class InvalidPermutationError(PromiseHullError):
    """A generator permutation is not a bijection on [n-1]."""


class BudgetExceeded(PromiseHullError):
    """Gift wrapping would emit more vertices than the caller's budget.

    Control-flow signal for the output-sensitive guessing scheme, not a
    failure.
    """


class InstanceParseError(PromiseHullError):
    """An instance file is malformed; carries the offending line number."""

    def __init__(self, message, line_no=None):
        super().__init__(message)
        self.line_no = line_no
