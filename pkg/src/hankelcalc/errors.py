"""Exception hierarchy.

Everything raised by a computation derives from :class:`ComputationError`;
the CLI maps that family to exit status 3.
"""


class ComputationError(Exception):
    """A computation could not be carried out exactly."""


class RingMismatchError(ComputationError):
    pass


class TruncationError(ComputationError):
    """A coefficient beyond the valid order was requested."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotInvertibleError(ComputationError):
    pass


class SqrtError(ComputationError):
    pass


class CoprimalityError(ComputationError):
    """A fraction a/b was reduced modulo p^e while p divides b."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ParameterError(ComputationError):
    pass


class StieltjesBreakdown(ComputationError):
    """The J-fraction does not exist past level ``n``: ``H_n(f) = 0``."""

    def __init__(self, n, message=None):
        super().__init__(message or f"Stieltjes breakdown at n={n} (H_{n}=0)")
        self.n = n


class ZeroDenominatorError(ComputationError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
