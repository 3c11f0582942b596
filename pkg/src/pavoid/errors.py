"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`PavoidError`.
``exit_code`` is what the command-line front end returns when the error
escapes a command.
"""


class PavoidError(Exception):
    exit_code = 1


class DomainError(PavoidError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ParseError(DomainError):
    pass


class BadToken(ParseError):
    pass


class NotDecreasing(ParseError):
    pass


class EmptyPartition(DomainError):
    pass


class InvalidDecomp(DomainError):
    pass


class NotStrict(DomainError):
    pass


class NotSuperStrict(DomainError):
    pass


class TooSmall(DomainError):
    pass


class PatternTooSmall(TooSmall):
    pass


class StaircaseHasNoHat(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class NotInDomain(DomainError):
    pass


class HorizonTooSmall(DomainError):
    pass


class PoleAtZero(DomainError):
    pass


class NZeroUnsupported(DomainError):
    pass


class DegenerateProduct(DomainError):
    pass


class NoExactSource(DomainError):
    pass


class CapExceeded(PavoidError):
    exit_code = 3

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} = {value} exceeds the configured cap {cap}")
        self.value = value
        self.cap = cap


class InvariantViolation(PavoidError, RuntimeError):
    """A mathematical guarantee failed to hold; this indicates a bug."""
