# quasihom/singularities/exceptions.py

"""
Exception hierarchy for the singularities app.

Every error raised on purpose by the library derives from `QuasihomError`, so
callers (management commands, views, Celery tasks) can catch the whole family
in one place and map it to an exit code or an HTTP status.
"""


class QuasihomError(Exception):
    """Base class for all errors raised by the singularities app."""


class InvalidInputError(QuasihomError, ValueError):
    """Malformed input: m = 0, a non-prime p, an invalid weight system, ..."""


class PreconditionError(QuasihomError, ValueError):
    """An operation was called outside the domain it is defined on."""


class NotIntegralError(PreconditionError):
    """
    Raised by `rho` when the quotient is not a polynomial.

    Attributes:
        witness (int): a cyclotomic index m whose multiplicity in the quotient
                       is negative.
    """

    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


class MissingPrimeError(PreconditionError):
    """
    Raised when an order tuple lacks a prime that divides some element of M.

    Attributes:
        prime (int): the first missing prime.
    """

    def __init__(self, message: str, prime: int):
        super().__init__(message)
        self.prime = prime


class ContractViolation(QuasihomError, ArithmeticError):
    """An internal consistency check failed."""


class GoldenMismatch(ContractViolation):
    """
    A reproduced table differs from its golden file.

    Attributes:
        row_index (int): 1-based index of the first differing row.
        expected (dict | None): the golden row (None if the run produced extra rows).
        actual (dict | None): the produced row (None if the run produced too few rows).
    """

    def __init__(self, message: str, row_index: int, expected=None, actual=None):
        super().__init__(message)
        self.row_index = row_index
        self.expected = expected
        self.actual = actual


class ResourceLimitError(QuasihomError):
    """Input exceeds a configured limit or a 64-bit overflow check."""


class EnumerationAborted(QuasihomError):
    """
    An enumeration run stopped before visiting every degree.

    Attributes:
        completed (list[int]): degrees whose shards were finished and checkpointed.
        checkpoint_dir (str | None): where the finished shards live.
    """

    def __init__(self, message: str, completed=None, checkpoint_dir=None):
        super().__init__(message)
        self.completed = list(completed or [])
        self.checkpoint_dir = checkpoint_dir
