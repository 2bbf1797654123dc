"""Exception types shared across the package.

Every error raised by the library is a subclass of VerolabError, so callers
can catch one base type.  Names mirror the failure they signal; no error
carries structured payload beyond its message.
"""


class VerolabError(Exception):
    """Base class for all verolab errors."""


class NonPrimeP(VerolabError, ValueError):
    """Field order is not a prime power, or p is not prime."""


class FieldMismatch(VerolabError, ValueError):
    """Operands belong to different fields."""


class DivisionByZero(VerolabError, ZeroDivisionError):
    """Division or inversion of the zero element."""


class InfiniteField(VerolabError, ValueError):
    """Enumeration requested over Q."""


class LengthMismatch(VerolabError, ValueError):
    """Vector length does not match the expected dimension."""


class AmbientMismatch(VerolabError, ValueError):
    """Subspaces live in different ambient spaces or fields."""


class BudgetExceeded(VerolabError, RuntimeError):
    """An enumeration or subset search would exceed its budget."""


class IndexOutOfRange(VerolabError, IndexError):
    """Monomial index outside [0, N)."""


class BadCharacteristic(VerolabError, ValueError):
    """A required multinomial coefficient vanishes in the field."""


class DegreeMismatch(VerolabError, ValueError):
    """Polynomial degrees incompatible with the operation."""


class OddQForHyperoval(VerolabError, ValueError):
    """Hyperovals exist only in even characteristic."""


class SingularT(VerolabError, ValueError):
    """An invertible linear map was required."""


class UnknownCheck(VerolabError, KeyError):
    """Check id not present in the registry."""


class DuplicateMember(VerolabError, ValueError):
    """A subspace family was given two equal members."""
