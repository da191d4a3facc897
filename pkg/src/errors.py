"""
Exception hierarchy shared by all toolkit modules
"""

from typing import Any, Optional


class SemigroupToolkitError(Exception):
    """Base class for every domain error raised by the toolkit"""

    module = "toolkit"

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def envelope(self) -> str:
        """One-line error envelope used by the command line"""
        line = f"error[{self.module}]: {self.message}"
        if self.witness is not None:
            line += f"\nwitness: {self.witness}"
        return line


# Words and rewriting

class DimensionError(SemigroupToolkitError):
    module = "free_words"


class ExponentOverflowError(SemigroupToolkitError):
    module = "free_words"


class DegenerateRelationError(SemigroupToolkitError):
    module = "rewriting"


class OrientationError(SemigroupToolkitError):
    module = "rewriting"


class BudgetExceededError(SemigroupToolkitError):
    """A configured resource budget ran out; `partial` holds what was computed"""

    module = "budget"

    def __init__(self, message: str, witness: Optional[Any] = None,
                 partial: Optional[Any] = None):
        super().__init__(message, witness)
        self.partial = partial


class InfiniteSemigroupError(SemigroupToolkitError):
    module = "rewriting"


# Cayley tables

class InvalidTableError(SemigroupToolkitError):
    module = "core_semigroup"


class NotCommutativeError(InvalidTableError):
    pass


class NotAssociativeError(InvalidTableError):
    pass


class NotIdempotentError(SemigroupToolkitError):
    module = "core_semigroup"


class NotAnIdealError(SemigroupToolkitError):
    module = "core_semigroup"


class NoIdentityError(SemigroupToolkitError):
    module = "core_semigroup"


class InvalidCongruenceError(SemigroupToolkitError):
    module = "core_semigroup"


# Groups and morphisms

class NotAbelianProfileError(SemigroupToolkitError):
    module = "abelian"


class InfiniteGroupError(SemigroupToolkitError):
    module = "abelian"

    def __init__(self, message: str, free_rank: int, witness: Optional[Any] = None):
        super().__init__(message, witness)
        self.free_rank = free_rank


class TypeMismatchError(SemigroupToolkitError):
    module = "cyclic_hom"


class PathDisagreementError(SemigroupToolkitError):
    module = "cyclic_hom"


class NotASemilatticeError(SemigroupToolkitError):
    module = "semilattice"


class InvalidExponentError(SemigroupToolkitError):
    module = "cyclic_hom"


class InvalidDecompositionError(SemigroupToolkitError):
    module = "cyclic_hom"


class NotRealizableError(SemigroupToolkitError):
    module = "ideal_extension"


# Input

class ParseError(SemigroupToolkitError):
    """Malformed input file; carries the path and 1-based line number"""

    module = "cli"

    def __init__(self, message: str, path: Optional[str] = None,
                 line: Optional[int] = None):
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(location + message)
        self.path = path
        self.line = line
