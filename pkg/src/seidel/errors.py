"""Exception types shared across the package."""

from __future__ import annotations


class SeidelError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SeidelError, ValueError):
    """A matrix or argument failed structural validation."""


class NonSymmetricError(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"entry ({i},{j}) differs from ({j},{i})")
        self.index = (i, j)


class BadDiagonalError(ValidationError):
    def __init__(self, i: int):
        super().__init__(f"diagonal entry ({i},{i}) is not zero")
        self.index = i


class BadEntryError(ValidationError):
    def __init__(self, i: int, j: int, value):
        super().__init__(f"entry ({i},{j}) = {value!r} is not +1/-1")
        self.index = (i, j)


class IndexOutOfRangeError(ValidationError):
    def __init__(self, what: str, value, n: int):
        super().__init__(f"{what} {value!r} out of range for order {n}")


class OrderTooLargeError(SeidelError):
    def __init__(self, n: int, limit: int, what: str = "operation"):
        super().__init__(f"{what} refused at order {n} (limit {limit})")
        self.n = n
        self.limit = limit


class FormatError(ValidationError):
    """Malformed textual input (matrix, graph or spectrum strings)."""


class ArityMismatchError(ValidationError):
    def __init__(self, name: str, expected, n: int):
        super().__init__(f"{name} is defined for order {expected}, got {n}")
        self.name = name
        self.expected = expected
        self.n = n


class NotACliqueError(SeidelError):
    def __init__(self, i: int, j: int):
        super().__init__(f"rows {i},{j} carry a -1 entry; not an all-plus clique")
        self.pair = (i, j)


class BadCliqueSizeError(SeidelError):
    pass


class InvalidSpectrumError(ValidationError):
    """A claimed spectrum violates the basic trace identities."""


class AnnihilationFailsError(SeidelError):
    def __init__(self, detail: str):
        super().__init__(f"annihilating product is nonzero: {detail}")


class MultiplicityMismatchError(SeidelError):
    def __init__(self, value, expected: int, actual: int):
        super().__init__(
            f"eigenvalue {value}: claimed multiplicity {expected}, rank test gives {actual}"
        )
        self.value = value
        self.expected = expected
        self.actual = actual


class NotAnEigenvalueError(SeidelError):
    def __init__(self, value):
        super().__init__(f"{value} is not an eigenvalue")
        self.value = value


class NotSmallestError(SeidelError):
    def __init__(self, value):
        super().__init__(f"an eigenvalue below {value} exists")
        self.value = value


class NotTwoEigenvalueError(SeidelError):
    pass


class NegativeRadicandError(SeidelError):
    pass


class NegativeDiscriminantError(SeidelError):
    pass


class PreconditionFailsError(SeidelError):
    pass


class AngleOutOfRangeError(SeidelError):
    pass


class NotPsdError(SeidelError):
    pass


class ForbiddenPatternError(SeidelError):
    def __init__(self, triple, kind: str):
        super().__init__(f"vertices {triple} induce a forbidden {kind} pattern")
        self.triple = triple
        self.kind = kind


class NotThreeEigenvaluesError(SeidelError):
    pass


class OddOrderError(SeidelError):
    pass


class ConstructionError(SeidelError):
    """An internal consistency check of a construction failed."""


class UnsupportedExponentError(ConstructionError):
    pass


class BadVariantParamsError(ConstructionError):
    pass


class DimensionTooSmallError(ConstructionError):
    pass


class BadOrderError(ConstructionError):
    pass


class BadDimensionError(ConstructionError):
    pass


class CliqueNotFoundError(ConstructionError):
    pass


class GolayConstructionError(ConstructionError):
    """The generated code failed its weight-enumerator self-check."""
