"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class NumericalError(ArithmeticError):
    """A computation failed or lost too much accuracy to be trusted."""


class FactorizationError(NumericalError):
    """Cholesky factorization of I - A failed.

    Attributes
    ----------
    pivot : int
        Zero-based index of the first non-positive pivot.
    """

    def __init__(self, pivot, message=None):
        self.pivot = int(pivot)
        super().__init__(message or f"I - A is not positive definite (pivot {self.pivot})")
