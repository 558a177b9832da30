class InvalidQueryError(ValueError):
    """Raised for parameters outside the valid range (m, n, k < 1, ...)."""


class InvalidAnchorError(InvalidQueryError):
    """Raised when the image of vertex 0 is not a vertex of the codomain."""


class OutOfDomainError(InvalidQueryError):
    """Raised when a closed form is asked for parameters it does not cover."""
