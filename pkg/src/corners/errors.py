"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "CornersError",
    "EmptyPathError",
    "IllegalCharacterError",
    "ShapeFillingMismatchError",
    "InvalidTableauError",
    "BudgetExceededError",
    "DomainError",
    "IndexOutOfRangeError",
    "NotATreeLikeShapeError",
    "NotSymmetricError",
    "BijectionError",
]


class CornersError(Exception):
    """Base class for all package-specific errors."""


class EmptyPathError(CornersError, ValueError):
    """A border path must contain at least one step."""


class IllegalCharacterError(CornersError, ValueError):
    """A border path may only contain the characters 'S' and 'W'."""

    def __init__(self, text: str, position: int) -> None:
        self.position = position
        super().__init__(
            f"illegal step {text[position]!r} at position {position + 1} in {text!r}"
        )


class ShapeFillingMismatchError(CornersError, ValueError):
    """A filling does not cover exactly the cells of its shape."""


class InvalidTableauError(CornersError, ValueError):
    """An operation received a tableau that violates its family rules."""


class BudgetExceededError(CornersError, ValueError):
    """Exhaustive enumeration was requested beyond the configured budget."""

    def __init__(self, n: int, family: object, budget: int) -> None:
        self.n = n
        self.family = family
        self.budget = budget
        super().__init__(
            f"enumeration of {family} at size {n} exceeds the budget of {budget}"
        )


class DomainError(CornersError, ValueError):
    """A closed-form formula was evaluated outside its stated domain."""


class IndexOutOfRangeError(CornersError, ValueError):
    """A border-path position is outside the admissible range."""


class NotATreeLikeShapeError(CornersError, ValueError):
    """The path does not start with a South step and end with a West step."""


class NotSymmetricError(CornersError, ValueError):
    """The tableau is not invariant under transposition."""


class BijectionError(CornersError, ValueError):
    """A bijection encountered inconsistent input; carries a witness."""

    def __init__(self, message: str, witness: object = None) -> None:
        self.witness = witness
        super().__init__(message)
