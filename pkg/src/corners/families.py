"""Tableau family identifiers and enumeration budgets."""

from __future__ import annotations

import enum

__all__ = ["Family", "BRUTE_FORCE_BUDGET"]


class Family(str, enum.Enum):
    """The four tableau families handled by this package.

    The string values double as the spelling used on the command line and
    in serialized records.
    """

    TREE_LIKE = "tree-like"
    PERMUTATION = "permutation"
    TYPE_B = "type-b"
    SYMMETRIC = "symmetric"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise ValueError(f"unknown family {text!r}; expected one of: {names}") from None


# Largest size accepted by the exhaustive enumerators, per family.  The caps
# keep worst-case runtimes in the seconds range; counting beyond them goes
# through the weighted chain instead.  For the symmetric family the budget is
# expressed in tableau size (always odd), for the others in half-perimeter
# related size n.
BRUTE_FORCE_BUDGET: dict[Family, int] = {
    Family.PERMUTATION: 8,
    Family.TREE_LIKE: 8,
    Family.TYPE_B: 7,
    Family.SYMMETRIC: 13,
}
