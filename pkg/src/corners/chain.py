"""The weighted growth chain on unrestricted-row counts.

A permutation tableau of size ``n`` arises from a unique size ``n - 1``
parent by appending a border step, and the number of ways to append a
given step depends only on the parent's unrestricted-row count ``u``:

* ``S`` (new empty bottom row): one way, ``u`` becomes ``u + 1``;
* ``W`` (new leftmost column): ``C(u, j - 1)`` ways to land on ``j``,
  for ``j = 1..u``.

Type-B tableaux follow the same scheme with every West weight doubled
plus one extra West transition to ``u + 1``.  Total outgoing weight is
``2**u`` respectively ``2**(u + 1)``, and under either normalization the
next state is ``1 + Binomial(u, 1/2)``.

Summing trajectory weights gives exact cardinalities and exact corner
probabilities for sizes far beyond enumeration reach.  The forward
tables (prefix weights by position, state and last step kind) and the
suffix tables (completion weights by remaining step count) do not depend
on the target size, so they are cached per family and grown on demand.

Tree-like and symmetric values ride on these two chains: dropping the
final West step of a tree-like shape is a corner-faithful bijection onto
permutation shapes, and the symmetric border path of size ``2n + 1``
decomposes as ``S + mirror(q) + q + W`` where ``q`` is the type-B path.

All arithmetic is exact: integers are unbounded and probabilities are
:class:`fractions.Fraction` values.  No floating point exists here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Union

from .errors import DomainError, IndexOutOfRangeError
from .families import Family
from .shapes import SOUTH, WEST
from .tableaux import PermutationTableau, unrestricted_row_count

__all__ = [
    "RationalProbability",
    "Transition",
    "ChainSpec",
    "ChainWeightTable",
    "count_tableaux",
    "u_distribution",
    "u_pgf",
    "rising_factorial_pgf",
    "corner_event_probability_dp",
    "corner_event_probability_formula",
    "corner_distribution",
    "expected_corners",
    "total_corners",
    "last_step_south_probability",
    "first_step_west_probability",
    "PushforwardReport",
    "pushforward_check",
]

#: Exact probability; every public value lies in [0, 1].
RationalProbability = Fraction

_CHAIN_FAMILIES = (Family.PERMUTATION, Family.TYPE_B)


@dataclass(frozen=True)
class Transition:
    step: str
    target: int
    weight: int


class ChainSpec:
    """Transition weights out of state ``u`` for one chain family."""

    def __init__(self, family: Family):
        if family not in _CHAIN_FAMILIES:
            raise DomainError(
                f"the growth chain is defined for {Family.PERMUTATION.value} and "
                f"{Family.TYPE_B.value}, not {family.value}"
            )
        self.family = family

    def transitions(self, u: int) -> tuple[Transition, ...]:
        if u < 0:
            raise DomainError(f"state must be non-negative, got {u}")
        doubling = 2 if self.family is Family.TYPE_B else 1
        out = [Transition(SOUTH, u + 1, 1)]
        out.extend(Transition(WEST, j, doubling * comb(u, j - 1)) for j in range(1, u + 1))
        if self.family is Family.TYPE_B:
            out.append(Transition(WEST, u + 1, 1))
        return tuple(out)

    def total_weight(self, u: int) -> int:
        return 1 << (u + 1) if self.family is Family.TYPE_B else 1 << u

    def normalized_law(self, u: int) -> dict[int, Fraction]:
        """Exact law of the next state; equals 1 + Binomial(u, 1/2)."""
        law: dict[int, Fraction] = {}
        total = self.total_weight(u)
        for t in self.transitions(u):
            law[t.target] = law.get(t.target, Fraction(0)) + Fraction(t.weight, total)
        return law


class _FamilyTables:
    """Forward and suffix weight tables up to a position cap.

    ``fwd_s[k][u]`` / ``fwd_w[k][u]``: total weight of k-step prefixes
    ending in state ``u`` whose last step is South / West.
    ``g[m][u]``: total weight of all m-step continuations from ``u``
    (valid for ``u <= cap + 1 - m``).
    ``wtf[m][u]``: like ``g[m][u]`` but with the first of the m steps
    forced to be West.
    """

    __slots__ = ("spec", "cap", "fwd_s", "fwd_w", "g", "wtf")

    def __init__(self, spec: ChainSpec, cap: int):
        self.spec = spec
        self.cap = cap
        type_b = spec.family is Family.TYPE_B
        doubling = 2 if type_b else 1

        fwd_s = [[0] * (cap + 2) for _ in range(cap + 1)]
        fwd_w = [[0] * (cap + 2) for _ in range(cap + 1)]
        total_prev = [0] * (cap + 2)
        total_prev[0] = 1
        for k in range(1, cap + 1):
            row_s, row_w = fwd_s[k], fwd_w[k]
            for u in range(k):
                w = total_prev[u]
                if not w:
                    continue
                row_s[u + 1] += w
                for j in range(1, u + 1):
                    row_w[j] += w * doubling * comb(u, j - 1)
                if type_b:
                    row_w[u + 1] += w
            total_prev = [row_s[u] + row_w[u] for u in range(cap + 2)]

        g: list[list[int]] = [[1] * (cap + 2)]
        wtf: list[list[int] | None] = [None]
        for m in range(1, cap + 1):
            prev = g[m - 1]
            g_row = [0] * (cap + 2 - m)
            w_row = [0] * (cap + 2 - m)
            for u in range(cap + 2 - m):
                west = sum(doubling * comb(u, j - 1) * prev[j] for j in range(1, u + 1))
                if type_b:
                    west += prev[u + 1]
                w_row[u] = west
                g_row[u] = prev[u + 1] + west
            g.append(g_row)
            wtf.append(w_row)
        self.fwd_s, self.fwd_w, self.g, self.wtf = fwd_s, fwd_w, g, wtf


_tables_cache: dict[Family, _FamilyTables] = {}


def _tables(family: Family, cap: int) -> _FamilyTables:
    cached = _tables_cache.get(family)
    if cached is None or cached.cap < cap:
        cached = _FamilyTables(ChainSpec(family), max(cap, 2 * (cached.cap if cached else 8)))
        _tables_cache[family] = cached
    return cached


class ChainWeightTable:
    """Forward/backward weight view of one chain at one target size."""

    def __init__(self, n: int, family: Family):
        if n < 0:
            raise DomainError(f"size must be non-negative, got {n}")
        self.n = n
        self.family = family
        self.spec = ChainSpec(family)
        self._t = _tables(family, n)

    def forward(self, k: int, u: int, last_step: str) -> int:
        if not 1 <= k <= self.n:
            raise IndexOutOfRangeError(f"position {k} outside 1..{self.n}")
        row = self._t.fwd_s[k] if last_step == SOUTH else self._t.fwd_w[k]
        return row[u] if 0 <= u < len(row) else 0

    def forward_total(self, k: int, u: int) -> int:
        if k == 0:
            return 1 if u == 0 else 0
        return self.forward(k, u, SOUTH) + self.forward(k, u, WEST)

    def backward(self, k: int, u: int) -> int:
        """Weight of completing the path from position ``k``, state ``u``."""
        if not 0 <= k <= self.n:
            raise IndexOutOfRangeError(f"position {k} outside 0..{self.n}")
        row = self._t.g[self.n - k]
        return row[u] if 0 <= u < len(row) else 0

    def count(self) -> int:
        return self._t.g[self.n][0]


def _chain_family_and_position(n: int, k: int, family: Family) -> tuple[Family, int]:
    """Map a (size, position) corner query of any family onto a chain query.

    Returns the chain family plus the position there; position 0 encodes
    the last-step-South event and -1 the first-step-West event of the
    chain at size ``n`` (resp. index ``n`` for the symmetric family).
    """
    if family is Family.PERMUTATION or family is Family.TYPE_B:
        if not 1 <= k <= n - 1:
            raise IndexOutOfRangeError(
                f"corner position {k} outside 1..{n - 1} for size {n}"
            )
        return family, k
    if family is Family.TREE_LIKE:
        if not 1 <= k <= n:
            raise IndexOutOfRangeError(f"corner position {k} outside 1..{n} for size {n}")
        return Family.PERMUTATION, (k if k <= n - 1 else 0)
    # symmetric: index n, path length 2n + 2, corner positions 1..2n+1
    if not 1 <= k <= 2 * n + 1:
        raise IndexOutOfRangeError(f"corner position {k} outside 1..{2 * n + 1} for index {n}")
    if k == 1 or k == 2 * n + 1:
        return Family.TYPE_B, 0
    if k == n + 1:
        return Family.TYPE_B, -1
    return Family.TYPE_B, (n + 1 - k if k <= n else k - n - 1)


def count_tableaux(n: int, family: Family) -> int:
    """Number of tableaux: chain trajectory-weight total for the 0/1
    families, closed form for the pointed ones (symmetric takes the
    index ``n``, counting size ``2n + 1``)."""
    if n < 0:
        raise DomainError(f"size must be non-negative, got {n}")
    if family in _CHAIN_FAMILIES:
        return _tables(family, n).g[n][0]
    if family is Family.TREE_LIKE:
        return factorial(n)
    return (1 << n) * factorial(n)


def u_distribution(n: int, family: Family) -> dict[int, Fraction]:
    """Exact law of the unrestricted-row count at size ``n``."""
    if family not in _CHAIN_FAMILIES:
        raise DomainError(f"no unrestricted-row chain for {family.value}")
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    t = _tables(family, n)
    total = t.g[n][0]
    out: dict[int, Fraction] = {}
    for u in range(1, n + 1):
        w = t.fwd_s[n][u] + t.fwd_w[n][u]
        if w:
            out[u] = Fraction(w, total)
    return out


def u_pgf(n: int, family: Family, z: Union[int, Fraction]) -> Fraction:
    """``E[z**U_n]`` evaluated exactly from the chain distribution."""
    zf = Fraction(z)
    return sum((p * zf**u for u, p in u_distribution(n, family).items()), Fraction(0))


def rising_factorial_pgf(z: Union[int, Fraction], m: int) -> Fraction:
    """``z (z+1) ... (z+m-1) / m!``, the closed form of ``E[z**U_m]``.

    ``m = 0`` is the empty product: the size-0 object has no rows.
    """
    if m < 0:
        raise DomainError(f"the generating function needs m >= 0, got {m}")
    zf = Fraction(z)
    prod = Fraction(1)
    for i in range(m):
        prod *= zf + i
    return prod / factorial(m)


def corner_event_probability_dp(n: int, k: int, family: Family) -> Fraction:
    """Exact probability that border steps ``k`` and ``k + 1`` form a
    corner, computed from the chain weight tables.

    For the symmetric family ``n`` is the index (size ``2n + 1``) and
    ``k`` runs over ``1..2n+1``; for tree-like tableaux of size ``n``
    over ``1..n``; for the 0/1 families over ``1..n-1``.
    """
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    chain, pos = _chain_family_and_position(n, k, family)
    t = _tables(chain, n)
    total = t.g[n][0]
    if pos == 0:  # last step South
        return Fraction(sum(t.fwd_s[n][u] for u in range(n + 1)), total)
    if pos == -1:  # first step West; only type-B paths may start with West
        if chain is Family.PERMUTATION:
            return Fraction(0)
        return Fraction(t.g[n - 1][1], total)
    fwd_s, suffix = t.fwd_s[pos], t.wtf[n - pos]
    assert suffix is not None
    weight = sum(fwd_s[u] * suffix[u] for u in range(1, min(pos, len(suffix) - 1) + 1))
    return Fraction(weight, total)


def corner_event_probability_formula(n: int, k: int, family: Family) -> Fraction:
    """The closed-form corner probability; defined for ``n >= 2`` only
    (the printed expressions leave their ranges below that)."""
    if n < 2:
        raise DomainError(f"closed forms need n >= 2, got {n}")

    def type_a(pos: int) -> Fraction:
        return Fraction(n - pos + 1, n) - Fraction((n - pos) ** 2, n * (n - 1))

    def type_b(pos: int) -> Fraction:
        return Fraction(n - pos + 1, 2 * n) - Fraction((n - pos) ** 2, 4 * n * (n - 1))

    if family is Family.PERMUTATION:
        if not 1 <= k <= n - 1:
            raise DomainError(f"position {k} outside 1..{n - 1}")
        return type_a(k)
    if family is Family.TREE_LIKE:
        if not 1 <= k <= n:
            raise DomainError(f"position {k} outside 1..{n}")
        return Fraction(1, n) if k == n else type_a(k)
    if family is Family.TYPE_B:
        if not 1 <= k <= n - 1:
            raise DomainError(f"position {k} outside 1..{n - 1}")
        return type_b(k)
    if not 1 <= k <= 2 * n + 1:
        raise DomainError(f"position {k} outside 1..{2 * n + 1}")
    if k == 1 or k == 2 * n + 1:
        return Fraction(1, 2 * n)
    if k == n + 1:
        return Fraction(1, 2)
    if k <= n:
        return Fraction(k, 2 * n) - Fraction((k - 1) ** 2, 4 * n * (n - 1))
    return Fraction(2 * n - k + 2, 2 * n) - Fraction((2 * n - k + 1) ** 2, 4 * n * (n - 1))


def _corner_position_range(n: int, family: Family) -> range:
    if family in _CHAIN_FAMILIES:
        return range(1, n)
    if family is Family.TREE_LIKE:
        return range(1, n + 1)
    return range(1, 2 * n + 2)


def corner_distribution(n: int, family: Family, *, method: str = "dp") -> dict[int, Fraction]:
    """Per-position corner probabilities over the family's full range."""
    if method == "dp":
        prob: Callable[[int], Fraction] = lambda k: corner_event_probability_dp(n, k, family)
    elif method == "formula":
        prob = lambda k: corner_event_probability_formula(n, k, family)
    else:
        raise ValueError(f"unknown method {method!r}")
    return {k: prob(k) for k in _corner_position_range(n, family)}


def expected_corners(n: int, family: Family) -> Fraction:
    """Mean corner count (symmetric: at index ``n``, size ``2n + 1``)."""
    if n < 2:
        raise DomainError(f"expected corners defined for n >= 2, got {n}")
    if family is Family.PERMUTATION:
        return Fraction(n + 4, 6) - Fraction(1, n)
    if family is Family.TREE_LIKE:
        return Fraction(n + 4, 6)
    if family is Family.TYPE_B:
        return Fraction(4 * n + 7, 24) - Fraction(1, 2 * n)
    return Fraction(4 * n + 13, 12)


def total_corners(n: int, family: Family) -> int:
    """Corner count summed over the whole family; always an integer."""
    total = expected_corners(n, family) * count_tableaux(n, family)
    if total.denominator != 1:
        raise DomainError(f"non-integer corner total {total} at n={n}")  # pragma: no cover
    return total.numerator


def last_step_south_probability(n: int, family: Family) -> Fraction:
    """Probability that the final border step is South (chain families)."""
    if family not in _CHAIN_FAMILIES:
        raise DomainError(f"no growth chain for {family.value}")
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    t = _tables(family, n)
    return Fraction(sum(t.fwd_s[n][u] for u in range(n + 1)), t.g[n][0])


def first_step_west_probability(n: int, family: Family) -> Fraction:
    """Probability that the first border step is West (chain families)."""
    if family not in _CHAIN_FAMILIES:
        raise DomainError(f"no growth chain for {family.value}")
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    if family is Family.PERMUTATION:
        return Fraction(0)
    t = _tables(family, n)
    return Fraction(t.g[n - 1][1], t.g[n][0])


@dataclass(frozen=True)
class PushforwardReport:
    """Both sides of the parent-measure identity, exactly."""

    n: int
    left: Fraction
    right: Fraction

    @property
    def equal(self) -> bool:
        return self.left == self.right


def pushforward_check(
    n: int,
    statistic: Callable[[PermutationTableau], Union[int, Fraction]],
    family: Family = Family.PERMUTATION,
) -> PushforwardReport:
    """Check ``E_n[X(parent)] = (1/n) E_{n-1}[2**U X]`` by enumeration.

    ``statistic`` is evaluated on size ``n - 1`` tableaux; both sides are
    exact rationals.
    """
    from .enumerator import enumerate_tableaux, parent_permutation

    if family is not Family.PERMUTATION:
        raise DomainError("the push-forward identity concerns permutation tableaux")
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    left_sum = sum(
        Fraction(statistic(parent_permutation(t)))
        for t in enumerate_tableaux(n, family)
    )
    left = left_sum / factorial(n)
    right_sum = sum(
        Fraction(statistic(s)) * (1 << unrestricted_row_count(s))
        for s in enumerate_tableaux(n - 1, family)
    )
    right = right_sum / (n * factorial(n - 1))
    return PushforwardReport(n, left, right)
