"""Identity suites behind the ``verify`` subcommand.

Each suite compares an enumerated or DP-computed quantity with its
closed form and reports one row per checked instance.  Rows carry both
sides pre-rendered as strings (decimal integers, ``p/q`` rationals, or
``k:p/q`` position laws), so a failing row is its own witness and the
serialized report is byte-stable.

Enumeration-backed checks honor ``max_size`` and the per-family brute
budgets; chain-level checks run over fixed cheap ranges so the default
invocation stays well under a minute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Union

from .bijections import (
    ShapeCorrespondence,
    symmetric_corner_decomposition,
    symmetric_to_type_b,
    type_b_to_symmetric,
)
from .chain import (
    ChainSpec,
    corner_distribution,
    count_tableaux,
    expected_corners,
    first_step_west_probability,
    last_step_south_probability,
    pushforward_check,
    rising_factorial_pgf,
    total_corners,
    u_distribution,
    u_pgf,
)
from .enumerator import census, enumerate_shapes, enumerate_tableaux, extend_permutation, parent_permutation
from .errors import DomainError
from .families import Family
from .tableaux import canonical_key, corner_stats, unrestricted_row_count

__all__ = [
    "VerificationRow",
    "VerificationReport",
    "SUITES",
    "run_suite",
]

_FAMILIES = (Family.TREE_LIKE, Family.PERMUTATION, Family.TYPE_B, Family.SYMMETRIC)

# census sweeps stay inside the ranges the acceptance checks exercise
_CENSUS_CAP = {
    Family.PERMUTATION: 8,
    Family.TREE_LIKE: 7,
    Family.TYPE_B: 6,
    Family.SYMMETRIC: 11,
}

_CHAIN_RANGE = range(2, 25)  # closed-form vs DP rows, enumeration-free

_census = lru_cache(maxsize=None)(census)


@dataclass(frozen=True)
class VerificationRow:
    identity: str
    parameters: str
    lhs: str
    rhs: str
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
        }


def _row(identity: str, parameters: str, lhs: object, rhs: object) -> VerificationRow:
    left, right = str(lhs), str(rhs)
    return VerificationRow(identity, parameters, left, right, "pass" if left == right else "fail")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    rows: tuple[VerificationRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)

    def failures(self) -> tuple[VerificationRow, ...]:
        return tuple(row for row in self.rows if not row.ok)

    def to_json_dict(self) -> dict:
        return {
            "schema": "verification-report/v1",
            "suite": self.suite,
            "passed": self.passed,
            "rows": [row.to_json_dict() for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VerificationReport":
        rows = tuple(
            VerificationRow(r["identity"], r["parameters"], r["lhs"], r["rhs"], r["status"])
            for r in data["rows"]
        )
        return cls(data["suite"], rows)


def _frac(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _law(values: dict[int, Fraction]) -> str:
    return " ".join(f"{k}:{_frac(v)}" for k, v in sorted(values.items()))


def _sizes(family: Family, max_size: int) -> range:
    cap = min(max_size, _CENSUS_CAP[family])
    if family is Family.SYMMETRIC:
        return range(3, cap + 1, 2)
    return range(1, cap + 1)


def _closed_form_count(family: Family, size: int) -> int:
    if family is Family.TYPE_B:
        return (1 << size) * factorial(size)
    if family is Family.SYMMETRIC:
        index = (size - 1) // 2
        return (1 << index) * factorial(index)
    return factorial(size)


def _closed_form_total(family: Family, size: int) -> Fraction:
    """Cardinality times expected corners, as an exact rational."""
    if family is Family.SYMMETRIC:
        index = (size - 1) // 2
        return expected_corners(index, family) * _closed_form_count(family, size)
    return expected_corners(size, family) * _closed_form_count(family, size)


def suite_counts(max_size: int) -> list[VerificationRow]:
    rows = []
    for family in _FAMILIES:
        for size in _sizes(family, max_size):
            rows.append(
                _row(
                    f"cardinality/{family.value}",
                    f"size={size}",
                    _census(size, family).cardinality,
                    _closed_form_count(family, size),
                )
            )
    for family in (Family.PERMUTATION, Family.TYPE_B):
        for n in _CHAIN_RANGE:
            rows.append(
                _row(
                    f"chain-count/{family.value}",
                    f"n={n}",
                    count_tableaux(n, family),
                    _closed_form_count(family, n),
                )
            )
    return rows


def _census_corner_law(family: Family, size: int) -> dict[int, Fraction]:
    c = _census(size, family)
    index = (size - 1) // 2 if family is Family.SYMMETRIC else size
    support = corner_distribution(index, family, method="formula")
    return {k: Fraction(c.corner_counts_by_k.get(k, 0), c.cardinality) for k in support}


def suite_corner_law(max_size: int) -> list[VerificationRow]:
    rows = []
    for family in _FAMILIES:
        for size in _sizes(family, max_size):
            if size < (5 if family is Family.SYMMETRIC else 2):
                continue  # closed forms start at index 2
            index = (size - 1) // 2 if family is Family.SYMMETRIC else size
            rows.append(
                _row(
                    f"corner-law-census/{family.value}",
                    f"size={size}",
                    _law(_census_corner_law(family, size)),
                    _law(corner_distribution(index, family, method="formula")),
                )
            )
        for n in _CHAIN_RANGE:
            rows.append(
                _row(
                    f"corner-law-dp/{family.value}",
                    f"n={n}",
                    _law(corner_distribution(n, family, method="dp")),
                    _law(corner_distribution(n, family, method="formula")),
                )
            )
    return rows


def suite_corner_totals(max_size: int) -> list[VerificationRow]:
    rows = []
    for family in _FAMILIES:
        for size in _sizes(family, max_size):
            if size < (5 if family is Family.SYMMETRIC else 2):
                continue
            rows.append(
                _row(
                    f"corner-total/{family.value}",
                    f"size={size}",
                    _census(size, family).total_corners,
                    _closed_form_total(family, size),
                )
            )
        for n in _CHAIN_RANGE:
            rows.append(
                _row(
                    f"expected-corners/{family.value}",
                    f"n={n}",
                    _frac(sum(corner_distribution(n, family, method="dp").values())),
                    _frac(expected_corners(n, family)),
                )
            )
    cap = min(max_size, _CENSUS_CAP[Family.TREE_LIKE])
    for n in range(2, cap + 1):
        rows.append(
            _row(
                "tree-like-extra-corners",
                f"n={n}",
                _census(n, Family.TREE_LIKE).total_corners,
                _census(n, Family.PERMUTATION).total_corners + factorial(n - 1),
            )
        )
    for n in range(1, 9):
        d = symmetric_corner_decomposition(n)
        rows.append(
            _row(
                "symmetric-corner-split",
                f"n={n}",
                d.total,
                d.twice_type_b + (1 << n) * factorial(n - 1) + (1 << (n - 1)) * factorial(n),
            )
        )
    return rows


def suite_boundary(max_size: int) -> list[VerificationRow]:
    rows = []
    for size in _sizes(Family.PERMUTATION, max_size):
        if size < 2:
            continue
        rows.append(
            _row(
                "south-end-count/permutation",
                f"size={size}",
                _census(size, Family.PERMUTATION).last_step_south_count,
                factorial(size - 1),
            )
        )
    for size in _sizes(Family.TYPE_B, max_size):
        c = _census(size, Family.TYPE_B)
        rows.append(
            _row(
                "south-end-count/type-b",
                f"size={size}",
                c.last_step_south_count,
                (1 << (size - 1)) * factorial(size - 1),
            )
        )
        rows.append(
            _row(
                "west-start-count/type-b",
                f"size={size}",
                c.first_step_west_count,
                (1 << (size - 1)) * factorial(size),
            )
        )
    for n in _CHAIN_RANGE:
        rows.append(
            _row(
                "south-end-probability/permutation",
                f"n={n}",
                _frac(last_step_south_probability(n, Family.PERMUTATION)),
                _frac(Fraction(1, n)),
            )
        )
        rows.append(
            _row(
                "south-end-probability/type-b",
                f"n={n}",
                _frac(last_step_south_probability(n, Family.TYPE_B)),
                _frac(Fraction(1, 2 * n)),
            )
        )
        rows.append(
            _row(
                "west-start-probability/type-b",
                f"n={n}",
                _frac(first_step_west_probability(n, Family.TYPE_B)),
                "1/2",
            )
        )
    return rows


def suite_extension(max_size: int) -> list[VerificationRow]:
    rows = []
    cap = min(max_size, 7)
    for n in range(2, cap + 1):
        parents = list(enumerate_tableaux(n - 1, Family.PERMUTATION))
        children: list = []
        multiplicity_ok = True
        transition_ok = True
        spec = ChainSpec(Family.PERMUTATION)
        for t in parents:
            images = extend_permutation(t)
            u = unrestricted_row_count(t)
            if len(images) != 1 << u:
                multiplicity_ok = False
            seen: dict[tuple[str, int], int] = {}
            for child in images:
                if parent_permutation(child) != t:
                    multiplicity_ok = False
                step = child.path.steps[-1]
                key = (step, unrestricted_row_count(child))
                seen[key] = seen.get(key, 0) + 1
            expected = {(tr.step, tr.target): tr.weight for tr in spec.transitions(u)}
            if seen != expected:
                transition_ok = False
            children.extend(images)
        keys = {canonical_key(c) for c in children}
        universe = {canonical_key(t) for t in enumerate_tableaux(n, Family.PERMUTATION)}
        rows.append(
            _row("extension-partition", f"n={n}", f"{len(children)} images, {len(keys)} distinct", f"{len(universe)} images, {len(universe)} distinct")
        )
        rows.append(_row("extension-multiplicity", f"n={n}", multiplicity_ok, True))
        rows.append(_row("extension-transition-law", f"n={n}", transition_ok, True))
    statistics: list[tuple[str, Callable]] = [
        ("one", lambda t: 1),
        ("two-power-u", lambda t: 1 << unrestricted_row_count(t)),
        ("corner-count", lambda t: corner_stats(t).corner_count),
    ]
    for n in range(2, cap + 1):
        for name, stat in statistics:
            report = pushforward_check(n, stat)
            rows.append(
                _row(f"pushforward/{name}", f"n={n}", _frac(report.left), _frac(report.right))
            )
    return rows


def suite_pgf(max_size: int) -> list[VerificationRow]:
    rows = []
    for m in range(1, 9):
        for z in range(1, 6):
            rows.append(
                _row(
                    "u-pgf-rising-factorial",
                    f"m={m},z={z}",
                    _frac(u_pgf(m, Family.PERMUTATION, z)),
                    _frac(rising_factorial_pgf(z, m)),
                )
            )
        rows.append(
            _row(
                "u-pgf-doubling",
                f"m={m}",
                _frac(u_pgf(m, Family.PERMUTATION, 2)),
                _frac(Fraction(m + 1)),
            )
        )
    for family in (Family.PERMUTATION, Family.TYPE_B):
        for size in _sizes(family, max_size):
            c = _census(size, family)
            histogram = {
                u: Fraction(v, c.cardinality) for u, v in (c.u_histogram or {}).items()
            }
            rows.append(
                _row(
                    f"u-histogram/{family.value}",
                    f"size={size}",
                    _law(histogram),
                    _law(u_distribution(size, family)),
                )
            )
    return rows


def suite_bijections(max_size: int) -> list[VerificationRow]:
    rows = []
    for n in range(1, min(max_size, 4) + 1):
        total = 0
        good = 0
        witness = ""
        for b in enumerate_tableaux(n, Family.TYPE_B):
            total += 1
            image = type_b_to_symmetric(b)
            if symmetric_to_type_b(image) == b:
                good += 1
            elif not witness:
                witness = f" witness={canonical_key(b)}"
        rows.append(
            _row("unfold-fold-roundtrip/type-b", f"n={n}{witness}", f"{good}/{total}", f"{total}/{total}")
        )
    for size in range(3, min(max_size, 9) + 1, 2):
        total = 0
        good = 0
        images = set()
        witness = ""
        for t in enumerate_tableaux(size, Family.SYMMETRIC):
            total += 1
            image = symmetric_to_type_b(t)
            images.add(canonical_key(image))
            if type_b_to_symmetric(image) == t:
                good += 1
            elif not witness:
                witness = f" witness={canonical_key(t)}"
        rows.append(
            _row("fold-unfold-roundtrip/symmetric", f"size={size}{witness}", f"{good}/{total}", f"{total}/{total}")
        )
        rows.append(
            _row(
                "fold-bijectivity/symmetric",
                f"size={size}",
                len(images),
                _closed_form_count(Family.SYMMETRIC, size),
            )
        )
    for n in range(2, min(max_size, 7) + 1):
        projected: dict[tuple, int] = {}
        extra = 0
        for t in enumerate_tableaux(n, Family.TREE_LIKE):
            corr = ShapeCorrespondence.of_tree_like(t.path)
            projected[corr.permutation_path.steps] = projected.get(corr.permutation_path.steps, 0) + 1
            extra += corr.corner_difference
        shape_counts: dict[tuple, int] = {}
        for t in enumerate_tableaux(n, Family.PERMUTATION):
            shape_counts[t.path.steps] = shape_counts.get(t.path.steps, 0) + 1
        rows.append(
            _row(
                "shape-projection-multiset",
                f"n={n}",
                sorted(projected.items()) == sorted(shape_counts.items()),
                True,
            )
        )
        rows.append(_row("shape-projection-extra-corners", f"n={n}", extra, factorial(n - 1)))
    for n in range(1, 9):
        d = symmetric_corner_decomposition(n)
        rows.append(
            _row(
                "corner-decomposition",
                f"n={n}",
                f"{d.twice_type_b}+{d.south_term}+{d.west_term}",
                f"{2 * total_corners(n, Family.TYPE_B) if n >= 2 else 0}"
                f"+{(1 << n) * factorial(n - 1)}+{(1 << (n - 1)) * factorial(n)}",
            )
        )
    return rows


SUITES: dict[str, Callable[[int], list[VerificationRow]]] = {
    "counts": suite_counts,
    "corner-law": suite_corner_law,
    "corner-totals": suite_corner_totals,
    "boundary": suite_boundary,
    "extension": suite_extension,
    "pgf": suite_pgf,
    "bijections": suite_bijections,
}


def run_suite(name: str, max_size: int = 6) -> VerificationReport:
    """Run one named suite, or every suite with ``name='all'``."""
    if max_size < 1:
        raise DomainError(f"max size must be positive, got {max_size}")
    if name == "all":
        rows: list[VerificationRow] = []
        for suite in SUITES.values():
            rows.extend(suite(max_size))
        return VerificationReport("all", tuple(rows))
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return VerificationReport(name, tuple(SUITES[name](max_size)))
