"""Exactly uniform random tableaux and Monte Carlo corner estimates.

Sampling is trajectory-first: the border path and its unrestricted-row
sequence are drawn step by step, choosing each transition with
probability (transition weight) x (backward completion weight) over the
total, which makes the resulting path carry exactly the law of a
uniformly random tableau.  Permutation tableaux are then realized
filling-level (the chosen column subsets are drawn uniformly among those
reaching the chosen next state); type-B sampling stays at the path
level, which determines every corner statistic.

Randomness contract (generator id ``sha256-stream/mt19937/v1``): sample
``i`` of a run seeded with ``seed`` uses a ``random.Random`` (Mersenne
Twister) seeded with the integer digest of ``SHA-256("<seed>|<i>")``.
Every sample is a pure function of ``(seed, index)``, so partitioning
samples across workers cannot change any estimate, and reports are
byte-identical across runs.

Integer draws use rejection below a power of two, so all categorical
choices are exact over the arbitrary-precision weights; no floating
point touches the sampling path.
"""

from __future__ import annotations

import hashlib
import math
import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .chain import (
    ChainSpec,
    Transition,
    _tables,
    corner_event_probability_formula,
    count_tableaux,
    expected_corners,
)
from .errors import DomainError
from .families import Family
from .shapes import SOUTH, WEST, BorderPath
from .tableaux import PermutationTableau, unrestricted_rows

__all__ = [
    "GENERATOR_ID",
    "Trajectory",
    "sample_trajectory",
    "sample_trajectories",
    "sample_permutation_tableau",
    "sample_permutation_tableaux",
    "McStatistic",
    "McReport",
    "monte_carlo_corner_report",
    "chi_square_survival",
]

GENERATOR_ID = "sha256-stream/mt19937/v1"

_CHAIN_FAMILIES = (Family.PERMUTATION, Family.TYPE_B)


def substream(seed: int, index: int) -> random.Random:
    """The independent RNG owning sample ``index`` of a run."""
    digest = hashlib.sha256(f"{seed}|{index}".encode("ascii")).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _int_below(rng: random.Random, bound: int) -> int:
    """Uniform integer in [0, bound); exact for unbounded ``bound``."""
    bits = bound.bit_length()
    while True:
        x = rng.getrandbits(bits)
        if x < bound:
            return x


def _choose_index(rng: random.Random, cumulative: Sequence[int]) -> int:
    """Index i with probability (cum[i] - cum[i-1]) / cum[-1]."""
    return bisect_right(cumulative, _int_below(rng, cumulative[-1]))


@dataclass(frozen=True)
class Trajectory:
    """One realization of the growth chain: states and steps in order.

    ``steps`` read left to right are the border path of the sampled
    tableau; ``u_sequence`` has length ``len(steps) + 1`` and starts at 0.
    """

    family: Family
    u_sequence: tuple[int, ...]
    steps: str

    @property
    def n(self) -> int:
        return len(self.steps)

    def path(self) -> BorderPath:
        return BorderPath(self.steps)

    def corner_count(self) -> int:
        return self.steps.count(SOUTH + WEST)


class _StepSampler:
    """Per-position cumulative transition weights for one (n, family).

    At position ``k`` (steps taken so far) in state ``u``, transition
    ``t`` is chosen with weight ``t.weight * g[n-k-1][t.target]``; the
    lists are built lazily per state and reused across samples.
    """

    def __init__(self, n: int, family: Family):
        if family not in _CHAIN_FAMILIES:
            raise DomainError(f"sampling is defined on the chain families, not {family.value}")
        if n < 1:
            raise DomainError(f"size must be at least 1, got {n}")
        self.n = n
        self.family = family
        self.spec = ChainSpec(family)
        self._g = _tables(family, n).g
        self._cache: dict[tuple[int, int], tuple[tuple[Transition, ...], list[int]]] = {}

    def options(self, k: int, u: int) -> tuple[tuple[Transition, ...], list[int]]:
        key = (k, u)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        suffix = self._g[self.n - k - 1]
        transitions = self.spec.transitions(u)
        cumulative: list[int] = []
        acc = 0
        for t in transitions:
            acc += t.weight * suffix[t.target]
            cumulative.append(acc)
        self._cache[key] = (transitions, cumulative)
        return transitions, cumulative

    def draw(self, rng: random.Random) -> Trajectory:
        u = 0
        states = [0]
        steps: list[str] = []
        for k in range(self.n):
            transitions, cumulative = self.options(k, u)
            t = transitions[_choose_index(rng, cumulative)]
            steps.append(t.step)
            u = t.target
            states.append(u)
        return Trajectory(self.family, tuple(states), "".join(steps))


_step_samplers: dict[tuple[int, Family], _StepSampler] = {}


def _step_sampler(n: int, family: Family) -> _StepSampler:
    key = (n, family)
    if key not in _step_samplers:
        _step_samplers[key] = _StepSampler(n, family)
    return _step_samplers[key]


def sample_trajectory(n: int, family: Family, seed: int, index: int = 0) -> Trajectory:
    """Draw trajectory ``index`` of the run seeded with ``seed``."""
    return _step_sampler(n, family).draw(substream(seed, index))


def sample_trajectories(n: int, family: Family, seed: int, count: int) -> Iterator[Trajectory]:
    sampler = _step_sampler(n, family)
    for index in range(count):
        yield sampler.draw(substream(seed, index))


def _draw_column_subset(rng: random.Random, unrest: Sequence[int], j: int) -> set[int]:
    """Uniform non-empty subset of the unrestricted rows landing on state ``j``.

    The resulting state is |A| plus the number of unrestricted rows above
    the topmost chosen one, so the topmost choice ``i`` (1-based among
    ``unrest``) has multiplicity C(u-i, j-i); the remaining ``j - i``
    members are uniform among the rows below ``i``.
    """
    u = len(unrest)
    cumulative: list[int] = []
    acc = 0
    for i in range(1, j + 1):
        acc += math.comb(u - i, j - i)
        cumulative.append(acc)
    i = 1 + _choose_index(rng, cumulative)
    chosen = {unrest[i - 1]}
    needed = j - i
    for offset, row in enumerate(unrest[i:]):
        remaining = u - i - offset
        if needed and _int_below(rng, remaining) < needed:
            chosen.add(row)
            needed -= 1
    return chosen


def _grow_tableau(rng: random.Random, n: int) -> PermutationTableau:
    sampler = _step_sampler(n, Family.PERMUTATION)
    path = SOUTH
    rows: tuple[tuple[int, ...], ...] = ((),)
    u = 1
    for k in range(1, n):
        transitions, cumulative = sampler.options(k, u)
        t = transitions[_choose_index(rng, cumulative)]
        if t.step == SOUTH:
            path += SOUTH
            rows = rows + ((),)
        else:
            unrest = unrestricted_rows(PermutationTableau(BorderPath(path), rows))
            chosen = _draw_column_subset(rng, unrest, t.target)
            path += WEST
            rows = tuple((1 if r in chosen else 0,) + row for r, row in enumerate(rows, start=1))
        u = t.target
    return PermutationTableau(BorderPath(path), rows)


def sample_permutation_tableau(n: int, seed: int, index: int = 0) -> PermutationTableau:
    """Exactly uniform element of the size-``n`` permutation family."""
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    return _grow_tableau(substream(seed, index), n)


def sample_permutation_tableaux(n: int, seed: int, count: int) -> Iterator[PermutationTableau]:
    if n < 1:
        raise DomainError(f"size must be at least 1, got {n}")
    for index in range(count):
        yield _grow_tableau(substream(seed, index), n)


@dataclass(frozen=True)
class McStatistic:
    """One estimated quantity next to its exact reference."""

    name: str
    estimate: float
    standard_error: float
    reference: Fraction
    z_score: float

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "estimate": _sig12(self.estimate),
            "standardError": _sig12(self.standard_error),
            "reference": f"{self.reference.numerator}/{self.reference.denominator}",
            "zScore": _sig12(self.z_score),
        }


@dataclass(frozen=True)
class McReport:
    """Monte Carlo corner estimates with exact references and z-scores."""

    family: Family
    n: int
    sample_count: int
    seed: int
    generator: str
    mean_corners: McStatistic
    per_position: tuple[McStatistic, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema": "mc-report/v1",
            "family": self.family.value,
            "n": self.n,
            "sampleCount": self.sample_count,
            "seed": self.seed,
            "generator": self.generator,
            "meanCorners": self.mean_corners.to_json_dict(),
            "perPosition": [s.to_json_dict() for s in self.per_position],
        }


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _statistic(name: str, total: int, total_sq: int, count: int, reference: Fraction) -> McStatistic:
    mean = total / count
    variance = max(total_sq / count - mean * mean, 0.0) * count / max(count - 1, 1)
    se = math.sqrt(variance / count)
    z = (mean - float(reference)) / se if se > 0 else 0.0
    return McStatistic(name, mean, se, reference, z)


def monte_carlo_corner_report(
    n: int, family: Family, sample_count: int, seed: int
) -> McReport:
    """Estimate corner statistics from seeded trajectories and compare
    them with the exact closed forms."""
    if family not in _CHAIN_FAMILIES:
        raise DomainError(f"sampling is defined on the chain families, not {family.value}")
    if n < 2:
        raise DomainError(f"Monte Carlo reports need n >= 2, got {n}")
    if sample_count < 100:
        raise DomainError(f"sample count must be at least 100, got {sample_count}")
    total = 0
    total_sq = 0
    position_hits = [0] * n  # index k-1 counts corners at position k
    sampler = _step_sampler(n, family)
    for index in range(sample_count):
        trajectory = sampler.draw(substream(seed, index))
        corners = 0
        steps = trajectory.steps
        for k in range(n - 1):
            if steps[k] == SOUTH and steps[k + 1] == WEST:
                corners += 1
                position_hits[k] += 1
        total += corners
        total_sq += corners * corners
    mean = _statistic("meanCorners", total, total_sq, sample_count, expected_corners(n, family))
    per_position = tuple(
        _statistic(
            f"corner@{k}",
            position_hits[k - 1],
            position_hits[k - 1],  # indicator: squares equal values
            sample_count,
            corner_event_probability_formula(n, k, family),
        )
        for k in range(1, n)
    )
    return McReport(family, n, sample_count, seed, GENERATOR_ID, mean, per_position)


def _upper_gamma_regularized(a: float, x: float) -> float:
    """Q(a, x), the normalized upper incomplete gamma function.

    Series for the lower part when ``x < a + 1``, Lentz continued
    fraction otherwise; accurate to ~1e-12, ample for test thresholds.
    """
    if x < 0 or a <= 0:
        raise DomainError("gamma arguments out of range")
    if x == 0:
        return 1.0
    log_prefix = a * math.log(x) - x - math.lgamma(a)
    if x < a + 1:
        term = 1.0 / a
        total = term
        denom = a
        for _ in range(1000):
            denom += 1
            term *= x / denom
            total += term
            if abs(term) < abs(total) * 1e-16:
                break
        return 1.0 - total * math.exp(log_prefix)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    return math.exp(log_prefix) * h


def chi_square_survival(statistic: float, dof: int) -> float:
    """P(X >= statistic) for a chi-square variable with ``dof`` degrees."""
    if dof < 1:
        raise DomainError(f"degrees of freedom must be positive, got {dof}")
    return _upper_gamma_regularized(dof / 2.0, statistic / 2.0)
