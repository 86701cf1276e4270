"""The SL3 corpus inside Gr^{alpha+beta}: one MV cycle for each top weight mu."""

from __future__ import annotations

from dataclasses import dataclass

from afgr.degeneration import DEFAULT_CAP, component_lower_bound, component_upper_bound
from afgr.dims import height
from afgr.polytope import Polytope, convex_hull, dimension_estimate

THETA = (1, 0, -1)
ALPHA = (1, -1, 0)
BETA = (0, 1, -1)


def _neg(v):
    return tuple(-x for x in v)


@dataclass(frozen=True)
class GoldenCase:
    name: str
    mu: tuple[int, ...]
    vertices: tuple[tuple[int, ...], ...]
    lower_bound: int
    components: int

    @property
    def polytope(self) -> Polytope:
        return convex_hull(self.vertices)

    @property
    def dim(self) -> int:
        return height(tuple(a + b for a, b in zip(self.mu, THETA)))


CASES = (
    GoldenCase("point", _neg(THETA), (_neg(THETA),), 1, 1),
    GoldenCase("segment", _neg(ALPHA), (_neg(THETA), _neg(ALPHA)), 2, 2),
    GoldenCase("triangle", (0, 0, 0), (_neg(THETA), _neg(BETA), (0, 0, 0)), 3, 3),
    GoldenCase("trapezoid", ALPHA, (_neg(THETA), _neg(BETA), _neg(ALPHA), ALPHA), 4, 5),
    GoldenCase("hexagon", THETA, (THETA, _neg(THETA), ALPHA, _neg(ALPHA), BETA, _neg(BETA)), 6, 6),
)
CASE_NAMES = tuple(c.name for c in CASES)


def case(name: str) -> GoldenCase:
    for c in CASES:
        if c.name == name:
            return c
    raise KeyError(name)


@dataclass(frozen=True)
class GoldenRow:
    case: GoldenCase
    dim: int
    lower_bound: int
    upper_bound: int | str
    examined: int
    candidates: int

    @property
    def passed(self) -> bool:
        c = self.case
        return (
            self.dim == c.dim
            and self.lower_bound == c.lower_bound
            and isinstance(self.upper_bound, int)
            and self.lower_bound <= self.upper_bound
            and self.upper_bound >= c.components
        )


def run_case(c: GoldenCase, cap: int = DEFAULT_CAP) -> GoldenRow:
    P = c.polytope
    d = dimension_estimate(P)
    ub = component_upper_bound(P, d, cap)
    return GoldenRow(c, d, component_lower_bound(P), ub.value, ub.examined, ub.candidates)


def run_all(cap: int = DEFAULT_CAP, names=None) -> list[GoldenRow]:
    return [run_case(c, cap) for c in CASES if names is None or c.name in names]
