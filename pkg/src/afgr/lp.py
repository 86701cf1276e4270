"""Dense two-phase simplex over the rationals.

Small problems only (a few hundred columns). Bland's rule, so it always
terminates; every number is a ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p if v else v for v in row]
    nz = [j for j, v in enumerate(row) if v]
    for other in (*T[:r], *T[r + 1:], obj):
        f = other[c]
        if f:
            for j in nz:
                other[j] -= f * row[j]


def _run(T, obj, basis, allowed) -> bool:
    """Minimise; obj holds reduced costs with -value in the last slot.
    Returns False when unbounded."""
    while True:
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, obj, best[1], enter)
        basis[best[1]] = enter


def solve(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    free: Sequence[int] | bool = (),
    maximize: bool = False,
) -> LPResult:
    """Optimise c.x subject to A_ub x <= b_ub, A_eq x = b_eq.

    Variables listed in ``free`` (or all, if ``free is True``) are unbounded;
    the rest are nonnegative.
    """
    nv = len(c)
    free_set = set(range(nv)) if free is True else set(free or ())
    F = Fraction
    # column map: original j -> list of (column, sign)
    cols: list[list[tuple[int, int]]] = []
    ncol = 0
    for j in range(nv):
        if j in free_set:
            cols.append([(ncol, 1), (ncol + 1, -1)])
            ncol += 2
        else:
            cols.append([(ncol, 1)])
            ncol += 1
    n_slack = len(A_ub)
    total = ncol + n_slack
    rows, rhs = [], []
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [F(0)] * total
        for j, v in enumerate(a):
            for col, s in cols[j]:
                row[col] = s * F(v)
        row[ncol + k] = F(1)
        rows.append(row)
        rhs.append(F(b))
    for a, b in zip(A_eq, b_eq):
        row = [F(0)] * total
        for j, v in enumerate(a):
            for col, s in cols[j]:
                row[col] = s * F(v)
        rows.append(row)
        rhs.append(F(b))
    m = len(rows)
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # phase 1: one artificial per row
    T = []
    for i in range(m):
        art = [F(0)] * m
        art[i] = F(1)
        T.append(rows[i] + art + [rhs[i]])
    basis = [total + i for i in range(m)]
    width = total + m
    obj = [F(0)] * (width + 1)
    for i in range(m):
        obj = [a - b for a, b in zip(obj, T[i])]
        obj[total + i] += 1
    _run(T, obj, basis, range(width))
    if -obj[-1] != 0:
        return LPResult(INFEASIBLE)
    # drive artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= total:
            j = next((j for j in range(total) if T[i][j] != 0), None)
            if j is None:
                continue
            _pivot(T, obj, i, j)
            basis[i] = j
        keep.append(i)
    T = [[*T[i][:total], T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase 2
    cost = [F(0)] * total
    sign = -1 if maximize else 1
    for j in range(nv):
        for col, s in cols[j]:
            cost[col] = sign * s * F(c[j])
    obj = cost + [F(0)]
    for i, b in enumerate(basis):
        if obj[b] != 0:
            f = obj[b]
            obj = [a - f * v for a, v in zip(obj, T[i])]
    if not _run(T, obj, basis, range(total)):
        return LPResult(UNBOUNDED)
    xcol = [F(0)] * total
    for i, b in enumerate(basis):
        xcol[b] = T[i][-1]
    x = [sum((s * xcol[col] for col, s in cols[j]), F(0)) for j in range(nv)]
    value = sum((F(cj) * xj for cj, xj in zip(c, x)), F(0))
    return LPResult(OPTIMAL, x, value)


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvars: int = 0, free=()) -> list[Fraction] | None:
    res = solve([0] * nvars, A_ub, b_ub, A_eq, b_eq, free=free)
    return res.x if res.status == OPTIMAL else None
