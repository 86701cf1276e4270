from fractions import Fraction

from hypothesis import example, given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from afgr import lp

small = st.integers(-4, 4)


def _highs(c, A, b, A_eq, b_eq):
    return linprog(c, A_ub=A or None, b_ub=b or None, A_eq=A_eq or None, b_eq=b_eq or None,
                   bounds=(0, None), method="highs")


def _scipy(c, A, b, A_eq, b_eq):
    res = _highs(c, A, b, A_eq, b_eq)
    if res.status == 2:
        # presolve may report "infeasible or unbounded"; a zero objective settles it
        if _highs([0] * len(c), A, b, A_eq, b_eq).status == 0:
            return lp.UNBOUNDED, None
        return lp.INFEASIBLE, None
    if res.status == 3:
        return lp.UNBOUNDED, None
    assert res.status == 0
    return lp.OPTIMAL, res.fun


@st.composite
def programs(draw):
    nv = draw(st.integers(1, 4))
    m = draw(st.integers(0, 4))
    k = draw(st.integers(0, 2))
    c = draw(st.lists(small, min_size=nv, max_size=nv))
    A = [draw(st.lists(small, min_size=nv, max_size=nv)) for _ in range(m)]
    b = draw(st.lists(small, min_size=m, max_size=m))
    A_eq = [draw(st.lists(small, min_size=nv, max_size=nv)) for _ in range(k)]
    b_eq = draw(st.lists(small, min_size=k, max_size=k))
    return c, A, b, A_eq, b_eq


@settings(max_examples=80, deadline=None)
@given(programs())
@example(([-1, -1, -1], [[1, 1, -1], [1, -1, 1]], [0, 1], [], []))
def test_matches_highs(prog):
    c, A, b, A_eq, b_eq = prog
    status, value = _scipy(c, A, b, A_eq, b_eq)
    res = lp.solve(c, A, b, A_eq, b_eq)
    assert res.status == status
    if status == lp.OPTIMAL:
        assert abs(float(res.value) - value) < 1e-7
        x = res.x
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) <= r for row, r in zip(A, b))
        assert all(sum(a * v for a, v in zip(row, x)) == r for row, r in zip(A_eq, b_eq))


def test_free_variables_and_maximize():
    # max x + y  s.t. x + 2y <= 4, 3x + y <= 6, with x free
    res = lp.solve([1, 1], [[1, 2], [3, 1]], [4, 6], free=[0], maximize=True)
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(14, 5)
    res = lp.solve([1], [[-1]], [5], free=True)
    assert res.value == -5


def test_unbounded_and_infeasible():
    assert lp.solve([-1], [[-1]], [0]).status == lp.UNBOUNDED
    assert lp.solve([0], A_eq=[[1], [1]], b_eq=[1, 2]).status == lp.INFEASIBLE


def test_redundant_equalities():
    res = lp.solve([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[3, 6])
    assert res.status == lp.OPTIMAL and res.value == 3


def test_feasible_point():
    x = lp.feasible_point(A_eq=[[1, 1, 1]], b_eq=[1], nvars=3)
    assert x is not None and sum(x) == 1
    assert lp.feasible_point(A_ub=[[1]], b_ub=[-1], nvars=1) is None


def test_degenerate_cycling_example():
    # Beale-type degenerate LP; Bland's rule must terminate
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9], [Fraction(1, 2), -90, Fraction(-1, 50), 3], [0, 0, 1, 0]]
    res = lp.solve(c, A, [0, 0, 1])
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(-1, 20)
