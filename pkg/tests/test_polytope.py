import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from afgr.errors import DomainError, RankMismatch, TilingError, VertexDisagreement
from afgr.polytope import (
    Subdivision,
    contains,
    convex_hull,
    coset_lattice_points,
    dimension_estimate,
    dominance_extremes,
    is_sl3_mv_datum,
    minkowski_sum,
    mv_polytope_sl3,
    reflection_count,
    regularity,
    root_direction_count,
    sl3_mv_data,
    validate_tiling,
    verify_certificate,
)
from afgr.cli import mother_of_all_examples, regular_example
from oracles import in_hull_brute

THETA, ALPHA, BETA = (1, 0, -1), (1, -1, 0), (0, 1, -1)
HEXAGON = convex_hull(itertools.permutations(THETA))


def height(v):
    return sum(sum(v[: k + 1]) for k in range(len(v) - 1))


sl3 = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(lambda v: (v[0], v[1], -v[0] - v[1]))
point_sets = st.lists(sl3, min_size=1, max_size=7)


def test_hexagon_hull():
    assert len(HEXAGON.vertices) == 6
    assert HEXAGON.dim == 2
    assert contains(HEXAGON, (0, 0, 0))
    assert not contains(HEXAGON, (2, 0, -2))


def test_coset_points():
    assert len(coset_lattice_points(HEXAGON, THETA)) == 7
    seg = convex_hull([(-2, 2), (1, -1)])
    assert len(coset_lattice_points(seg, (1, -1))) == 4
    pt = convex_hull([(1, -1)])
    assert coset_lattice_points(pt, (1, -1)) == [(1, -1)]


def test_root_direction_examples():
    assert root_direction_count(HEXAGON, THETA) == 4
    seg = convex_hull([(-2, 2), (1, -1)])
    assert root_direction_count(seg, (1, -1)) == root_direction_count(seg, (-2, 2)) == 3
    assert root_direction_count(convex_hull([(0, 0, 0)]), (0, 0, 0)) == 0
    with pytest.raises(DomainError):
        root_direction_count(HEXAGON, (0, 0, 0))


def test_dimension_estimate_examples():
    assert dimension_estimate(HEXAGON) == 4
    assert dimension_estimate(convex_hull([(0, 0, 0), ALPHA, THETA])) == 2
    assert dimension_estimate(convex_hull([(-2, 2), (1, -1)])) == 3


def test_vertex_disagreement_reported():
    par = minkowski_sum(convex_hull([(0, 0, 0), ALPHA]), convex_hull([(0, 0, 0), BETA]))
    with pytest.raises(VertexDisagreement) as e:
        dimension_estimate(par)
    assert sorted(e.value.counts.values()) == [2, 2, 3, 3]


def test_minkowski_examples():
    par = minkowski_sum(convex_hull([(0, 0, 0), ALPHA]), convex_hull([(0, 0, 0), BETA]))
    assert len(par.vertices) == 4
    trap = minkowski_sum(convex_hull([(0, 0, 0), ALPHA, THETA]), convex_hull([(0, 0, 0), BETA]))
    assert len(trap.vertices) == 4
    assert mv_polytope_sl3(0, 0, 0, 0).vertices == ((0, 0, 0),)
    assert mv_polytope_sl3(1, 0, 0, 0) == convex_hull([(0, 0, 0), ALPHA])
    hexagon = mv_polytope_sl3(0, 0, 1, 1)
    assert hexagon == convex_hull(tuple(a + b for a, b in zip(v, THETA)) for v in HEXAGON.vertices)


def test_mv_polytopes_vertex_independent():
    data = sl3_mv_data(2)
    assert len(data) == 45
    for c in data:
        P = mv_polytope_sl3(*c)
        bottom, top = dominance_extremes(P)
        assert dimension_estimate(P) == height([a - b for a, b in zip(top, bottom)])


def test_non_mv_sums_all_disagree():
    # every sum using both segments fails vertex independence
    bad = [c for c in itertools.product(range(3), repeat=4) if not is_sl3_mv_datum(c)]
    assert len(bad) == 36
    for c in bad:
        with pytest.raises(VertexDisagreement):
            dimension_estimate(mv_polytope_sl3(*c))


@pytest.mark.parametrize("a,b", [(a, b) for a in range(-3, 4) for b in range(-3, 4) if 0 < abs(a - b) <= 6])
def test_sl2_segments(a, b):
    seg = convex_hull([(a, -a), (b, -b)])
    assert dimension_estimate(seg) == abs(a - b)


@given(point_sets, sl3)
def test_contains_matches_brute_force(pts, p):
    assert contains(convex_hull(pts), p) == in_hull_brute(p, pts)


@given(point_sets)
def test_hull_vertices_are_extreme(pts):
    P = convex_hull(pts)
    assert set(P.vertices) <= {tuple(Fraction(v) for v in q) for q in pts}
    for v in P.vertices:
        others = [q for q in P.vertices if q != v]
        if others:
            assert not in_hull_brute(v, others)
    for q in pts:
        assert contains(P, q)


@given(point_sets, point_sets, point_sets)
@settings(max_examples=30)
def test_minkowski_laws(a, b, c):
    A, B, C = convex_hull(a), convex_hull(b), convex_hull(c)
    assert minkowski_sum(A, B) == minkowski_sum(B, A)
    assert minkowski_sum(minkowski_sum(A, B), C) == minkowski_sum(A, minkowski_sum(B, C))
    assert len(minkowski_sum(A, B).vertices) <= len(A.vertices) + len(B.vertices)


@given(point_sets)
def test_reflection_count_agrees_at_lattice_vertices(pts):
    P = convex_hull(pts)
    for v in P.vertices:
        assert reflection_count(P, v) == root_direction_count(P, v)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        minkowski_sum(HEXAGON, convex_hull([(0, 0)]))
    with pytest.raises(RankMismatch):
        contains(HEXAGON, (0, 0))
    with pytest.raises(DomainError):
        mv_polytope_sl3(-1, 0, 0, 0)


def test_higher_dimensional_hull_by_lp():
    P = convex_hull(itertools.permutations((1, 0, 0, -1)))
    assert P.dim == 3
    assert len(P.vertices) == 12
    assert contains(P, (0, 0, 0, 0))
    assert not contains(P, (2, 0, -1, -1))


# ------------------------------------------------------------ regularity

def _lift_check(P, S, res):
    """Direct check that heights put every cell on a lower face, strictly."""
    chart = P.chart
    h = dict(zip(res.points, res.heights))
    for C in S.cells:
        verts = list(C.vertices)
        # interpolate an affine function through dim+1 affinely independent vertices
        base = [chart.coords(v) for v in verts]
        d = len(base[0])
        rows = [list(u) + [1] for u in base]
        M = sympy.Matrix(rows)
        coef = M.solve_least_squares(sympy.Matrix([h[v] for v in verts]))
        f = lambda u: sum(c * x for c, x in zip(coef[:d], u)) + coef[d]
        for v in verts:
            assert f(chart.coords(v)) == h[v]
        for p in res.points:
            if p not in verts:
                assert h[p] > f(chart.coords(p))


def test_trivial_and_rhombi_regular():
    for name in ("trivial", "rhombi"):
        P, S = regular_example(name)
        res = regularity(P, S)
        assert res.regular and res.margin > 0
        _lift_check(P, S, res)


def test_mother_not_regular_with_certificate():
    P, S = mother_of_all_examples()
    res = regularity(P, S)
    assert not res.regular
    assert verify_certificate(P, S, res)
    # float LP oracle agrees that no positive margin exists
    assert _highs_margin(P, S, res.points) < 1e-9


def test_flip_makes_mother_regular():
    P, S = mother_of_all_examples(flip=True)
    res = regularity(P, S)
    assert res.regular
    _lift_check(P, S, res)
    assert _highs_margin(P, S, res.points) > 1e-6


def _highs_margin(P, S, pts):
    chart = P.chart
    U = [[float(x) for x in chart.coords(p)] for p in pts]
    d, npts, nc = P.dim, len(pts), len(S.cells)
    nv = npts + nc * (d + 1) + 1
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for c, C in enumerate(S.cells):
        for k, p in enumerate(pts):
            row = [0.0] * nv
            base = npts + c * (d + 1)
            row[base:base + d] = U[k]
            row[base + d] = 1.0
            row[k] = -1.0
            if p in C.vertices:
                A_eq.append(row)
                b_eq.append(0.0)
            else:
                row[-1] = 1.0
                A_ub.append(row)
                b_ub.append(0.0)
    cost = [0.0] * nv
    cost[-1] = -1.0
    bounds = [(None, None)] * (nv - 1) + [(None, 1.0)]
    r = linprog(cost, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq, bounds=bounds, method="highs")
    assert r.status == 0
    return -r.fun


def test_certificate_rejected_when_tampered():
    P, S = mother_of_all_examples()
    res = regularity(P, S)
    key = next(iter(res.certificate))
    res.certificate[key] *= 2
    assert not verify_certificate(P, S, res)


def test_bad_tilings():
    P, S = regular_example("rhombi")
    with pytest.raises(TilingError):
        validate_tiling(P, Subdivision(S.cells[:2]))
    with pytest.raises(TilingError):
        validate_tiling(P, Subdivision(S.cells + (S.cells[0],)))
    big = convex_hull([(0, 0, 0), (2, -2, 0), (2, 0, -2)])
    halves = Subdivision((convex_hull([(0, 0, 0), (2, -2, 0), (1, 0, -1)]),
                          convex_hull([(0, 0, 0), (1, -1, 0), (2, 0, -2)]),
                          convex_hull([(1, -1, 0), (2, -2, 0), (2, 0, -2)])))
    with pytest.raises(TilingError):
        validate_tiling(big, halves)


@given(point_sets)
@settings(max_examples=25)
def test_trivial_subdivision_always_regular(pts):
    P = convex_hull(pts)
    assert regularity(P, Subdivision((P,))).regular
