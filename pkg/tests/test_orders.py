import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afgr.orders import (
    dominance_leq,
    dominant_rep,
    flag_of,
    in_positive_cone,
    semiinf_leq_cone,
    semiinf_leq_lattice,
)
from afgr.weyl import AffineWeylElt, elements_up_to_length, finite_weyl_group, from_word, longest_perm

SL2_CHAIN = ["101", "10", "1", "", "0", "01"]


def _chain():
    return [from_word([int(c) for c in w], 2) for w in SL2_CHAIN]


@pytest.mark.parametrize("leq", [semiinf_leq_lattice, semiinf_leq_cone])
def test_sl2_chain(leq):
    chain = _chain()
    for i, x in enumerate(chain):
        for j, y in enumerate(chain):
            assert leq(x, y) == (i <= j)


def _sl2_elements(bound):
    return [AffineWeylElt((k, -k), p) for k in range(-bound, bound + 1) for p in ((0, 1), (1, 0))]


def test_orders_agree_sl2():
    elts = _sl2_elements(3)
    for x, y in itertools.product(elts, repeat=2):
        assert semiinf_leq_lattice(x, y) == semiinf_leq_cone(x, y)


def test_orders_agree_sl3_twisted():
    elts = elements_up_to_length(3, 3)
    for w in finite_weyl_group(3):
        for x, y in itertools.product(elts, repeat=2):
            assert semiinf_leq_lattice(x, y, w) == semiinf_leq_cone(x, y, w)


def test_orders_differ_in_rank_four():
    # the alcove cone is coarser than the lattice-chain order once n >= 4
    elts = elements_up_to_length(4, 3)
    diff = [(x, y) for x, y in itertools.product(elts, repeat=2)
            if semiinf_leq_lattice(x, y) != semiinf_leq_cone(x, y)]
    assert diff
    assert all(semiinf_leq_cone(x, y) and not semiinf_leq_lattice(x, y) for x, y in diff)


def test_w0_twist_is_default():
    elts = elements_up_to_length(3, 3)
    w0 = longest_perm(3)
    for x, y in itertools.product(elts, repeat=2):
        assert semiinf_leq_lattice(x, y, w0) == semiinf_leq_lattice(x, y)


def test_identity_twist_reverses_translations():
    e = (0, 1, 2)
    t = AffineWeylElt((1, 0, -1), e)
    o = AffineWeylElt((0, 0, 0), e)
    assert semiinf_leq_lattice(t, o, e) and not semiinf_leq_lattice(o, t, e)
    assert semiinf_leq_lattice(o, t) and not semiinf_leq_lattice(t, o)


sl3 = st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(lambda v: (v[0], v[1], -v[0] - v[1]))


@given(sl3, sl3, sl3)
def test_dominance_is_partial_order(a, b, c):
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)


@given(sl3)
def test_dominant_rep_is_max_of_orbit(a):
    d = dominant_rep(a)
    for p in itertools.permutations(a):
        assert dominance_leq(p, d)


@given(st.lists(st.integers(0, 2), max_size=6), st.lists(st.integers(0, 2), max_size=6))
def test_semiinf_is_partial_order(u, v):
    x, y = from_word(u, 3), from_word(v, 3)
    assert semiinf_leq_lattice(x, x)
    if semiinf_leq_lattice(x, y) and semiinf_leq_lattice(y, x):
        assert x == y


@given(st.lists(st.integers(0, 2), max_size=6))
def test_flag_steps(u):
    f = flag_of(from_word(u, 3))
    assert len(f.etas) == 3
    assert sum(f.etas[-1]) == sum(f.etas[0]) + 2


def test_positive_cone():
    assert in_positive_cone((1, -1, 0))
    assert not in_positive_cone((-1, 1, 0))
    assert not in_positive_cone((1, 0, 0))
