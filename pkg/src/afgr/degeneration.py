"""
Limits of T-stable subvarieties of Gr (times G/B) in the central degeneration
to the affine flag variety, at the level of fixed points and moment polytopes.

A component is recorded as an anchor fixed point plus, when known, its
polytope; nothing here builds schemes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from afgr import dims
from afgr.errors import DomainError, RankMismatch
from afgr.orders import dominant_rep, in_positive_cone, is_dominant, semiinf_leq
from afgr.polytope import (
    Polytope,
    _cross,
    _planar_hull,
    convex_hull,
    coset_lattice_points,
    reflection_count,
)
from afgr.weyl import (
    AffineRoot,
    AffineWeylElt,
    Root,
    Perm,
    alcove_barycenter,
    compose,
    finite_weyl_group,
    from_word,
    length,
    lower_interval,
    moment_image,
    perm_act,
    positive_roots,
    reflection,
    sort_key,
    translation,
    transposition,
)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Component:
    anchor: AffineWeylElt
    dim: int | None = None
    polytope: Polytope | None = None


@dataclass(frozen=True)
class P1Limit:
    fixed_points: tuple[AffineWeylElt, AffineWeylElt, AffineWeylElt]
    edges: tuple[tuple[AffineWeylElt, AffineWeylElt], tuple[AffineWeylElt, AffineWeylElt]]
    # the affine roots whose reflections realise the two edges
    edge_roots: tuple[AffineRoot, AffineRoot]

    @property
    def middle(self) -> AffineWeylElt:
        return self.fixed_points[1]


@dataclass(frozen=True)
class UpperBound:
    count: int
    complete: bool
    examined: int
    candidates: int

    @property
    def value(self) -> int | str:
        return self.count if self.complete else "cap exceeded"


@dataclass
class LimitReport:
    polytope: Polytope
    lower_bound: int
    upper_bound: int | str
    components: list[Component] | None = None


@dataclass(frozen=True)
class SL2MVLimit:
    d: int
    fixed_point_count: int
    cells_by_dim: dict[int, int] = field(hash=False)
    components: tuple[Component, ...]


# ------------------------------------------------------------ fixed points

def degenerate_fixed_point(beta: Sequence[int]) -> AffineWeylElt:
    return translation(beta)


def _root_multiple(d: Sequence[int]):
    """(root, m) with d = m * root^vee, root positive, m >= 1; else None."""
    nz = [k for k, v in enumerate(d) if v != 0]
    if len(nz) != 2:
        return None
    i, j = nz
    if d[i] + d[j] != 0 or d[i] < 0:
        return None
    return (i, j), d[i]


def degenerate_p1(b1: Sequence[int], b2: Sequence[int]) -> P1Limit:
    """Limit of the T-stable P^1 through t^{b1}, t^{b2}: two P^1's meeting at (b1, s_a)."""
    b1, b2 = tuple(int(v) for v in b1), tuple(int(v) for v in b2)
    if len(b1) != len(b2):
        raise RankMismatch(f"rank {len(b1)} vs {len(b2)}")
    if b1 == b2:
        raise DomainError("the two fixed points coincide")
    rm = _root_multiple([x - y for x, y in zip(b1, b2)])
    if rm is None:
        raise DomainError(f"{list(b1)} - {list(b2)} is not a positive multiple of a positive coroot")
    (i, j), m = rm
    n = len(b1)
    top = translation(b1)
    mid = AffineWeylElt(b1, transposition(n, i, j))
    bot = translation(b2)
    a = Root(i, j)
    k = a.pair(b1)
    return P1Limit((top, mid, bot), ((top, mid), (mid, bot)), (AffineRoot(a, k), AffineRoot(a, k - m)))


def degenerate_root_subgroup(gamma: AffineRoot) -> AffineRoot:
    """U_{a + k delta} limits to U_{a + (k+1) delta} when a is negative."""
    if gamma.root.positive:
        return gamma
    return AffineRoot(gamma.root, gamma.level + 1)


def degenerate_product_orbit(mu: Sequence[int], gammas: Sequence[AffineRoot]):
    if len(set(gammas)) != len(gammas):
        raise DomainError("repeated affine root in the product")
    return translation(mu), [degenerate_root_subgroup(g) for g in gammas]


def degenerate_semiinfinite(w: Perm, mu: Sequence[int]) -> AffineWeylElt:
    """Anchor of the limit of S_w^mu; its closure is {y : semiinf_leq(y, anchor, w)}."""
    return translation(mu)


def semiinfinite_closure_contains(anchor: AffineWeylElt, y: AffineWeylElt, w: Perm) -> bool:
    return semiinf_leq(y, anchor, w)


# ------------------------------------------------------ G(O)-orbit limits

def _require_dominant(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if sum(lam) != 0:
        raise DomainError(f"{list(lam)} is not an SL coweight")
    if not is_dominant(lam):
        raise DomainError(f"{list(lam)} is not dominant")
    return lam


def admissible_set(lam: Sequence[int]) -> tuple[list[AffineWeylElt], list[AffineWeylElt]]:
    """(all lam-admissible elements, the maximal ones t_{w lam})."""
    lam = _require_dominant(lam)
    n = len(lam)
    tops = sorted({translation(perm_act(w, lam)) for w in finite_weyl_group(n)}, key=sort_key)
    below: set[AffineWeylElt] = set()
    for t in tops:
        below.update(lower_interval(t))
    return sorted(below, key=sort_key), tops


def iwahori_polytope(x: AffineWeylElt) -> Polytope:
    """Moment polytope of the closed Iwahori orbit of x in Fl."""
    return convex_hull(moment_image(y) for y in lower_interval(x))


def limit_polytope(P: Polytope) -> Polytope:
    if not all(v.denominator == 1 for p in P.vertices for v in p):
        raise DomainError("limit polytope needs lattice vertices")
    b0 = alcove_barycenter(P.rank)
    return convex_hull(tuple(a + b for a, b in zip(p, b0)) for p in P.vertices)


def go_orbit_limit(lam: Sequence[int]) -> LimitReport:
    lam = _require_dominant(lam)
    _, tops = admissible_set(lam)
    comps = [Component(t, length(t), iwahori_polytope(t)) for t in tops]
    P = convex_hull(perm_act(w, lam) for w in finite_weyl_group(len(lam)))
    return LimitReport(limit_polytope(P), len(tops), len(tops), comps)


# ------------------------------------------------------------ bounds

def component_lower_bound(P: Polytope) -> int:
    if not all(v.denominator == 1 for p in P.vertices for v in p):
        raise DomainError("lower bound needs lattice vertices")
    return len(P.vertices)


def fixed_points_in(Q: Polytope) -> list[AffineWeylElt]:
    """Fixed points whose moment image lies in Q, sorted."""
    n = Q.rank
    b0 = alcove_barycenter(n)
    out = []
    for w in finite_weyl_group(n):
        wb = perm_act(w, b0)
        for q in coset_lattice_points(Q, wb):
            out.append(AffineWeylElt(tuple(int(a - b) for a, b in zip(q, wb)), w))
    return sorted(out, key=sort_key)


def _mirror_pair(x: AffineWeylElt, y: AffineWeylElt, px, py) -> bool:
    """Whether y = r x for an affine reflection r (detected on moment images)."""
    d = [b - a for a, b in zip(px, py)]
    rm = _root_multiple(d) or _root_multiple([-v for v in d])
    if rm is None:
        return False
    (i, j), _ = rm
    a = Root(i, j)
    mid = (a.pair(px) + a.pair(py)) / 2
    if mid.denominator != 1:
        return False
    return compose(reflection(AffineRoot(a, int(mid)), x.rank), x) == y


class _Planar:
    """Integer chart coordinates (padded to the plane) for fast hull tests."""

    def __init__(self, chart, points):
        us = [chart.coords(p) for p in points]
        den = 1
        for u in us:
            for v in u:
                den = den * v.denominator // math.gcd(den, v.denominator)
        self.pts = [tuple(int(v * den) for v in (*u, 0, 0)[:2]) for u in us]

    def ring(self, idx: Sequence[int]) -> list:
        pts = [self.pts[i] for i in idx]
        return _planar_hull(pts) if len(pts) > 2 else sorted(pts)

    def convex_position(self, idx: Sequence[int]) -> bool:
        return len(self.ring(idx)) == len(idx)

    def inside(self, ring: list, i: int) -> bool:
        p = self.pts[i]
        if len(ring) == 1:
            return p == ring[0]
        if len(ring) == 2:
            a, b = ring
            return _cross(a, b, p) == 0 and min(a, b) <= p <= max(a, b)
        return all(_cross(ring[k], ring[(k + 1) % len(ring)], p) >= 0 for k in range(len(ring)))


def component_upper_bound(P: Polytope, d: int, cap: int = DEFAULT_CAP) -> UpperBound:
    """Count candidate component polytopes in the limit of a cycle with polytope P.

    Candidates Q have vertices at fixed points inside P~ = limit_polytope(P)
    and satisfy (i) vertices differing by a root direction are mirror images
    under an affine reflection, (ii) every vertex sees >= d affine
    mirror images of itself inside Q.  Vertex sets are enumerated by DFS
    in convex position; at most ``cap`` sets are examined.
    """
    Pt = limit_polytope(P)
    fixed = {moment_image(x): x for x in fixed_points_in(Pt)}
    fixed_pts = list(fixed)
    # vertices need >= d mirror images inside Q, hence inside P~
    cands = [k for k, p in enumerate(fixed_pts) if reflection_count(Pt, p) >= d]
    m = len(cands)
    compat = [[True] * m for _ in range(m)]
    for i, j in combinations(range(m), 2):
        p, q = fixed_pts[cands[i]], fixed_pts[cands[j]]
        compat[i][j] = compat[j][i] = _pair_ok(fixed[p], fixed[q], p, q)
    index = {p: k for k, p in enumerate(fixed_pts)}
    mirrors = [[index[q] for q in _mirrors(fixed_pts[k], fixed, Pt)] for k in cands]
    planar = _Planar(Pt.chart, fixed_pts) if Pt.dim <= 2 else None

    def satisfies_ii(chosen: list[int]) -> bool:
        if planar is not None:
            ring = planar.ring([cands[i] for i in chosen])
            return all(sum(1 for q in mirrors[i] if planar.inside(ring, q)) >= d for i in chosen)
        Q = convex_hull(fixed_pts[cands[i]] for i in chosen)
        return all(reflection_count(Q, fixed_pts[cands[i]]) >= d for i in chosen)

    def convex(chosen: list[int]) -> bool:
        if planar is not None:
            return planar.convex_position([cands[i] for i in chosen])
        return len(convex_hull(fixed_pts[cands[i]] for i in chosen).vertices) == len(chosen)

    count = examined = 0
    complete = True
    stack = [([k], k) for k in reversed(range(m))]
    while stack:
        chosen, last = stack.pop()
        examined += 1
        if examined > cap:
            complete = False
            break
        if satisfies_ii(chosen):
            count += 1
        for k in reversed(range(last + 1, m)):
            if all(compat[k][i] for i in chosen):
                nxt = chosen + [k]
                if convex(nxt):
                    stack.append((nxt, k))
    return UpperBound(count, complete, min(examined, cap), m)


def _pair_ok(x, y, px, py) -> bool:
    d = [b - a for a, b in zip(px, py)]
    if _root_multiple(d) is None and _root_multiple([-v for v in d]) is None:
        return True
    return _mirror_pair(x, y, px, py)


def _mirrors(v, fixed: dict, Pt: Polytope) -> list:
    out = []
    n = Pt.rank
    for a in positive_roots(n):
        step = a.coroot(n)
        s = a.pair(v)
        lo = min(a.pair(p) for p in Pt.vertices)
        hi = max(a.pair(p) for p in Pt.vertices)
        # the mirror across <x, a> = k has pairing 2k - s, which must stay in [lo, hi]
        for k in range(_floor((lo + s) / 2), _floor((hi + s) / 2) + 1):
            if k == s:
                continue
            q = tuple(x + (k - s) * y for x, y in zip(v, step))
            if q in fixed and q != v:
                out.append(q)
    return out


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def limit_report(P: Polytope, d: int | None = None, cap: int = DEFAULT_CAP) -> LimitReport:
    from afgr.polytope import dimension_estimate

    if d is None:
        d = dimension_estimate(P)
    ub = component_upper_bound(P, d, cap)
    return LimitReport(limit_polytope(P), component_lower_bound(P), ub.value)


# ------------------------------------------------------------ exact SL2

def sl2_mv_limit(lam: Sequence[int], mu: Sequence[int]) -> SL2MVLimit:
    """Limit of the SL2 MV cycle S_e^{-lam} meet S_{w0}^{mu}, with d = height(mu + lam)."""
    lam = _require_dominant(lam)
    mu = tuple(int(v) for v in mu)
    if len(lam) != 2 or len(mu) != 2:
        raise DomainError("sl2_mv_limit is an SL_2 statement")
    s = tuple(a + b for a, b in zip(mu, lam))
    if not in_positive_cone(s):
        raise DomainError(f"empty cycle: {list(mu)} + {list(lam)} is not >= 0")
    d = dims.height(s)
    cells = {k: 2 * (d - k) for k in range(1, d)}
    if d == 0:
        comps: tuple[Component, ...] = ()
    else:
        comps = (Component(translation(tuple(-v for v in lam)), d), Component(translation(mu), d))
    return SL2MVLimit(d, 2 * d + 1, cells, comps)


def sl2_iwahori_limit(gamma: Sequence[int], opposite: bool = False) -> tuple[Component, Component]:
    """The two components in the limit of the (opposite) Iwahori orbit through t^gamma in SL_2."""
    g = tuple(int(v) for v in gamma)
    if len(g) != 2 or sum(g) != 0:
        raise DomainError("sl2_iwahori_limit needs an SL_2 coweight")
    if g[0] == 0:
        raise DomainError("gamma = 0: the orbit is a point")
    if opposite and g[0] > 0 or not opposite and g[0] < 0:
        raise DomainError("this Iwahori orbit is a G(O)-orbit case; use go_orbit_limit")
    d = dims.iwahori_dim_gr(g) if not opposite else 2 * dims.height(dominant_rep(g)) - 1
    r = (d - 1) // 2
    word = [0, 1] * r + [0] if not opposite else [1, 0] * r + [1]
    w = from_word(word, 2)
    return (Component(translation(g), d), Component(w, d, iwahori_polytope(w)))


__all__ = [
    "DEFAULT_CAP", "Component", "P1Limit", "UpperBound", "LimitReport", "SL2MVLimit",
    "degenerate_fixed_point", "degenerate_p1", "degenerate_root_subgroup",
    "degenerate_product_orbit", "degenerate_semiinfinite", "semiinfinite_closure_contains",
    "admissible_set", "iwahori_polytope", "limit_polytope", "go_orbit_limit",
    "component_lower_bound", "fixed_points_in", "component_upper_bound", "limit_report",
    "sl2_mv_limit", "sl2_iwahori_limit",
]
