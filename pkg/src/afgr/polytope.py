"""
Exact convex geometry in the coweight space (sum-constant hyperplane of Q^n).

Every polytope is handled in an affine chart of its own affine hull: the
reduced row-echelon basis of the edge vectors gives coordinates that are
just a subset of the ambient coordinates, so nothing irrational ever appears.
Dimension <= 2 uses planar algorithms; higher dimensions fall back to exact
LP (n <= 6).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from afgr import lp
from afgr.errors import DomainError, RankMismatch, TilingError, VertexDisagreement
from afgr.weyl import MomentPoint, all_roots, positive_roots, simple_coroot

MAX_RANK = 6


def point(coords: Iterable) -> MomentPoint:
    return tuple(Fraction(v) for v in coords)


class Chart:
    """Affine coordinates on the affine hull of a point set."""

    def __init__(self, points: Sequence[MomentPoint]):
        self.origin = points[0]
        basis: list[list[Fraction]] = []
        pivots: list[int] = []
        for p in points[1:]:
            r = [a - b for a, b in zip(p, self.origin)]
            for b, c in zip(basis, pivots):
                if r[c] != 0:
                    f = r[c]
                    r = [x - f * y for x, y in zip(r, b)]
            c = next((k for k, v in enumerate(r) if v != 0), None)
            if c is None:
                continue
            r = [x / r[c] for x in r]
            for i, b in enumerate(basis):
                if b[c] != 0:
                    f = b[c]
                    basis[i] = [x - f * y for x, y in zip(b, r)]
            basis.append(r)
            pivots.append(c)
        order = sorted(range(len(pivots)), key=lambda i: pivots[i])
        self.basis = [basis[i] for i in order]
        self.pivots = [pivots[i] for i in order]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coords(self, p: Sequence) -> tuple[Fraction, ...] | None:
        """Chart coordinates of p, or None if p is off the affine hull."""
        d = [Fraction(a) - b for a, b in zip(p, self.origin)]
        u = tuple(d[c] for c in self.pivots)
        for k in range(len(d)):
            if sum((ui * b[k] for ui, b in zip(u, self.basis)), Fraction(0)) != d[k]:
                return None
        return u

    def lift(self, u: Sequence) -> MomentPoint:
        out = list(self.origin)
        for ui, b in zip(u, self.basis):
            out = [x + ui * y for x, y in zip(out, b)]
        return tuple(out)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _planar_hull(pts: list[tuple]) -> list[tuple]:
    """Monotone chain, counter-clockwise, collinear points dropped."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _in_hull_lp(p: Sequence, pts: Sequence[Sequence]) -> bool:
    k = len(pts)
    A_eq = [[q[i] for q in pts] for i in range(len(p))] + [[1] * k]
    b_eq = list(p) + [1]
    return lp.feasible_point(A_eq=A_eq, b_eq=b_eq, nvars=k) is not None


@dataclass(frozen=True)
class Polytope:
    """Convex hull of finitely many exact points; ``vertices`` is irredundant
    and lexicographically sorted."""

    vertices: tuple[MomentPoint, ...]

    @property
    def rank(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def chart(self) -> Chart:
        return Chart(self.vertices)

    @property
    def dim(self) -> int:
        return self.chart.dim

    @cached_property
    def _ring(self) -> list[tuple]:
        """Chart coordinates of the vertices in counter-clockwise order (dim 2)."""
        return _planar_hull([self.chart.coords(v) for v in self.vertices])

    def cyclic_vertices(self) -> list[MomentPoint]:
        if self.dim < 2:
            return list(self.vertices)
        if self.dim > 2:
            raise DomainError("cyclic vertex order only exists in dimension <= 2")
        return [self.chart.lift(u) for u in self._ring]

    def __contains__(self, p) -> bool:
        return contains(self, p)

    def volume(self) -> Fraction:
        """Chart volume (length or area); only ratios are meaningful."""
        return _chart_volume(self, self.chart)


def convex_hull(points: Iterable[Sequence]) -> Polytope:
    pts = sorted(set(point(p) for p in points))
    if not pts:
        raise DomainError("convex hull of an empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise RankMismatch("points of different ranks")
    if n > MAX_RANK:
        raise DomainError(f"rank {n} exceeds the enumeration cap {MAX_RANK}")
    chart = Chart(pts)
    d = chart.dim
    if d == 0:
        verts = pts[:1]
    elif d == 1:
        keyed = sorted(pts, key=lambda p: chart.coords(p))
        verts = [keyed[0], keyed[-1]]
    elif d == 2:
        verts = [chart.lift(u) for u in _planar_hull([chart.coords(p) for p in pts])]
    else:
        verts = [p for p in pts if not _in_hull_lp(p, [q for q in pts if q != p])]
    return Polytope(tuple(sorted(verts)))


def contains(P: Polytope, p: Sequence) -> bool:
    if len(p) != P.rank:
        raise RankMismatch(f"rank {len(p)} vs {P.rank}")
    u = P.chart.coords(p)
    if u is None:
        return False
    d = P.dim
    if d == 0:
        return True
    if d == 1:
        a = P.chart.coords(P.vertices[0])[0]
        b = P.chart.coords(P.vertices[1])[0]
        return min(a, b) <= u[0] <= max(a, b)
    if d == 2:
        ring = P._ring
        return all(_cross(ring[k], ring[(k + 1) % len(ring)], u) >= 0 for k in range(len(ring)))
    return _in_hull_lp(point(p), P.vertices)


def is_vertex(P: Polytope, p: Sequence) -> bool:
    return point(p) in P.vertices


def translate(P: Polytope, v: Sequence) -> Polytope:
    return convex_hull(tuple(a + b for a, b in zip(q, v)) for q in P.vertices)


def scale(P: Polytope, c) -> Polytope:
    return convex_hull(tuple(c * a for a in q) for q in P.vertices)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    if P.rank != Q.rank:
        raise RankMismatch(f"rank {P.rank} vs {Q.rank}")
    return convex_hull(tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices)


def _is_lattice(p: Sequence) -> bool:
    return all(Fraction(v).denominator == 1 for v in p)


def _box(P: Polytope) -> list[tuple[Fraction, Fraction]]:
    return [(min(v[k] for v in P.vertices), max(v[k] for v in P.vertices)) for k in range(P.rank)]


def coset_lattice_points(P: Polytope, v: Sequence) -> list[MomentPoint]:
    """(v + coroot lattice) inside P, lexicographically sorted."""
    v = point(v)
    n = P.rank
    if len(v) != n:
        raise RankMismatch(f"rank {len(v)} vs {n}")
    box = _box(P)
    ranges = [range(math.ceil(lo - v[k]), math.floor(hi - v[k]) + 1) for k, (lo, hi) in enumerate(box)]
    out = []
    for head in product(*ranges[:-1]):
        last = -sum(head)
        if last not in ranges[-1]:
            continue
        q = tuple(a + b for a, b in zip(v, (*head, last)))
        if contains(P, q):
            out.append(q)
    return sorted(out)


def root_direction_count(P: Polytope, v: Sequence) -> int:
    """#{(gamma, m) : gamma a root, m >= 1, v + m gamma^vee in P} at a vertex v."""
    v = point(v)
    if v not in P.vertices:
        raise DomainError(f"{[str(a) for a in v]} is not a vertex of the polytope")
    n = P.rank
    total = 0
    for g in all_roots(n):
        step = g.coroot(n)
        m = 1
        while contains(P, tuple(a + m * b for a, b in zip(v, step))):
            m += 1
        total += m - 1
    return total


def reflection_count(P: Polytope, v: Sequence) -> int:
    """Number of affine root hyperplanes {<x, alpha> = k} whose mirror image
    of v lies in P (v itself excluded).

    Agrees with root_direction_count at lattice points; unlike it, it is the
    right count at alcove barycenters, where mirror images are off v + lattice.
    """
    v = point(v)
    n = P.rank
    total = 0
    for a in positive_roots(n):
        step = a.coroot(n)
        s = a.pair(v)
        # mirror across <x, a> = k is v + (k - s) a^vee
        up = math.floor(s) + 1
        while contains(P, tuple(x + (up - s) * y for x, y in zip(v, step))):
            total += 1
            up += 1
        down = math.ceil(s) - 1
        while contains(P, tuple(x + (down - s) * y for x, y in zip(v, step))):
            total += 1
            down -= 1
    return total


def vertex_counts(P: Polytope) -> dict[MomentPoint, int]:
    return {v: root_direction_count(P, v) for v in P.vertices}


def dimension_estimate(P: Polytope) -> int:
    """The common root-direction count of P's vertices.

    Raises VertexDisagreement when the counts differ, i.e. P is not the
    polytope of an Iwahori orbit or MV cycle.
    """
    if not all(_is_lattice(v) for v in P.vertices):
        raise DomainError("dimension estimate needs lattice vertices")
    counts = vertex_counts(P)
    values = set(counts.values())
    if len(values) != 1:
        raise VertexDisagreement(counts)
    return values.pop()


# ----------------------------------------------------------- SL3 MV polytopes

def sl3_primes() -> dict[str, Polytope]:
    a, b = simple_coroot(3, 1), simple_coroot(3, 2)
    o = (0, 0, 0)
    ab = tuple(x + y for x, y in zip(a, b))
    return {
        "a1": convex_hull([o, a]),
        "a2": convex_hull([o, b]),
        "b1": convex_hull([o, a, ab]),
        "b2": convex_hull([o, b, ab]),
    }


def mv_polytope_sl3(c1: int, c2: int, c3: int, c4: int) -> Polytope:
    """c1 a1 + c2 a2 + c3 b1 + c4 b2 (Minkowski)."""
    cs = (c1, c2, c3, c4)
    if any(int(c) != c or c < 0 for c in cs):
        raise DomainError(f"coefficients must be nonnegative integers, got {cs}")
    primes = sl3_primes()
    P = convex_hull([(0, 0, 0)])
    for c, name in zip(cs, ("a1", "a2", "b1", "b2")):
        for _ in range(c):
            P = minkowski_sum(P, primes[name])
    return P


def is_sl3_mv_datum(c: Sequence[int]) -> bool:
    """Whether the Minkowski datum is an MV polytope.

    With both segments present the sum contains a parallelogram corner
    (conv{0, a, b, a+b} is not MV: weight a+b carries only the two
    triangles), so MV data have c1 * c2 == 0 and are then unique.
    """
    return c[0] * c[1] == 0


def sl3_mv_data(max_coeff: int) -> list[tuple[int, int, int, int]]:
    return [c for c in product(range(max_coeff + 1), repeat=4) if is_sl3_mv_datum(c)]


def dominance_extremes(P: Polytope) -> tuple[MomentPoint, MomentPoint]:
    """(bottom, top): the unique dominance-minimal and -maximal vertices."""
    from afgr.orders import in_positive_cone

    tops = [v for v in P.vertices if all(in_positive_cone([a - b for a, b in zip(v, w)]) for w in P.vertices)]
    bots = [v for v in P.vertices if all(in_positive_cone([b - a for a, b in zip(v, w)]) for w in P.vertices)]
    if len(tops) != 1 or len(bots) != 1:
        raise DomainError("polytope has no unique dominance-extremal vertices")
    return bots[0], tops[0]


# ---------------------------------------------------- regular subdivisions

@dataclass(frozen=True)
class Subdivision:
    cells: tuple[Polytope, ...]


@dataclass
class RegularityResult:
    regular: bool
    points: list[MomentPoint]
    heights: list[Fraction] | None = None
    margin: Fraction | None = None
    # Farkas multipliers (cell index, point index) -> weight on the strict rows
    certificate: dict[tuple[int, int], Fraction] | None = None
    equality_multipliers: dict[tuple[int, int], Fraction] | None = field(default=None, repr=False)


def _chart_volume(P: Polytope, chart: Chart) -> Fraction:
    d = P.dim
    if d == 0:
        return Fraction(0)
    if d == 1:
        a, b = (chart.coords(v) for v in P.vertices)
        if len(a) != 1:
            return Fraction(0)
        return abs(a[0] - b[0])
    if d == 2 and chart.dim == 2:
        ring = _planar_hull([chart.coords(v) for v in P.vertices])
        s = sum(ring[k][0] * ring[(k + 1) % len(ring)][1] - ring[(k + 1) % len(ring)][0] * ring[k][1]
                for k in range(len(ring)))
        return abs(Fraction(s)) / 2
    if d > 2:
        raise DomainError("volumes are only implemented up to dimension 2")
    return Fraction(0)


def _clip(poly: list[tuple], ring: list[tuple]) -> list[tuple]:
    """Convex polygon clipping (both counter-clockwise, chart coordinates)."""
    out = poly
    for k in range(len(ring)):
        a, b = ring[k], ring[(k + 1) % len(ring)]
        inp, out = out, []
        if not inp:
            break
        for i in range(len(inp)):
            p, q = inp[i], inp[(i + 1) % len(inp)]
            cp, cq = _cross(a, b, p), _cross(a, b, q)
            if cp >= 0:
                out.append(p)
            if (cp > 0 and cq < 0) or (cp < 0 and cq > 0):
                t = cp / (cp - cq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _overlap(C1: Polytope, C2: Polytope, chart: Chart) -> Fraction:
    if chart.dim == 1:
        a = sorted(chart.coords(v)[0] for v in C1.vertices)
        b = sorted(chart.coords(v)[0] for v in C2.vertices)
        return max(Fraction(0), min(a[-1], b[-1]) - max(a[0], b[0]))
    r1 = _planar_hull([chart.coords(v) for v in C1.vertices])
    r2 = _planar_hull([chart.coords(v) for v in C2.vertices])
    inter = _planar_hull(_clip(r1, r2))
    if len(inter) < 3:
        return Fraction(0)
    s = sum(inter[k][0] * inter[(k + 1) % len(inter)][1] - inter[(k + 1) % len(inter)][0] * inter[k][1]
            for k in range(len(inter)))
    return abs(Fraction(s)) / 2


def validate_tiling(P: Polytope, S: Subdivision) -> None:
    """Raise TilingError unless the cells form a face-to-face subdivision of P."""
    if not S.cells:
        raise TilingError("subdivision has no cells")
    d = P.dim
    if d > 2:
        raise DomainError("subdivision checks are implemented up to dimension 2")
    chart = P.chart
    for C in S.cells:
        if C.rank != P.rank:
            raise RankMismatch("cell rank differs from the outer polytope")
        if C.dim != d:
            raise TilingError(f"cell {C.vertices} has dimension {C.dim}, expected {d}")
        if not all(contains(P, v) for v in C.vertices):
            raise TilingError(f"cell {C.vertices} is not inside the polytope")
    if d == 0:
        return
    if sum((_chart_volume(C, chart) for C in S.cells), Fraction(0)) != _chart_volume(P, chart):
        raise TilingError("cell volumes do not add up to the polytope volume")
    for i, C1 in enumerate(S.cells):
        for C2 in S.cells[i + 1:]:
            if _overlap(C1, C2, chart) != 0:
                raise TilingError("two cells overlap in their interiors")
            for A, B in ((C1, C2), (C2, C1)):
                for v in A.vertices:
                    if contains(B, v) and v not in B.vertices:
                        raise TilingError("cells do not meet face to face")


def regularity(P: Polytope, S: Subdivision) -> RegularityResult:
    """Decide whether S is induced by a lifting of its vertex set.

    LP: heights h_p, an affine function per cell agreeing with h on the cell's
    vertices and lying strictly below h (by a common margin t) on every other
    point; maximise t <= 1.  Regular iff t* > 0; otherwise a Farkas
    certificate for {t > 0} is returned.
    """
    validate_tiling(P, S)
    chart = P.chart
    d = chart.dim
    pts = sorted({v for C in S.cells for v in C.vertices})
    U = [chart.coords(p) for p in pts]
    idx = {p: k for k, p in enumerate(pts)}
    npts, ncell = len(pts), len(S.cells)
    # variable layout: h (npts) | per cell: a (d), b (1) | t
    def var_a(c, k):
        return npts + c * (d + 1) + k

    def var_b(c):
        return npts + c * (d + 1) + d

    nv = npts + ncell * (d + 1) + 1
    t = nv - 1
    eq_rows, eq_tags, ub_rows, ub_tags = [], [], [], []
    for c, C in enumerate(S.cells):
        members = {idx[v] for v in C.vertices}
        for p in range(npts):
            row = [Fraction(0)] * nv
            for k in range(d):
                row[var_a(c, k)] = U[p][k]
            row[var_b(c)] = Fraction(1)
            row[p] = Fraction(-1)
            if p in members:
                eq_rows.append(row)
                eq_tags.append((c, p))
            else:
                row[t] = Fraction(1)
                ub_rows.append(row)
                ub_tags.append((c, p))
    cap = [Fraction(0)] * nv
    cap[t] = Fraction(1)
    obj = [0] * nv
    obj[t] = 1
    res = lp.solve(obj, ub_rows + [cap], [0] * len(ub_rows) + [1], eq_rows, [0] * len(eq_rows),
                   free=True, maximize=True)
    if res.status != lp.OPTIMAL:
        raise RuntimeError(f"lifting LP ended with status {res.status}")
    margin = res.x[t]
    if margin > 0:
        return RegularityResult(True, pts, heights=res.x[:npts], margin=margin)
    # alternative system: y >= 0 on strict rows, z free on equalities,
    # sum y = 1, and the combination vanishes on every variable but t
    ny, nz = len(ub_rows), len(eq_rows)
    A_eq = []
    for col in range(nv - 1):
        A_eq.append([r[col] for r in ub_rows] + [r[col] for r in eq_rows])
    A_eq.append([1] * ny + [0] * nz)
    sol = lp.feasible_point(A_eq=A_eq, b_eq=[0] * (nv - 1) + [1], nvars=ny + nz, free=range(ny, ny + nz))
    if sol is None:
        raise RuntimeError("no Farkas certificate although the margin is not positive")
    cert = {tag: y for tag, y in zip(ub_tags, sol[:ny]) if y != 0}
    eqm = {tag: z for tag, z in zip(eq_tags, sol[ny:]) if z != 0}
    return RegularityResult(False, pts, margin=margin, certificate=cert, equality_multipliers=eqm)


def verify_certificate(P: Polytope, S: Subdivision, result: RegularityResult) -> bool:
    """Independent re-check of a non-regularity certificate.

    With f_{c,p} = a_c(p) - h_p, the certificate says
    sum y f (strict rows) + sum z f (equality rows) == 0 identically, y >= 0,
    sum y > 0.  Every lifting has f = 0 on equality rows and f < 0 on strict
    rows, so no lifting exists.
    """
    if result.certificate is None:
        return False
    ys, zs = result.certificate, result.equality_multipliers or {}
    if any(y < 0 for y in ys.values()) or sum(ys.values()) <= 0:
        return False
    chart = P.chart
    pts = result.points
    members = [set(C.vertices) for C in S.cells]
    for (c, p) in ys:
        if pts[p] in members[c]:
            return False
    for (c, p) in zs:
        if pts[p] not in members[c]:
            return False
    # collect the linear functional: coefficients on h_p, a_c (chart), b_c
    coef: dict = {}
    for tags, sign in ((ys, 1), (zs, 1)):
        for (c, p), w in tags.items():
            u = chart.coords(pts[p])
            for k, uk in enumerate(u):
                coef[("a", c, k)] = coef.get(("a", c, k), 0) + sign * w * uk
            coef[("b", c)] = coef.get(("b", c), 0) + sign * w
            coef[("h", p)] = coef.get(("h", p), 0) - sign * w
    return all(v == 0 for v in coef.values())


def check_regular_subdivision(P: Polytope, S: Subdivision) -> bool:
    return regularity(P, S).regular


__all__ = [
    "MAX_RANK", "Chart", "Polytope", "Subdivision", "RegularityResult", "point", "convex_hull",
    "contains", "is_vertex", "translate", "scale", "minkowski_sum", "coset_lattice_points",
    "root_direction_count", "reflection_count", "vertex_counts", "dimension_estimate",
    "sl3_primes", "mv_polytope_sl3", "is_sl3_mv_datum", "sl3_mv_data", "dominance_extremes",
    "validate_tiling", "regularity", "verify_certificate", "check_regular_subdivision",
]
