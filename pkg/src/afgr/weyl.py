"""
Root data of type A_{n-1} and the affine Weyl group X_*(T) x| S_n.

Conventions (fixed once, everything else is derived from them):

* Coweights are integer tuples in GL_n coordinates, ``e_i`` the standard
  cocharacters; in SL mode the coordinate sum is 0.
* Indices are 0-based: ``Root(i, j)`` is ``e_i - e_j``.
* A permutation ``p`` is a one-line tuple with ``p[i] = w(i)``; it acts by
  ``w . e_i = e_{w(i)}``.
* ``AffineWeylElt(trans, perm)`` is ``t_trans * w`` acting on the coweight
  space by ``x -> trans + w.x``; so ``(l1, w1)(l2, w2) = (l1 + w1.l2, w1 w2)``.
* ``s_i`` (1 <= i <= n-1) swaps coordinates i-1 and i; ``s_0 = t_{theta} s_theta``
  with ``theta = e_0 - e_{n-1}``.  With this choice ``(s_0 s_1)^2 = t_{2 alpha}``
  in SL_2.
* The fundamental alcove is ``{<x, alpha_i> >= 0, <x, theta> <= 1}``; the moment
  image of ``x`` is ``x`` applied to its barycenter ``b0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from afgr.errors import DomainError, RankMismatch

Coweight = tuple[int, ...]
Perm = tuple[int, ...]
MomentPoint = tuple[Fraction, ...]


# ---------------------------------------------------------------- coweights

def coweight(coords: Iterable[int], sl: bool = False) -> Coweight:
    c = tuple(int(v) for v in coords)
    if len(c) < 2:
        raise DomainError("rank must be at least 2")
    if sl and sum(c) != 0:
        raise DomainError(f"coweight {c} does not have coordinate sum 0")
    return c


def unit(n: int, i: int) -> Coweight:
    return tuple(1 if k == i else 0 for k in range(n))


def vadd(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise RankMismatch(f"rank {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> tuple:
    if len(a) != len(b):
        raise RankMismatch(f"rank {len(a)} vs {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def simple_coroot(n: int, i: int) -> Coweight:
    """alpha_i^vee = e_{i-1} - e_i for 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise DomainError(f"simple coroot index {i} out of range for rank {n}")
    return tuple(1 if k == i - 1 else -1 if k == i else 0 for k in range(n))


def highest_coroot(n: int) -> Coweight:
    return tuple(1 if k == 0 else -1 if k == n - 1 else 0 for k in range(n))


def fundamental_coweight(n: int, i: int) -> MomentPoint:
    """omega_i^vee projected to the sum-zero plane."""
    return tuple(Fraction(1) - Fraction(i, n) if k < i else -Fraction(i, n) for k in range(n))


@lru_cache(maxsize=None)
def alcove_barycenter(n: int) -> MomentPoint:
    """Barycenter of the fundamental alcove, (1/n) sum_i omega_i^vee."""
    acc = [Fraction(0)] * n
    for i in range(1, n):
        for k, v in enumerate(fundamental_coweight(n, i)):
            acc[k] += v
    return tuple(v / n for v in acc)


# -------------------------------------------------------------------- roots

@dataclass(frozen=True, order=True)
class Root:
    """The root e_i - e_j (0-based, i != j)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or self.i < 0 or self.j < 0:
            raise DomainError(f"invalid root indices ({self.i}, {self.j})")

    @property
    def positive(self) -> bool:
        return self.i < self.j

    def __neg__(self) -> "Root":
        return Root(self.j, self.i)

    def pair(self, x: Sequence) -> object:
        """<x, alpha> for a coweight or moment point x."""
        return x[self.i] - x[self.j]

    def coroot(self, n: int) -> Coweight:
        if max(self.i, self.j) >= n:
            raise RankMismatch(f"root {self} does not fit rank {n}")
        return tuple(1 if k == self.i else -1 if k == self.j else 0 for k in range(n))


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(n) for j in range(i + 1, n)]


def all_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(n) for j in range(n) if i != j]


@dataclass(frozen=True, order=True)
class AffineRoot:
    """root + level * delta; delta is kept symbolic."""

    root: Root
    level: int

    @property
    def positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and self.root.positive)


# -------------------------------------------------------------- permutations

def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_check(p: Sequence[int]) -> Perm:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(len(p))):
        raise DomainError(f"{p} is not a permutation of 0..{len(p) - 1}")
    return p


def perm_compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise RankMismatch(f"rank {len(p)} vs {len(q)}")
    return tuple(p[k] for k in q)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_act(p: Perm, x: Sequence) -> tuple:
    out = [None] * len(p)
    for i, v in enumerate(p):
        out[v] = x[i]
    return tuple(out)


def perm_length(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def longest_perm(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def finite_weyl_group(n: int) -> list[Perm]:
    """All of S_n, sorted by (length, one-line)."""
    return sorted(permutations(range(n)), key=lambda p: (perm_length(p), p))


def finite_bruhat_leq(p: Perm, q: Perm) -> bool:
    """Strong Bruhat order on S_n by the tableau criterion."""
    if len(p) != len(q):
        raise RankMismatch(f"rank {len(p)} vs {len(q)}")
    n = len(p)
    # compare w(1..k) sorted, for every k
    for k in range(1, n):
        a = sorted(p[:k])
        b = sorted(q[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


# ------------------------------------------------------- affine Weyl group

@dataclass(frozen=True)
class AffineWeylElt:
    trans: Coweight
    perm: Perm

    def __post_init__(self):
        if len(self.trans) != len(self.perm):
            raise RankMismatch(f"translation of rank {len(self.trans)} with permutation of rank {len(self.perm)}")

    @property
    def rank(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "AffineWeylElt") -> "AffineWeylElt":
        return compose(self, other)

    def inverse(self) -> "AffineWeylElt":
        inv = perm_inverse(self.perm)
        return AffineWeylElt(tuple(-v for v in perm_act(inv, self.trans)), inv)

    def act(self, x: Sequence) -> tuple:
        """Affine action on the coweight space."""
        return vadd(self.trans, perm_act(self.perm, x))

    def is_translation(self) -> bool:
        return self.perm == perm_identity(self.rank)

    def __repr__(self) -> str:
        return f"AffineWeylElt(trans={list(self.trans)}, perm={[v + 1 for v in self.perm]})"


def identity(n: int) -> AffineWeylElt:
    return AffineWeylElt((0,) * n, perm_identity(n))


def translation(lam: Sequence[int]) -> AffineWeylElt:
    lam = tuple(int(v) for v in lam)
    return AffineWeylElt(lam, perm_identity(len(lam)))


def finite(p: Perm) -> AffineWeylElt:
    return AffineWeylElt((0,) * len(p), perm_check(p))


def compose(x: AffineWeylElt, y: AffineWeylElt) -> AffineWeylElt:
    if x.rank != y.rank:
        raise RankMismatch(f"rank {x.rank} vs {y.rank}")
    return AffineWeylElt(vadd(x.trans, perm_act(x.perm, y.trans)), perm_compose(x.perm, y.perm))


@lru_cache(maxsize=None)
def simple_reflection(i: int, n: int) -> AffineWeylElt:
    if not 0 <= i <= n - 1:
        raise DomainError(f"simple reflection s_{i} out of range for rank {n}")
    if i == 0:
        return AffineWeylElt(highest_coroot(n), transposition(n, 0, n - 1))
    return AffineWeylElt((0,) * n, transposition(n, i - 1, i))


def from_word(word: Sequence[int], n: int) -> AffineWeylElt:
    x = identity(n)
    for i in word:
        x = compose(x, simple_reflection(int(i), n))
    return x


def reflection(gamma: AffineRoot, n: int) -> AffineWeylElt:
    """t_{k alpha^vee} s_alpha: the reflection in {<x, alpha> = k}."""
    a = gamma.root
    return AffineWeylElt(vscale(gamma.level, a.coroot(n)), transposition(n, a.i, a.j))


def _require_sl(x: AffineWeylElt) -> None:
    if sum(x.trans) != 0:
        raise DomainError(f"{x} is not in the SL affine Weyl group (translation sum {sum(x.trans)})")


@lru_cache(maxsize=1 << 16)
def length(x: AffineWeylElt) -> int:
    """Iwahori-Matsumoto length: number of affine hyperplanes separating the
    fundamental alcove from x(fundamental alcove)."""
    _require_sl(x)
    lam, inv = x.trans, perm_inverse(x.perm)
    n = x.rank
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            a = lam[i] - lam[j]
            total += abs(a) if inv[i] < inv[j] else abs(a - 1)
    return total


def moment_image(x: AffineWeylElt) -> MomentPoint:
    """Barycenter of the alcove x(A_0): trans + w.b0, exact."""
    return x.act(alcove_barycenter(x.rank))


def left_descents(x: AffineWeylElt) -> list[int]:
    lx = length(x)
    return [i for i in range(x.rank) if length(compose(simple_reflection(i, x.rank), x)) < lx]


def reduced_word(x: AffineWeylElt) -> list[int]:
    """A reduced word, built by peeling off the smallest left descent."""
    word = []
    n = x.rank
    while length(x) > 0:
        i = left_descents(x)[0]
        word.append(i)
        x = compose(simple_reflection(i, n), x)
    return word


def separating_reflections(x: AffineWeylElt) -> list[AffineRoot]:
    """Affine roots (positive root part) whose hyperplane separates A_0 from x A_0.

    These are exactly the reflections r with l(r x) < l(x).
    """
    c = moment_image(x)
    out = []
    for a in positive_roots(x.rank):
        v = a.pair(c)
        m = v.numerator // v.denominator  # floor; v is never an integer
        if m >= 1:
            ks = range(1, m + 1)
        elif m <= -1:
            ks = range(m + 1, 1)
        else:
            ks = ()
        out.extend(AffineRoot(a, k) for k in ks)
    return out


def lower_covers(x: AffineWeylElt) -> list[AffineWeylElt]:
    lx = length(x)
    n = x.rank
    out = set()
    for g in separating_reflections(x):
        y = compose(reflection(g, n), x)
        if length(y) == lx - 1:
            out.add(y)
    return sorted(out, key=sort_key)


def sort_key(x: AffineWeylElt) -> tuple:
    return (length(x) if sum(x.trans) == 0 else 0, x.trans, x.perm)


@lru_cache(maxsize=4096)
def _lower_levels(y: AffineWeylElt) -> tuple[frozenset, ...]:
    """levels[k] = elements below y of length l(y) - k, via cover BFS."""
    levels = [frozenset([y])]
    for _ in range(length(y)):
        nxt = set()
        for z in levels[-1]:
            nxt.update(lower_covers(z))
        levels.append(frozenset(nxt))
    return tuple(levels)


def bruhat_leq(x: AffineWeylElt, y: AffineWeylElt) -> bool:
    if x.rank != y.rank:
        raise RankMismatch(f"rank {x.rank} vs {y.rank}")
    lx, ly = length(x), length(y)
    if lx > ly:
        return False
    if lx == ly:
        return x == y
    return x in _lower_levels(y)[ly - lx]


def lower_interval(y: AffineWeylElt) -> list[AffineWeylElt]:
    """{x : x <= y} in Bruhat order, sorted by (length, trans, perm)."""
    out = set()
    for level in _lower_levels(y):
        out |= level
    return sorted(out, key=sort_key)


def elements_up_to_length(n: int, max_len: int) -> list[AffineWeylElt]:
    """All elements of length <= max_len, by BFS on right multiplication."""
    seen = {identity(n)}
    frontier = [identity(n)]
    for _ in range(max_len):
        nxt = []
        for x in frontier:
            for i in range(n):
                y = compose(x, simple_reflection(i, n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted((x for x in seen if length(x) <= max_len), key=sort_key)


def word_string(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) or "e"


__all__ = [
    "Coweight", "Perm", "MomentPoint", "Root", "AffineRoot", "AffineWeylElt",
    "coweight", "unit", "vadd", "vsub", "vscale", "simple_coroot", "highest_coroot",
    "fundamental_coweight", "alcove_barycenter", "positive_roots", "all_roots",
    "perm_identity", "perm_check", "perm_compose", "perm_inverse", "perm_act",
    "perm_length", "transposition", "longest_perm", "finite_weyl_group",
    "finite_bruhat_leq", "identity", "translation", "finite", "compose",
    "simple_reflection", "from_word", "reflection", "length", "moment_image",
    "left_descents", "reduced_word", "separating_reflections", "lower_covers",
    "bruhat_leq", "lower_interval", "elements_up_to_length", "sort_key", "word_string",
]
