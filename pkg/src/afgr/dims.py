"""Closed-form dimension formulas in type A (SL mode throughout)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from afgr.errors import DomainError
from afgr.orders import dominance_leq, dominant_rep
from afgr.weyl import AffineWeylElt, finite_bruhat_leq, length, perm_length


@dataclass(frozen=True)
class DimResult:
    value: int | None
    equidimensional: bool
    kind: str
    note: str = ""

    @property
    def empty(self) -> bool:
        return self.value is None

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError(f"negative dimension {self.value}")


EMPTY_NOTE = "empty intersection"


def _sl(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(v) for v in lam)
    if sum(lam) != 0:
        raise DomainError(f"{list(lam)} is not in the coroot lattice (coordinate sum {sum(lam)})")
    return lam


def height(lam: Sequence[int]) -> int:
    """Sum of simple-coroot coefficients; the i-th coefficient is the i-th prefix sum."""
    lam = _sl(lam)
    total, s = 0, 0
    for v in lam[:-1]:
        s += v
        total += s
    return total


def min_coset_length(lam: Sequence[int]) -> int:
    """l(w) for the shortest w with w . lam_dom = lam."""
    return sum(1 for i in range(len(lam)) for j in range(i + 1, len(lam)) if lam[i] < lam[j])


def partial_flag_dim(lam_dom: Sequence[int]) -> int:
    """dim G/P_lam = #{alpha > 0 : <lam_dom, alpha> > 0}."""
    return sum(1 for i in range(len(lam_dom)) for j in range(i + 1, len(lam_dom)) if lam_dom[i] > lam_dom[j])


def iwahori_dim_gr(lam: Sequence[int]) -> int:
    lam = _sl(lam)
    dom = dominant_rep(lam)
    return min_coset_length(lam) + 2 * height(dom) - partial_flag_dim(dom)


def iwahori_dim_fl(x: AffineWeylElt) -> int:
    return length(x)


def gr_intersection_dim(lam: Sequence[int], mu: Sequence[int]) -> DimResult:
    """dim of I^lam meet S_{w0}^mu in Gr; nonempty iff lam <= mu <= lam_dom in dominance."""
    lam, mu = _sl(lam), _sl(mu)
    dom = dominant_rep(lam)
    if not (dominance_leq(lam, mu) and dominance_leq(mu, dom)):
        return DimResult(None, False, "gr-intersection", EMPTY_NOTE)
    value = height(tuple(a + b for a, b in zip(dom, mu))) - partial_flag_dim(dom) + min_coset_length(lam)
    note = "" if lam == dom else "w normalised to the minimal coset representative"
    return DimResult(value, True, "gr-intersection", note)


def fl_intersection_bound(x: AffineWeylElt, y: AffineWeylElt) -> DimResult:
    """Upper bound for dim of I^x meet S_{w0}^y in Fl, x = (w lam_dom, w'), y = (mu, w'')."""
    base = gr_intersection_dim(x.trans, y.trans)
    w1, w2 = x.perm, y.perm
    if base.empty:
        return DimResult(None, False, "fl-bound", EMPTY_NOTE)
    n = x.rank
    npos = n * (n - 1) // 2
    if w1 == w2:
        return DimResult(base.value + npos - perm_length(w1), False, "fl-bound")
    if finite_bruhat_leq(w2, w1):
        return DimResult(base.value + perm_length(w1) - perm_length(w2), False, "fl-bound")
    if finite_bruhat_leq(w1, w2):
        return DimResult(None, False, "fl-bound", EMPTY_NOTE)
    # incomparable: only the coarse fibre bound is available
    return DimResult(base.value + npos, False, "fl-bound-coarse", "w', w'' incomparable; G/B fibre bound")


__all__ = [
    "DimResult", "height", "min_coset_length", "partial_flag_dim", "iwahori_dim_gr",
    "iwahori_dim_fl", "gr_intersection_dim", "fl_intersection_bound",
]
