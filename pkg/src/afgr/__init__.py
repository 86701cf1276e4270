"""Exact combinatorics of the central degeneration of the type-A affine
Grassmannian: affine Weyl groups, semi-infinite orders, moment and MV
polytopes, degeneration rules, dimension formulas and component bounds."""

from afgr.errors import DomainError

__version__ = "0.1.0"
__all__ = ["DomainError", "__version__"]
