"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is well-formed but outside the domain of the operation
    (non-dominant coweight, rank mismatch, empty intersection request, ...)."""


class RankMismatch(DomainError):
    pass


class VertexDisagreement(DomainError):
    """Per-vertex dimension counts of a polytope differ."""

    def __init__(self, counts):
        self.counts = counts
        super().__init__(f"root-direction counts differ across vertices: {counts}")


class TilingError(DomainError):
    """Cells of a proposed subdivision do not tile the outer polytope."""
