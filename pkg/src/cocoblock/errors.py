"""Exceptions raised by cocoblock.

Every error derives from ``ValueError`` so callers can treat any bad input,
including structurally unsuitable graphs, with a single ``except ValueError``.
"""

from __future__ import annotations


class CocoblockError(ValueError):
    """Base class for all domain errors."""


class GraphFormatError(CocoblockError):
    """Edge-list text could not be parsed."""

    def __init__(self, line_no: int, message: str) -> None:
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class OrderingFormatError(CocoblockError):
    """An ordering is not a permutation of the vertex set."""


class NotCocoOrdering(CocoblockError):
    """Ordering violates transitivity of non-adjacency.

    Attributes:
        u, v, w: Vertices with u before v before w, uv and vw non-edges and uw an edge
    """

    def __init__(self, u: int, v: int, w: int) -> None:
        self.u = u
        self.v = v
        self.w = w
        super().__init__(
            f"not a co-comparability ordering: {u} < {v} < {w} with "
            f"{u}-{v} and {v}-{w} non-adjacent but {u}-{w} adjacent"
        )


class NotCoComparability(CocoblockError):
    """The complement of the graph has no transitive orientation.

    Attributes:
        forcing: Arc whose orientation forced ``forced``
        forced: Arc whose reverse was already forced in the same implication class
    """

    def __init__(self, forcing: tuple[int, int], forced: tuple[int, int]) -> None:
        self.forcing = forcing
        self.forced = forced
        super().__init__(
            "graph is not a co-comparability graph: orienting "
            f"{forcing[0]}->{forcing[1]} in the complement forces "
            f"{forced[0]}->{forced[1]}, whose reverse is forced as well"
        )


class ThresholdOutOfRange(CocoblockError):
    """Threshold d lies outside [1, alpha]."""

    def __init__(self, d: int, alpha: int) -> None:
        self.d = d
        self.alpha = alpha
        super().__init__(f"threshold d={d} outside [1, alpha={alpha}]")


class InfiniteCut(CocoblockError):
    """Source and sink are adjacent, so no internal vertex set separates them."""

    def __init__(self, s: object, t: object) -> None:
        super().__init__(f"arc {s}->{t} cannot be cut by internal vertices")


class NotMinimal(CocoblockError):
    """A vertex of the solution has no layered copy on a surviving s-t path."""

    def __init__(self, vertex: int) -> None:
        self.vertex = vertex
        super().__init__(f"solution is not minimal: vertex {vertex} is redundant")


class SolutionFormatError(CocoblockError):
    """A solution file does not hold a list of vertex ids."""


class TooLarge(CocoblockError):
    """Input exceeds the size guard of an exponential oracle."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what} has size {size}, oracle limit is {limit}")


def check(condition: bool, message: str) -> None:
    """Re-check an internal invariant; unlike ``assert`` this survives ``-O``."""
    if not condition:
        raise AssertionError(message)
