"""Level structure of independent sets along a co-comparability ordering.

Every independent set of a co-comparability graph is a chain of pairwise
non-adjacent vertices along the ordering. For a vertex ``v`` the largest
independent set containing it therefore splits into a maximum left extension,
``v`` itself and a maximum right extension, and the index of ``v`` inside any
such largest set is fixed. This module computes those extensions, the
resulting positions and the partition of the vertex set into layers
``L(p, beta)``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from cocoblock.errors import check
from cocoblock.models import CocoOrdering, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LevelStructure:
    """Extensions, positions and layers of every vertex.

    Attributes:
        alpha: Independence number
        leftext: Size of a maximum left extension per vertex
        rightext: Size of a maximum right extension per vertex
        beta: Size of a largest independent set containing the vertex
        pos: Absolute position of the vertex inside such a set (1-based)
        ordering: The ordering the structure was built along
        layers: Map ``(p, beta) -> vertices``; only non-empty layers are stored
    """

    alpha: int
    leftext: tuple[int, ...]
    rightext: tuple[int, ...]
    beta: tuple[int, ...]
    pos: tuple[int, ...]
    ordering: CocoOrdering
    layers: Mapping[tuple[int, int], frozenset[int]] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.pos)

    @property
    def i_max(self) -> frozenset[int]:
        """Vertices lying in some maximum independent set."""
        return self.members_with_beta(self.alpha)

    def members_with_beta(self, beta: int) -> frozenset[int]:
        """Vertices whose largest containing independent set has size ``beta``."""
        return frozenset(v for v in range(self.n) if self.beta[v] == beta)

    def layer(self, p: int, beta: int | None = None) -> frozenset[int]:
        """The set ``L(p, beta)``; ``beta`` defaults to alpha."""
        key = (p, self.alpha if beta is None else beta)
        return self.layers.get(key, frozenset())


@dataclass(frozen=True)
class NonEdgeDag:
    """Longest non-adjacent chains between vertex pairs.

    ``longest[u, v]`` is the largest number of vertices on a chain
    ``u = w1 < w2 < ... < wk = v`` with consecutive vertices non-adjacent, and
    0 when there is none. By transitivity of non-adjacency such a chain is an
    independent set. The diagonal holds 1 (the single-vertex chain).
    """

    longest: npt.NDArray[np.int64]

    def chain_length(self, u: int, v: int) -> int:
        return int(self.longest[u, v])


def build_levels(graph: Graph, ordering: CocoOrdering) -> LevelStructure:
    """Compute extensions, positions and layers.

    One increasing sweep along the ordering computes ``leftext``, one
    decreasing sweep ``rightext``; quadratic overall.

    Args:
        graph: The graph
        ordering: A validated co-comparability ordering for ``graph``

    Returns:
        The level structure
    """
    n = graph.n
    rank = ordering.rank
    leftext = [0] * n
    rightext = [0] * n

    for v in ordering.order:
        leftext[v] = max(
            (leftext[u] + 1 for u in graph.non_neighbors(v) if rank[u] < rank[v]),
            default=0,
        )
    for v in reversed(ordering.order):
        rightext[v] = max(
            (rightext[u] + 1 for u in graph.non_neighbors(v) if rank[u] > rank[v]),
            default=0,
        )

    beta = [leftext[v] + rightext[v] + 1 for v in range(n)]
    pos = [leftext[v] + 1 for v in range(n)]
    alpha = max(beta, default=0)

    layers: dict[tuple[int, int], set[int]] = {}
    for v in range(n):
        layers.setdefault((pos[v], beta[v]), set()).add(v)

    for v in range(n):
        check(1 <= pos[v] <= beta[v] <= alpha, f"position bounds violated at {v}")
        check(leftext[v] == pos[v] - 1, f"left extension mismatch at {v}")
        check(rightext[v] == beta[v] - pos[v], f"right extension mismatch at {v}")

    logger.debug("alpha=%d with %d non-empty layers", alpha, len(layers))
    return LevelStructure(
        alpha=alpha,
        leftext=tuple(leftext),
        rightext=tuple(rightext),
        beta=tuple(beta),
        pos=tuple(pos),
        ordering=ordering,
        layers={key: frozenset(members) for key, members in layers.items()},
    )


def independence_number(graph: Graph, ordering: CocoOrdering) -> int:
    """alpha of a co-comparability graph along a validated ordering."""
    return build_levels(graph, ordering).alpha


def build_nonedge_dag(graph: Graph, ordering: CocoOrdering) -> NonEdgeDag:
    """Tabulate longest non-adjacent chains for all vertex pairs.

    Processes targets in ordering rank; the column of a target is the
    element-wise maximum of its non-adjacent predecessors' columns plus one,
    so the whole table costs one pass over the non-edges per source.
    """
    n = graph.n
    order = list(ordering.order)
    adjacent = graph.adjacency_matrix()[np.ix_(order, order)]
    forward_non_edges = np.triu(~adjacent, k=1)

    # Rank-indexed table: chains[i, k] for the i-th and k-th vertex
    chains = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        predecessors = np.flatnonzero(forward_non_edges[:k, k])
        if predecessors.size:
            best = chains[:, predecessors].max(axis=1)
            chains[:, k] = np.where(best > 0, best + 1, 0)
        chains[k, k] = 1

    rank = list(ordering.rank)
    return NonEdgeDag(longest=chains[np.ix_(rank, rank)])


def pair_max_extendable(levels: LevelStructure, dag: NonEdgeDag, u: int, v: int) -> bool:
    """Check whether some maximum independent set contains both ``u`` and ``v``.

    Argument order does not matter. For u before v the pair extends to a
    maximum independent set exactly when a maximum left extension of u, a
    longest chain from u to v and a maximum right extension of v add up to
    alpha.
    """
    if u == v:
        return levels.beta[u] == levels.alpha

    for first, last in ((u, v), (v, u)):
        chain = dag.chain_length(first, last)
        if chain > 0:
            return levels.leftext[first] + chain + levels.rightext[last] == levels.alpha
    return False


def independent_set_positions(
    ordering: CocoOrdering, vertices: Iterable[int]
) -> dict[int, int]:
    """Relative positions ``pos_I(v)`` of the vertices of an explicit set I.

    Returns:
        Map from each vertex of I to its 1-based index along the ordering
    """
    ranked = sorted(set(vertices), key=lambda v: ordering.rank[v])
    return {v: index for index, v in enumerate(ranked, start=1)}


def dump_levels(levels: LevelStructure) -> str:
    """Debug dump, one line ``v pos beta leftext rightext`` per vertex in order."""
    lines = [
        f"{v} {levels.pos[v]} {levels.beta[v]} {levels.leftext[v]} {levels.rightext[v]}"
        for v in levels.ordering.order
    ]
    return "\n".join(lines) + ("\n" if lines else "")
