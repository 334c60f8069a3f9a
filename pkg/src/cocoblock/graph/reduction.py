"""Layered digraphs whose s-t paths are the independent sets to be hit.

Each vertex that can take part in a relevant independent set is copied onto
``d`` levels. Walking an s-t path visits the set's vertices by increasing
position; every position of ``1..alpha`` that the set skips raises the level
by one, so a path ends at level ``d`` exactly when it skipped ``d - 1``
positions, i.e. when the set has ``alpha - d + 1`` vertices.

The transversal digraph joins copies of vertex pairs that extend to a maximum
independent set; the blocker digraph joins copies of any non-adjacent pair
and copies every vertex whose largest independent set has size at least
``alpha - d + 1``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import islice

import networkx as nx

from cocoblock.config import (
    MAX_ENUMERATED_PATHS,
    SINK_TAG,
    SOURCE_TAG,
    NodeRole,
    ProblemKind,
)
from cocoblock.errors import ThresholdOutOfRange, TooLarge, check
from cocoblock.graph.layers import (
    LevelStructure,
    NonEdgeDag,
    build_nonedge_dag,
    pair_max_extendable,
)
from cocoblock.models import CocoOrdering, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayeredNode:
    """Node of a layered digraph.

    Attributes:
        orig: Vertex of G, or SOURCE_TAG / SINK_TAG
        level: Copy index in 1..d (source 1, sink d)
        beta: Largest independent set size of ``orig`` (alpha for s and t)
        pos: Absolute position of ``orig`` (source 0, sink alpha + 1)
        role: source, sink or copy
    """

    orig: int
    level: int
    beta: int
    pos: int
    role: NodeRole = "copy"

    @property
    def label(self) -> str:
        """Display label, ``v{orig}@L{level},b{beta}`` for copies."""
        if self.role == "source":
            return "s"
        if self.role == "sink":
            return "t"
        return f"v{self.orig}@L{self.level},b{self.beta}"


@dataclass(frozen=True)
class LayeredDigraph:
    """Reduction digraph with distinguished source and sink.

    Attributes:
        kind: Problem the digraph encodes
        d: Threshold
        alpha: Independence number of G
        nodes: All nodes; index 0 is the source, the last index the sink
        arcs: Arcs as node index pairs, sorted
    """

    kind: ProblemKind
    d: int
    alpha: int
    nodes: tuple[LayeredNode, ...]
    arcs: tuple[tuple[int, int], ...]

    @property
    def s(self) -> int:
        return 0

    @property
    def t(self) -> int:
        return len(self.nodes) - 1

    def origin_of(self, index: int) -> int | None:
        """Vertex of G a node copies; None for s and t."""
        node = self.nodes[index]
        return node.orig if node.role == "copy" else None

    @cached_property
    def _copies(self) -> dict[int, tuple[int, ...]]:
        copies: dict[int, list[int]] = {}
        for index, node in enumerate(self.nodes):
            if node.role == "copy":
                copies.setdefault(node.orig, []).append(index)
        return {
            v: tuple(sorted(indices, key=lambda i: self.nodes[i].level))
            for v, indices in copies.items()
        }

    def copies_of(self, vertex: int) -> tuple[int, ...]:
        """Node indices copying ``vertex``, by increasing level."""
        return self._copies.get(vertex, ())

    def copies_of_set(self, vertices: set[int] | frozenset[int]) -> set[int]:
        """All node indices copying any of the given vertices."""
        return {index for v in vertices for index in self.copies_of(v)}

    def to_networkx(self) -> nx.DiGraph[int]:
        """NetworkX digraph on node indices, with the nodes as attributes."""
        digraph: nx.DiGraph[int] = nx.DiGraph()
        for index, node in enumerate(self.nodes):
            digraph.add_node(index, node=node)
        digraph.add_edges_from(self.arcs)
        return digraph

    def has_st_path(self, removed: set[int] | frozenset[int] = frozenset()) -> bool:
        """Check for an s-t path avoiding the removed node indices."""
        digraph = nx.restricted_view(self.to_networkx(), list(removed), [])
        return nx.has_path(digraph, self.s, self.t)


PairTest = Callable[[int, int], bool]


def _check_threshold(d: int, alpha: int) -> None:
    if d < 1 or d > alpha:
        raise ThresholdOutOfRange(d, alpha)


def _assemble(
    kind: ProblemKind,
    levels: LevelStructure,
    d: int,
    members: list[int],
    pair_ok: PairTest,
) -> LayeredDigraph:
    """Copy ``members`` onto ``d`` levels and add the position/level arcs.

    An arc joins a copy of u on level l to a copy of v on level l + g whenever
    ``pos(v) = pos(u) + g + 1`` for some g >= 0 and ``pair_ok(u, v)``. Source
    and sink arcs follow the same arithmetic with ``pos(s) = 0``,
    ``level(s) = 1``, ``pos(t) = alpha + 1`` and ``level(t) = d``.
    """
    alpha = levels.alpha
    rank = levels.ordering.rank
    members = sorted(members, key=lambda v: (levels.pos[v], rank[v]))

    nodes = [LayeredNode(SOURCE_TAG, 1, alpha, 0, "source")]
    copy_index: dict[tuple[int, int], int] = {}
    for level in range(1, d + 1):
        for v in members:
            copy_index[(v, level)] = len(nodes)
            nodes.append(LayeredNode(v, level, levels.beta[v], levels.pos[v]))
    nodes.append(LayeredNode(SINK_TAG, d, alpha, alpha + 1, "sink"))
    s, t = 0, len(nodes) - 1

    by_position: dict[int, list[int]] = {}
    for v in members:
        by_position.setdefault(levels.pos[v], []).append(v)

    arcs: list[tuple[int, int]] = []
    for v in members:
        p = levels.pos[v]
        if p <= d:
            arcs.append((s, copy_index[(v, p)]))
        sink_level = d - alpha + p
        if sink_level >= 1:
            arcs.append((copy_index[(v, sink_level)], t))

    for u in members:
        p = levels.pos[u]
        # g = skipped positions; the level headroom bounds it by d - 1
        for gap in range(d):
            for v in by_position.get(p + gap + 1, []):
                if not pair_ok(u, v):
                    continue
                for level in range(1, d - gap + 1):
                    arcs.append((copy_index[(u, level)], copy_index[(v, level + gap)]))

    arcs.sort()
    for x, y in arcs:
        tail, head = nodes[x], nodes[y]
        check(head.pos > tail.pos, f"arc {x}->{y} does not increase position")
        check(head.level >= tail.level, f"arc {x}->{y} decreases level")
        check(
            head.pos - tail.pos - 1 == head.level - tail.level,
            f"arc {x}->{y} breaks position/level arithmetic",
        )

    logger.debug("%s digraph d=%d: %d nodes, %d arcs", kind, d, len(nodes), len(arcs))
    return LayeredDigraph(kind=kind, d=d, alpha=alpha, nodes=tuple(nodes), arcs=tuple(arcs))


def build_transversal_digraph(
    graph: Graph,
    ordering: CocoOrdering,
    levels: LevelStructure,
    dag: NonEdgeDag,
    d: int,
) -> LayeredDigraph:
    """Digraph whose s-t paths are the max-extendable independent sets of size alpha - d + 1.

    Raises:
        ThresholdOutOfRange: If d is not in [1, alpha]
    """
    _check_threshold(d, levels.alpha)
    return _assemble(
        "transversal",
        levels,
        d,
        sorted(levels.i_max),
        lambda u, v: pair_max_extendable(levels, dag, u, v),
    )


def build_blocker_digraph(
    graph: Graph,
    ordering: CocoOrdering,
    levels: LevelStructure,
    d: int,
) -> LayeredDigraph:
    """Digraph whose s-t paths are all independent sets of size alpha - d + 1.

    Raises:
        ThresholdOutOfRange: If d is not in [1, alpha]
    """
    _check_threshold(d, levels.alpha)
    members = [v for v in range(graph.n) if levels.beta[v] >= levels.alpha - d + 1]
    return _assemble(
        "blocker",
        levels,
        d,
        members,
        lambda u, v: not graph.has_edge(u, v),
    )


def build_digraph(
    graph: Graph,
    ordering: CocoOrdering,
    levels: LevelStructure,
    problem: ProblemKind,
    d: int,
    dag: NonEdgeDag | None = None,
) -> LayeredDigraph:
    """Build the digraph for either problem, computing the chain table if needed."""
    if problem == "blocker":
        return build_blocker_digraph(graph, ordering, levels, d)
    if dag is None:
        dag = build_nonedge_dag(graph, ordering)
    return build_transversal_digraph(graph, ordering, levels, dag, d)


def _topological_indices(digraph: LayeredDigraph) -> list[int]:
    """Node indices by position; arcs strictly increase position."""
    return sorted(range(len(digraph.nodes)), key=lambda i: digraph.nodes[i].pos)


def count_st_paths(digraph: LayeredDigraph) -> int:
    """Exact number of s-t paths by dynamic programming over positions."""
    successors: dict[int, list[int]] = {}
    for x, y in digraph.arcs:
        successors.setdefault(x, []).append(y)

    counts = [0] * len(digraph.nodes)
    counts[digraph.s] = 1
    for x in _topological_indices(digraph):
        if counts[x]:
            for y in successors.get(x, []):
                counts[y] += counts[x]
    return counts[digraph.t]


def iter_st_paths(digraph: LayeredDigraph) -> Iterator[list[int]]:
    """Lazily enumerate s-t paths as node index lists."""
    return nx.all_simple_paths(digraph.to_networkx(), digraph.s, digraph.t)


def enumerate_st_paths(
    digraph: LayeredDigraph, limit: int = MAX_ENUMERATED_PATHS
) -> list[list[int]]:
    """All s-t paths, refusing to enumerate more than ``limit``.

    Raises:
        TooLarge: If the digraph has more than ``limit`` paths
    """
    total = count_st_paths(digraph)
    if total > limit:
        raise TooLarge("s-t path set", total, limit)
    return list(islice(iter_st_paths(digraph), limit))


def project_path(digraph: LayeredDigraph, path: list[int]) -> tuple[int, ...]:
    """Vertices of G visited by a path, in path order (s and t dropped)."""
    return tuple(
        orig for orig in (digraph.origin_of(index) for index in path) if orig is not None
    )


def prune_dead_nodes(digraph: LayeredDigraph) -> LayeredDigraph:
    """Drop copies that lie on no s-t path.

    Keeps s and t and reindexes the rest in their original order. The set of
    s-t paths, and with it the minimum cut value, is unchanged.
    """
    nx_digraph = digraph.to_networkx()
    from_source = nx.descendants(nx_digraph, digraph.s) | {digraph.s}
    to_sink = nx.ancestors(nx_digraph, digraph.t) | {digraph.t}
    alive = sorted((from_source & to_sink) | {digraph.s, digraph.t})

    index = {old: new for new, old in enumerate(alive)}
    arcs = tuple(
        sorted((index[x], index[y]) for x, y in digraph.arcs if x in index and y in index)
    )
    return LayeredDigraph(
        kind=digraph.kind,
        d=digraph.d,
        alpha=digraph.alpha,
        nodes=tuple(digraph.nodes[i] for i in alive),
        arcs=arcs,
    )
