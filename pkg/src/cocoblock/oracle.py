"""Exponential-time ground truth and random instances.

Everything here works from the definitions only and refuses inputs above the
size guards in ``cocoblock.config`` instead of truncating.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx
import numpy as np

from cocoblock.config import (
    MAX_BRUTE_CUT_NODES,
    MAX_BRUTE_VERTICES,
    MAX_ENUMERATION_VERTICES,
    MAX_ORIENTATION_VERTICES,
)
from cocoblock.errors import TooLarge, check
from cocoblock.graph.ordering import verify_ordering
from cocoblock.models import CocoOrdering, Graph

logger = logging.getLogger(__name__)

Arc = tuple[int, int]


def _guard(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise TooLarge(what, size, limit)


def _mask(vertices: tuple[int, ...]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def _subsets_by_size(n: int) -> Iterator[tuple[int, ...]]:
    for size in range(n + 1):
        yield from combinations(range(n), size)


def enumerate_independent_sets(graph: Graph, size: int) -> list[tuple[int, ...]]:
    """All independent sets of exactly ``size`` vertices, in lexicographic order.

    Raises:
        TooLarge: If the graph has more than 24 vertices
    """
    _guard("graph", graph.n, MAX_ENUMERATION_VERTICES)
    if size < 0:
        return []
    return [
        combo for combo in combinations(range(graph.n), size) if graph.is_independent(combo)
    ]


def independence_numbers_by_subset(graph: Graph) -> list[int]:
    """alpha(G[T]) for every vertex subset T, indexed by bitmask.

    Raises:
        TooLarge: If the graph has more than 16 vertices
    """
    _guard("graph", graph.n, MAX_BRUTE_VERTICES)
    closed = [_mask(graph.neighbors(v)) | (1 << v) for v in range(graph.n)]
    table = [0] * (1 << graph.n)
    for mask in range(1, 1 << graph.n):
        v = (mask & -mask).bit_length() - 1
        skip = table[mask & ~(1 << v)]
        take = 1 + table[mask & ~closed[v]]
        table[mask] = max(skip, take)
    return table


def brute_alpha(graph: Graph) -> int:
    """Independence number by subset dynamic programming."""
    return independence_numbers_by_subset(graph)[-1]


def _check_threshold(d: int) -> None:
    if d < 1:
        raise ValueError(f"threshold d must be at least 1, got {d}")


def brute_transversal(graph: Graph, d: int) -> int | None:
    """Smallest S meeting every maximum independent set in at least d vertices.

    Returns:
        The optimum size, or None when d exceeds alpha

    Raises:
        TooLarge: If the graph has more than 16 vertices
    """
    _check_threshold(d)
    _guard("graph", graph.n, MAX_BRUTE_VERTICES)
    alpha = brute_alpha(graph)
    if d > alpha:
        return None

    maximum_sets = [_mask(s) for s in enumerate_independent_sets(graph, alpha)]
    for combo in _subsets_by_size(graph.n):
        chosen = _mask(combo)
        if all((chosen & s).bit_count() >= d for s in maximum_sets):
            return len(combo)
    raise AssertionError("the full vertex set is always a transversal")


def brute_blocker(graph: Graph, d: int) -> int | None:
    """Smallest S with alpha(G - S) <= alpha(G) - d.

    Returns:
        The optimum size, or None when d exceeds alpha

    Raises:
        TooLarge: If the graph has more than 16 vertices
    """
    _check_threshold(d)
    table = independence_numbers_by_subset(graph)
    full = (1 << graph.n) - 1
    alpha = table[full]
    if d > alpha:
        return None

    for combo in _subsets_by_size(graph.n):
        if table[full & ~_mask(combo)] <= alpha - d:
            return len(combo)
    raise AssertionError("deleting every vertex always blocks")


def max_extendable_sets(graph: Graph, size: int) -> list[tuple[int, ...]]:
    """Independent sets of ``size`` vertices contained in some maximum independent set."""
    _guard("graph", graph.n, MAX_ENUMERATION_VERTICES)
    complement = graph.complement().to_networkx()
    alpha = max((len(clique) for clique in nx.find_cliques(complement)), default=0)
    maximum_sets = [_mask(s) for s in enumerate_independent_sets(graph, alpha)]
    return [
        combo
        for combo in enumerate_independent_sets(graph, size)
        if any(_mask(combo) & s == _mask(combo) for s in maximum_sets)
    ]


def brute_vertex_cut(dg: nx.DiGraph[int], s: int, t: int) -> int | None:
    """Smallest set of internal nodes whose removal separates s from t.

    Returns:
        The minimum cut size, or None if an arc s -> t makes it impossible

    Raises:
        TooLarge: If there are more than 18 internal nodes
    """
    internal = sorted(v for v in dg.nodes if v not in (s, t))
    _guard("internal node set", len(internal), MAX_BRUTE_CUT_NODES)
    if dg.has_edge(s, t):
        return None
    for size in range(len(internal) + 1):
        for combo in combinations(internal, size):
            if not nx.has_path(nx.restricted_view(dg, combo, []), s, t):
                return size
    return None


def gen_cocomparability(
    n: int, density: float, seed: int | None = None
) -> tuple[Graph, CocoOrdering]:
    """Random co-comparability graph with a valid ordering.

    Samples a partial order whose linear extension is a random permutation:
    each pair in extension order becomes comparable with probability
    ``density``, then the relation is closed transitively. The graph is the
    complement of its comparability graph, and the extension is the ordering.

    Args:
        n: Number of vertices
        density: Probability of a generating comparability, in [0, 1]
        seed: Seed for reproducible instances

    Returns:
        Tuple of (graph, ordering)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")

    rng = np.random.default_rng(seed)
    order = [int(v) for v in rng.permutation(n)]
    relation = np.triu(rng.random((n, n)) < density, k=1)

    while True:
        closed = relation | ((relation.astype(np.int64) @ relation.astype(np.int64)) > 0)
        if np.array_equal(closed, relation):
            break
        relation = closed

    edges = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if not relation[i, j]
    ]
    graph = Graph.from_edges(n, edges)
    ordering = verify_ordering(graph, order)
    logger.debug("generated n=%d m=%d (density %.2f, seed %s)", n, graph.m, density, seed)
    return graph, ordering


def brute_transitive_orientation(graph: Graph) -> set[Arc] | None:
    """Search for a transitive orientation of the complement by backtracking.

    Returns:
        The arcs of one orientation, or None if the complement has none

    Raises:
        TooLarge: If the graph has more than 8 vertices
    """
    _guard("graph", graph.n, MAX_ORIENTATION_VERTICES)
    pending = [
        (u, v) for u in range(graph.n) for v in range(u + 1, graph.n) if not graph.has_edge(u, v)
    ]
    arcs: set[Arc] = set()
    out: list[set[int]] = [set() for _ in range(graph.n)]
    into: list[set[int]] = [set() for _ in range(graph.n)]

    def compatible(a: int, b: int) -> bool:
        # a -> b -> c needs a -> c, and c -> a -> b needs c -> b
        for c in out[b]:
            if graph.has_edge(a, c) or (c, a) in arcs:
                return False
        for c in into[a]:
            if graph.has_edge(c, b) or (b, c) in arcs:
                return False
        return True

    def place(index: int) -> bool:
        if index == len(pending):
            return True
        u, v = pending[index]
        for a, b in ((u, v), (v, u)):
            if not compatible(a, b):
                continue
            arcs.add((a, b))
            out[a].add(b)
            into[b].add(a)
            if place(index + 1):
                return True
            arcs.discard((a, b))
            out[a].discard(b)
            into[b].discard(a)
        return False

    if not place(0):
        return None
    check(
        all((a, c) in arcs for a, b in arcs for c in out[b]),
        "backtracking accepted a non-transitive orientation",
    )
    return set(arcs)


@dataclass(frozen=True)
class OracleReport:
    """Exact answers for one small graph.

    Attributes:
        alpha: Independence number
        all_mis: Every maximum independent set, lexicographic
        best_transversal: Optimum transversal size per d in 1..alpha
        best_blocker: Optimum blocker size per d in 1..alpha
    """

    alpha: int
    all_mis: tuple[tuple[int, ...], ...]
    best_transversal: dict[int, int] = field(default_factory=dict)
    best_blocker: dict[int, int] = field(default_factory=dict)


def oracle_report(graph: Graph) -> OracleReport:
    """Compute every oracle answer for a graph with at most 16 vertices."""
    alpha = brute_alpha(graph)
    transversal: dict[int, int] = {}
    blocker: dict[int, int] = {}
    for d in range(1, alpha + 1):
        best_t = brute_transversal(graph, d)
        best_b = brute_blocker(graph, d)
        if best_t is None or best_b is None:
            raise AssertionError(f"d={d} <= alpha has no optimum")
        transversal[d] = best_t
        blocker[d] = best_b
    return OracleReport(
        alpha=alpha,
        all_mis=tuple(enumerate_independent_sets(graph, alpha)),
        best_transversal=transversal,
        best_blocker=blocker,
    )


def random_dag(
    n_internal: int, density: float, seed: int | None = None
) -> tuple[nx.DiGraph[int], int, int]:
    """Random DAG on internal nodes ``1..n_internal`` plus s = 0 and t = n_internal + 1.

    Every forward pair gets an arc with probability ``density``; s -> t never does.

    Returns:
        Tuple of (digraph, s, t)
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = np.random.default_rng(seed)
    s, t = 0, n_internal + 1
    dg: nx.DiGraph[int] = nx.DiGraph()
    dg.add_nodes_from(range(t + 1))
    for x in range(t + 1):
        for y in range(x + 1, t + 1):
            if (x, y) != (s, t) and rng.random() < density:
                dg.add_edge(x, y)
    return dg, s, t
