"""Co-comparability orderings: validation and recognition.

An ordering is a co-comparability ordering when non-adjacency is transitive
along it: for u < v < w with uv and vw non-edges, uw is a non-edge too. Such
an ordering is exactly a linear extension of a transitive orientation of the
complement, which is how ``compute_ordering`` finds one.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

import networkx as nx
import numpy as np
import numpy.typing as npt

from cocoblock.errors import (
    NotCoComparability,
    NotCocoOrdering,
    OrderingFormatError,
    check,
)
from cocoblock.models import CocoOrdering, Graph

logger = logging.getLogger(__name__)

Arc = tuple[int, int]


def _ranked_adjacency(graph: Graph, ordering: CocoOrdering) -> npt.NDArray[np.bool_]:
    """Adjacency matrix with rows and columns permuted into ordering rank."""
    order = list(ordering.order)
    return graph.adjacency_matrix()[np.ix_(order, order)]


def find_property_one_violation(
    graph: Graph, ordering: CocoOrdering
) -> tuple[int, int, int] | None:
    """Find u < v < w with uv, vw non-edges and uw an edge.

    Counts, for every pair i < k in rank space, the middle vertices j that are
    non-adjacent to both through one integer matrix product.

    Returns:
        The lexicographically first violating triple (by rank), or None
    """
    n = graph.n
    if n < 3:
        return None

    adjacent = _ranked_adjacency(graph, ordering)
    forward_non_edges = np.triu(~adjacent, k=1).astype(np.int64)
    middles = forward_non_edges @ forward_non_edges
    violations = np.argwhere((middles > 0) & adjacent)
    if violations.size == 0:
        return None

    i, k = (int(x) for x in violations[0])
    j = int(np.flatnonzero(forward_non_edges[i] & forward_non_edges[:, k])[0])
    return ordering.order[i], ordering.order[j], ordering.order[k]


def verify_ordering(graph: Graph, order: Sequence[int] | CocoOrdering) -> CocoOrdering:
    """Validate a claimed co-comparability ordering.

    Args:
        graph: The graph
        order: Permutation of the vertices, first vertex first

    Returns:
        The validated ordering

    Raises:
        OrderingFormatError: If ``order`` is not a permutation of 0..n-1
        NotCocoOrdering: With a violating triple
    """
    ordering = order if isinstance(order, CocoOrdering) else CocoOrdering(tuple(order))
    if len(ordering) != graph.n:
        raise OrderingFormatError(
            f"ordering has {len(ordering)} vertices, graph has {graph.n}"
        )

    witness = find_property_one_violation(graph, ordering)
    if witness is not None:
        raise NotCocoOrdering(*witness)
    return ordering


def find_property_two_violation(
    graph: Graph, ordering: CocoOrdering
) -> tuple[int, int, int] | None:
    """Scan all triples for a counterexample to the left-shift property.

    For v < w with uv, vw non-edges and uw an edge, u must come after v.
    Cubic scan, meant for checking small instances.

    Returns:
        A violating triple (u, v, w), or None
    """
    for v, w in itertools.combinations(ordering.order, 2):
        if graph.has_edge(v, w):
            continue
        for u in range(graph.n):
            if u in (v, w) or graph.has_edge(u, v) or not graph.has_edge(u, w):
                continue
            if not ordering.precedes(v, u):
                return u, v, w
    return None


def _implication_class(
    remaining: list[set[int]], first: Arc
) -> set[Arc]:
    """Orient one implication class of the remaining complement edges.

    Arc a->b forces a->c whenever bc is not a remaining edge, and c->b
    whenever ac is not a remaining edge.

    Raises:
        NotCoComparability: If an edge gets forced in both directions
    """
    forced = {first}
    stack = [first]
    while stack:
        a, b = stack.pop()
        implied = [(a, c) for c in remaining[a] if c != b and c not in remaining[b]]
        implied += [(c, b) for c in remaining[b] if c != a and c not in remaining[a]]
        for arc in implied:
            if (arc[1], arc[0]) in forced:
                raise NotCoComparability((a, b), arc)
            if arc not in forced:
                forced.add(arc)
                stack.append(arc)
    return forced


def transitive_orientation(graph: Graph) -> set[Arc]:
    """Transitively orient the complement of ``graph``.

    Repeatedly picks the smallest unassigned complement edge, orients its
    implication class within the edges not yet assigned, and removes that
    class before continuing.

    Returns:
        Arcs of the orientation

    Raises:
        NotCoComparability: If the complement is not a comparability graph
    """
    remaining = [set(graph.non_neighbors(v)) for v in range(graph.n)]
    arcs: set[Arc] = set()
    classes = 0

    for a in range(graph.n):
        for b in sorted(remaining[a]):
            if b <= a or b not in remaining[a]:
                continue
            forced = _implication_class(remaining, (a, b))
            for x, y in forced:
                remaining[x].discard(y)
                remaining[y].discard(x)
            arcs |= forced
            classes += 1

    logger.debug("oriented %d complement edges in %d classes", len(arcs), classes)
    return arcs


def compute_ordering(graph: Graph) -> CocoOrdering:
    """Compute a co-comparability ordering.

    Transitively orients the complement, re-checks the orientation, and takes
    the lexicographically smallest topological order (ties broken by vertex id).

    Raises:
        NotCoComparability: If the graph is not a co-comparability graph
    """
    arcs = transitive_orientation(graph)

    oriented = np.zeros((graph.n, graph.n), dtype=bool)
    for a, b in arcs:
        oriented[a, b] = True
    two_step = (oriented.astype(np.int64) @ oriented.astype(np.int64)) > 0
    check(
        not bool((two_step & ~oriented).any()),
        "forcing produced a non-transitive orientation",
    )

    digraph: nx.DiGraph[int] = nx.DiGraph()
    digraph.add_nodes_from(range(graph.n))
    digraph.add_edges_from(arcs)
    check(nx.is_directed_acyclic_graph(digraph), "forcing produced a cyclic orientation")

    order = tuple(nx.lexicographical_topological_sort(digraph))
    return verify_ordering(graph, order)


def resolve_ordering(
    graph: Graph, ordering: Sequence[int] | CocoOrdering | None
) -> CocoOrdering:
    """Validate a supplied ordering, or compute one when none is given."""
    if ordering is None:
        return compute_ordering(graph)
    return verify_ordering(graph, ordering)
