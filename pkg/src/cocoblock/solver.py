"""Minimum d-transversals and d-deletion blockers of alpha.

Both problems reduce to a minimum s-t vertex cut in a layered digraph whose
s-t paths correspond one-to-one to the independent sets a solution has to hit.
Projecting a minimum cut back to G gives a feasible set no larger than the
cut, and every minimal feasible set yields a cut of its own size, so the
projection is optimal.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from cocoblock.config import ProblemKind
from cocoblock.errors import NotMinimal, check
from cocoblock.graph.layers import (
    LevelStructure,
    NonEdgeDag,
    build_levels,
    build_nonedge_dag,
    independence_number,
)
from cocoblock.graph.mincut import min_vertex_cut
from cocoblock.graph.ordering import resolve_ordering
from cocoblock.graph.reduction import LayeredDigraph, build_digraph
from cocoblock.models import Certificate, CocoOrdering, Graph, Solution

logger = logging.getLogger(__name__)

OrderingArg = Sequence[int] | CocoOrdering | None


@dataclass
class _Instance:
    """One (graph, ordering, problem, d) query with its derived structures."""

    graph: Graph
    ordering: CocoOrdering
    problem: ProblemKind
    d: int

    @cached_property
    def levels(self) -> LevelStructure:
        return build_levels(self.graph, self.ordering)

    @property
    def alpha(self) -> int:
        return self.levels.alpha

    @property
    def in_range(self) -> bool:
        return self.d <= self.alpha

    @cached_property
    def dag(self) -> NonEdgeDag:
        return build_nonedge_dag(self.graph, self.ordering)

    @cached_property
    def digraph(self) -> LayeredDigraph:
        dag = self.dag if self.problem == "transversal" else None
        return build_digraph(self.graph, self.ordering, self.levels, self.problem, self.d, dag)

    @cached_property
    def network(self) -> nx.DiGraph[int]:
        return self.digraph.to_networkx()

    def is_feasible(self, vertices: frozenset[int]) -> bool:
        if not self.in_range:
            return False
        if self.problem == "blocker":
            rest = set(range(self.graph.n)) - vertices
            subgraph, index = self.graph.induced_subgraph(rest)
            sub_alpha = independence_number(subgraph, self.ordering.restrict(index))
            return sub_alpha <= self.alpha - self.d
        removed = self.digraph.copies_of_set(vertices)
        survivors = nx.restricted_view(self.network, list(removed), [])
        return not nx.has_path(survivors, self.digraph.s, self.digraph.t)


def _instance(
    graph: Graph, ordering: OrderingArg, problem: ProblemKind, d: int
) -> _Instance:
    if d < 1:
        raise ValueError(f"threshold d must be at least 1, got {d}")
    return _Instance(graph, resolve_ordering(graph, ordering), problem, d)


def _vertex_set(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    members = frozenset(vertices)
    outside = sorted(v for v in members if not 0 <= v < graph.n)
    if outside:
        raise ValueError(f"vertices {outside} out of range for n={graph.n}")
    return members


def solve(
    graph: Graph,
    ordering: OrderingArg = None,
    problem: ProblemKind = "transversal",
    d: int = 1,
) -> Solution:
    """Compute a minimum d-transversal or d-deletion blocker.

    Args:
        graph: A co-comparability graph
        ordering: Co-comparability ordering; computed when omitted
        problem: "transversal" or "blocker"
        d: Threshold, at least 1

    Returns:
        The optimum with its min-cut certificate; infeasible when d > alpha

    Raises:
        NotCoComparability: If no ordering is given and none exists
        NotCocoOrdering: If the given ordering is invalid
    """
    instance = _instance(graph, ordering, problem, d)
    if not instance.in_range:
        logger.info("%s d=%d infeasible: alpha=%d", problem, d, instance.alpha)
        return Solution(
            problem=problem, d=d, alpha=instance.alpha, n=graph.n, min_size=None, feasible=False
        )

    digraph = instance.digraph
    cut = min_vertex_cut(instance.network, digraph.s, digraph.t)
    vertices = frozenset(
        v for v in (digraph.origin_of(x) for x in cut.cut_nodes) if v is not None
    )

    check(instance.is_feasible(vertices), "projected cut is not a feasible solution")
    check(len(vertices) <= cut.size, "projection grew the cut")

    certificate = Certificate(
        cut_nodes=tuple(sorted(cut.cut_nodes)),
        flow_value=cut.max_flow_value,
        disjoint_paths=tuple(sorted(cut.disjoint_paths)),
        ordering=instance.ordering.order,
    )
    logger.info(
        "%s d=%d on n=%d: alpha=%d, optimum %d", problem, d, graph.n, instance.alpha, len(vertices)
    )
    return Solution(
        problem=problem,
        d=d,
        alpha=instance.alpha,
        n=graph.n,
        min_size=len(vertices),
        vertices=tuple(sorted(vertices)),
        certificate=certificate,
    )


def decide(
    graph: Graph,
    ordering: OrderingArg,
    problem: ProblemKind,
    d: int,
    k: int,
) -> bool:
    """Check whether a feasible solution of size at most ``k`` exists."""
    if k < 0:
        raise ValueError(f"budget k must be non-negative, got {k}")
    solution = solve(graph, ordering, problem, d)
    return solution.feasible and solution.min_size is not None and solution.min_size <= k


def verify_solution(
    graph: Graph,
    ordering: OrderingArg,
    problem: ProblemKind,
    d: int,
    vertices: Iterable[int],
) -> bool:
    """Check feasibility of a vertex set in polynomial time.

    A blocker is checked by recomputing alpha of G - S along the restricted
    ordering. A transversal is checked by removing every layered copy of S and
    looking for a surviving s-t path.

    Returns:
        True if S is a feasible solution; always False when d > alpha
    """
    members = _vertex_set(graph, vertices)
    return _instance(graph, ordering, problem, d).is_feasible(members)


def verify_certificate(graph: Graph, solution: Solution) -> bool:
    """Re-check the optimality certificate of a solution from scratch.

    The layered digraph is rebuilt from the ordering stored in the
    certificate. The stored paths must be s-t paths of that digraph sharing no
    internal node, and there must be exactly ``min_size`` of them. The cut must
    consist of ``min_size`` internal nodes that separate s from t and project
    onto the solution, which in turn must be feasible.

    In clique mode pass the complement of the input graph.

    Returns:
        True if the certificate proves the solution optimal; for an
        infeasible solution, True if d really exceeds alpha
    """
    certificate = solution.certificate
    if certificate is None:
        if solution.feasible:
            return False
        instance = _instance(graph, None, solution.problem, solution.d)
        return not instance.in_range

    instance = _instance(graph, certificate.ordering, solution.problem, solution.d)
    if not solution.feasible or not instance.in_range or solution.min_size is None:
        return False
    digraph, network = instance.digraph, instance.network
    internal = set(range(1, digraph.t))
    size = solution.min_size

    if certificate.flow_value != size or len(certificate.disjoint_paths) != size:
        return False
    used: set[int] = set()
    for path in certificate.disjoint_paths:
        if len(path) < 3 or path[0] != digraph.s or path[-1] != digraph.t:
            return False
        if not all(network.has_edge(x, y) for x, y in zip(path, path[1:])):
            return False
        inner = set(path[1:-1])
        if len(inner) != len(path) - 2 or not inner <= internal or inner & used:
            return False
        used |= inner

    cut = set(certificate.cut_nodes)
    if len(cut) != size or not cut <= internal or digraph.has_st_path(cut):
        return False
    projected = {digraph.origin_of(x) for x in cut}
    if projected != set(solution.vertices):
        return False
    return instance.is_feasible(frozenset(solution.vertices))


def _minimize(instance: _Instance, vertices: frozenset[int]) -> frozenset[int]:
    if not instance.is_feasible(vertices):
        raise ValueError("cannot minimize an infeasible solution")
    rank = instance.ordering.rank
    current = set(vertices)
    for v in sorted(vertices, key=lambda u: rank[u], reverse=True):
        if instance.is_feasible(frozenset(current - {v})):
            current.discard(v)
    return frozenset(current)


def minimize_solution(
    graph: Graph,
    ordering: OrderingArg,
    problem: ProblemKind,
    d: int,
    vertices: Iterable[int],
) -> tuple[int, ...]:
    """Greedily drop vertices, last in the ordering first, while feasible.

    Returns:
        An inclusion-minimal feasible subset, sorted

    Raises:
        ValueError: If the given set is not feasible
    """
    members = _vertex_set(graph, vertices)
    instance = _instance(graph, ordering, problem, d)
    return tuple(sorted(_minimize(instance, members)))


def cut_from_solution(
    graph: Graph,
    ordering: OrderingArg,
    problem: ProblemKind,
    d: int,
    vertices: Iterable[int],
    minimize: bool = True,
) -> frozenset[int]:
    """Turn a minimal solution into an s-t cut of the same size.

    Scans the solution along the ordering. For each vertex the copy on the
    lowest level that still lies on an s-t path avoiding the copies chosen so
    far joins the cut.

    Args:
        graph: The graph
        ordering: Co-comparability ordering; computed when omitted
        problem: "transversal" or "blocker"
        d: Threshold in [1, alpha]
        vertices: Feasible solution
        minimize: Reduce the solution to an inclusion-minimal one first

    Returns:
        Node indices of the cut in the problem's layered digraph

    Raises:
        NotMinimal: If some vertex of the solution has no usable copy
        ValueError: If the solution is infeasible or d > alpha
    """
    members = _vertex_set(graph, vertices)
    instance = _instance(graph, ordering, problem, d)
    if not instance.is_feasible(members):
        raise ValueError("cut construction needs a feasible solution")
    if minimize:
        members = _minimize(instance, members)

    digraph, network = instance.digraph, instance.network
    rank = instance.ordering.rank
    cut: set[int] = set()
    for u in sorted(members, key=lambda v: rank[v]):
        survivors = nx.restricted_view(network, list(cut), [])
        from_source = nx.descendants(survivors, digraph.s)
        to_sink = nx.ancestors(survivors, digraph.t)
        chosen = next(
            (x for x in digraph.copies_of(u) if x in from_source and x in to_sink), None
        )
        if chosen is None:
            raise NotMinimal(u)
        cut.add(chosen)

    check(not digraph.has_st_path(cut), "constructed node set is not an s-t cut")
    check(len(cut) == len(members), "cut size differs from the solution size")
    return frozenset(cut)


def solve_clique_variant(
    graph: Graph,
    problem: ProblemKind,
    d: int,
    ordering: OrderingArg = None,
) -> Solution:
    """Solve the clique-number version on a comparability graph.

    Cliques of ``graph`` are independent sets of its complement, so the
    answer is the alpha answer on the complement; ``Solution.alpha`` then
    holds the clique number of ``graph``.

    Args:
        ordering: Co-comparability ordering of the complement, if known

    Raises:
        NotCoComparability: If ``graph`` is not a comparability graph
    """
    return solve(graph.complement(), ordering, problem, d)
