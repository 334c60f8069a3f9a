"""Data structures shared by the parsing, graph and solver layers."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np
import numpy.typing as npt

from cocoblock.config import ProblemKind
from cocoblock.errors import OrderingFormatError

__all__ = ["Graph", "CocoOrdering", "CutResult", "Certificate", "Solution"]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices ``0..n-1``.

    Attributes:
        n: Number of vertices
        edges: Unordered edges stored as pairs ``(u, v)`` with ``u < v``
    """

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        """Validate vertex range and edge normalization."""
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("n must be a non-negative integer")

        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not normalized to 0 <= u < v < n")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from unordered pairs, rejecting duplicates.

        Args:
            n: Number of vertices
            pairs: Edges in any orientation

        Returns:
            The graph

        Raises:
            ValueError: On self-loops, out-of-range ids or duplicate pairs
        """
        edges: set[tuple[int, int]] = set()
        for u, v in pairs:
            edge = (min(u, v), max(u, v))
            if edge in edges:
                raise ValueError(f"duplicate edge {edge[0]} {edge[1]}")
            edges.add(edge)
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor list per vertex."""
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def non_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted non-neighbor list per vertex (the vertex itself excluded)."""
        return tuple(
            tuple(u for u in range(self.n) if u != v and u not in self._neighbor_sets[v])
            for v in range(self.n)
        )

    def has_edge(self, u: int, v: int) -> bool:
        """Check adjacency of two vertices."""
        return v in self._neighbor_sets[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        return self.adjacency[v]

    def non_neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted non-neighbors of ``v``."""
        return self.non_adjacency[v]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """Check that no two of the given vertices are adjacent."""
        members = sorted(set(vertices))
        return not any(
            self.has_edge(u, v)
            for i, u in enumerate(members)
            for v in members[i + 1 :]
        )

    def complement(self) -> Graph:
        """Graph on the same vertices whose edges are exactly the non-edges."""
        return Graph(
            self.n,
            frozenset(
                (u, v)
                for u in range(self.n)
                for v in range(u + 1, self.n)
                if not self.has_edge(u, v)
            ),
        )

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by ``keep``, relabeled contiguously.

        Args:
            keep: Vertices to keep

        Returns:
            Tuple of (subgraph, map from old id to new id); new ids follow
            increasing old ids
        """
        kept = sorted(set(keep))
        for v in kept:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range for n={self.n}")

        index = {old: new for new, old in enumerate(kept)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(kept), edges), index

    @cached_property
    def _adjacency_matrix(self) -> npt.NDArray[np.bool_]:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        if self.edges:
            rows, cols = zip(*self.edges)
            matrix[list(rows), list(cols)] = True
            matrix[list(cols), list(rows)] = True
        matrix.flags.writeable = False
        return matrix

    def adjacency_matrix(self) -> npt.NDArray[np.bool_]:
        """Dense boolean adjacency matrix indexed by vertex id, read-only and built once."""
        return self._adjacency_matrix

    def to_networkx(self) -> nx.Graph[int]:
        """NetworkX view with every vertex present, isolated ones included."""
        nx_graph: nx.Graph[int] = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(sorted(self.edges))
        return nx_graph


@dataclass(frozen=True)
class CocoOrdering:
    """Vertex ordering ``order[0] < order[1] < ...`` with its inverse.

    Instances returned by ``verify_ordering`` and ``compute_ordering`` are
    guaranteed to make non-adjacency transitive along the order for the graph
    they were checked against.

    Attributes:
        order: Permutation of 0..n-1, ``order[i]`` is the i-th vertex
        rank: Inverse permutation, ``rank[v]`` is the index of ``v``
    """

    order: tuple[int, ...]
    rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Validate the permutation and derive the ranks."""
        n = len(self.order)
        if sorted(self.order) != list(range(n)):
            raise OrderingFormatError(
                f"ordering is not a permutation of 0..{n - 1}: {list(self.order)}"
            )
        rank = [0] * n
        for i, v in enumerate(self.order):
            rank[v] = i
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def from_sequence(cls, order: Sequence[int]) -> CocoOrdering:
        """Wrap a sequence of vertex ids."""
        return cls(tuple(order))

    def __len__(self) -> int:
        return len(self.order)

    def precedes(self, u: int, v: int) -> bool:
        """True if ``u`` comes strictly before ``v``."""
        return self.rank[u] < self.rank[v]

    def restrict(self, index: Mapping[int, int]) -> CocoOrdering:
        """Ordering of an induced subgraph.

        Args:
            index: Map from old to new vertex ids, as returned by
                ``Graph.induced_subgraph``

        Returns:
            The relabeled sub-ordering; it stays valid for the induced subgraph
        """
        return CocoOrdering(tuple(index[v] for v in self.order if v in index))


@dataclass(frozen=True)
class CutResult:
    """Minimum s-t vertex cut with its max-flow certificate.

    Attributes:
        size: Number of cut nodes
        cut_nodes: Internal nodes whose removal disconnects s from t
        max_flow_value: Value of the unit-capacity max flow
        disjoint_paths: Internally vertex-disjoint s-t paths packed by the flow
    """

    size: int
    cut_nodes: frozenset[int]
    max_flow_value: int
    disjoint_paths: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        """Validate Menger duality bookkeeping."""
        if self.size != len(self.cut_nodes):
            raise ValueError("size must equal the number of cut nodes")
        if self.size != self.max_flow_value:
            raise ValueError("cut size must equal the max flow value")


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable evidence that a solution is optimal.

    Node indices refer to the layered digraph rebuilt from ``ordering``; the
    nodes there carry the level and position of every copy. The paths are
    internally vertex-disjoint, so no cut has fewer than ``flow_value`` nodes.

    Attributes:
        cut_nodes: Layered node indices of the minimum cut
        flow_value: Max flow value of the split network (lower bound)
        disjoint_paths: Internally vertex-disjoint s-t paths as layered node
            indices, s and t included
        ordering: Co-comparability ordering the digraph was built from
    """

    cut_nodes: tuple[int, ...]
    flow_value: int
    disjoint_paths: tuple[tuple[int, ...], ...]
    ordering: tuple[int, ...]


@dataclass(frozen=True)
class Solution:
    """Optimal transversal or deletion blocker.

    Attributes:
        problem: Which problem was solved
        d: Threshold
        alpha: Independence number of the solved graph (clique number of the
            input in clique mode)
        min_size: Optimum size, None when infeasible
        vertices: Optimal vertex set, sorted
        feasible: False when d exceeds alpha
        certificate: Min-cut evidence, None when infeasible
    """

    problem: ProblemKind
    d: int
    alpha: int
    n: int
    min_size: int | None
    vertices: tuple[int, ...] = ()
    feasible: bool = True
    certificate: Certificate | None = None

    def __post_init__(self) -> None:
        """Validate consistency of size and feasibility."""
        if self.feasible:
            if self.min_size != len(self.vertices):
                raise ValueError("min_size must equal the number of solution vertices")
        elif self.min_size is not None or self.vertices:
            raise ValueError("infeasible solutions carry no size and no vertices")
