"""Minimum s-t vertex cut by node splitting and unit-capacity max flow."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable

import networkx as nx
from networkx.algorithms.flow import shortest_augmenting_path

from cocoblock.errors import InfiniteCut, check
from cocoblock.models import CutResult

logger = logging.getLogger(__name__)


class _SplitNetwork:
    """Flow network where each internal node ``v`` becomes ``2i -> 2i+1``.

    ``i`` is the index of ``v`` in sorted node order. Source and sink are not
    split: both ends of their ids coincide at ``2i``.
    """

    def __init__(self, dg: nx.DiGraph[int], s: int, t: int) -> None:
        self.s = s
        self.t = t
        self.nodes = sorted(dg.nodes)
        self.index = {v: i for i, v in enumerate(self.nodes)}
        self.internal = [v for v in self.nodes if v not in (s, t)]
        # Larger than any achievable flow value
        self.infinity = len(self.internal) + 1

        network: nx.DiGraph[int] = nx.DiGraph()
        network.add_nodes_from((self.in_id(s), self.in_id(t)))
        for v in self.internal:
            network.add_edge(self.in_id(v), self.out_id(v), capacity=1)
        for u, v in sorted(dg.edges):
            if v == s or u == t:
                continue
            network.add_edge(self.out_id(u), self.in_id(v), capacity=self.infinity)
        self.network = network

    def in_id(self, v: int) -> int:
        return 2 * self.index[v]

    def out_id(self, v: int) -> int:
        if v in (self.s, self.t):
            return 2 * self.index[v]
        return 2 * self.index[v] + 1

    def original(self, node_id: int) -> int:
        return self.nodes[node_id // 2]


def _check_terminals(dg: nx.DiGraph[int], s: int, t: int) -> None:
    if s == t:
        raise ValueError("source and sink must differ")
    for v in (s, t):
        if v not in dg:
            raise ValueError(f"node {v} is not in the digraph")
    if dg.has_edge(s, t):
        raise InfiniteCut(s, t)


def _max_flow(dg: nx.DiGraph[int], s: int, t: int) -> tuple[_SplitNetwork, nx.DiGraph[int]]:
    split = _SplitNetwork(dg, s, t)
    residual = shortest_augmenting_path(
        split.network, split.in_id(s), split.in_id(t), capacity="capacity"
    )
    return split, residual


def _source_side(residual: nx.DiGraph[int], source: int) -> set[int]:
    """Node ids reachable from the source over arcs with spare capacity."""
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y, attrs in residual[x].items():
            if y not in seen and attrs["capacity"] - attrs["flow"] > 0:
                seen.add(y)
                queue.append(y)
    return seen


def _decompose(split: _SplitNetwork, residual: nx.DiGraph[int]) -> list[tuple[int, ...]]:
    """Split the flow into s-t paths, erasing any loop met on the way."""
    remaining = {
        (x, y): int(attrs["flow"])
        for x, y, attrs in residual.edges(data=True)
        if attrs["flow"] > 0
    }
    successors: dict[int, list[int]] = {}
    for x, y in sorted(remaining):
        successors.setdefault(x, []).append(y)

    source, sink = split.in_id(split.s), split.in_id(split.t)
    paths: list[tuple[int, ...]] = []
    while any(remaining.get((source, y), 0) > 0 for y in successors.get(source, [])):
        walk = [source]
        while walk[-1] != sink:
            x = walk[-1]
            y = next(y for y in successors[x] if remaining[(x, y)] > 0)
            if y in walk:
                del walk[walk.index(y) + 1 :]
            else:
                walk.append(y)
        for x, y in zip(walk, walk[1:]):
            remaining[(x, y)] -= 1

        path: list[int] = []
        for node_id in walk:
            v = split.original(node_id)
            if not path or path[-1] != v:
                path.append(v)
        paths.append(tuple(path))
    return paths


def _check_disjoint(paths: Iterable[tuple[int, ...]]) -> None:
    seen: set[int] = set()
    for path in paths:
        inner = set(path[1:-1])
        check(not inner & seen, "flow paths share an internal node")
        seen |= inner


def min_vertex_cut(dg: nx.DiGraph[int], s: int, t: int) -> CutResult:
    """Compute a minimum s-t vertex cut.

    Every internal node gets capacity 1, every arc a capacity above any flow
    value. The cut returned is the one closest to the source: the nodes whose
    entry is reachable from s in the residual network and whose exit is not.

    Args:
        dg: Directed graph on integer nodes
        s: Source node
        t: Sink node

    Returns:
        The cut with its flow value and a vertex-disjoint path packing

    Raises:
        InfiniteCut: If ``dg`` has an arc s -> t
        ValueError: If s equals t or either is missing from ``dg``
    """
    _check_terminals(dg, s, t)
    split, residual = _max_flow(dg, s, t)
    flow_value = int(round(residual.graph["flow_value"]))

    reachable = _source_side(residual, split.in_id(s))
    cut = frozenset(
        v
        for v in split.internal
        if split.in_id(v) in reachable and split.out_id(v) not in reachable
    )

    survivors = nx.restricted_view(dg, list(cut), [])
    check(not nx.has_path(survivors, s, t), "extracted cut leaves an s-t path")
    check(len(cut) == flow_value, "cut size differs from the max flow value")

    paths = _decompose(split, residual)
    _check_disjoint(paths)
    check(len(paths) == flow_value, "flow decomposition lost paths")

    logger.debug(
        "min cut %d over %d internal nodes", flow_value, len(split.internal)
    )
    return CutResult(
        size=len(cut),
        cut_nodes=cut,
        max_flow_value=flow_value,
        disjoint_paths=tuple(paths),
    )


def vertex_disjoint_paths(dg: nx.DiGraph[int], s: int, t: int) -> list[tuple[int, ...]]:
    """A maximum set of internally vertex-disjoint s-t paths.

    Raises:
        InfiniteCut: If ``dg`` has an arc s -> t
    """
    _check_terminals(dg, s, t)
    split, residual = _max_flow(dg, s, t)
    paths = _decompose(split, residual)
    _check_disjoint(paths)
    return paths
