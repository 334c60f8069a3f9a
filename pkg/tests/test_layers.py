"""Unit tests for the level structure."""

import itertools

import numpy as np
import pytest

from cocoblock.graph.layers import (
    build_levels,
    build_nonedge_dag,
    dump_levels,
    independence_number,
    independent_set_positions,
    pair_max_extendable,
)
from cocoblock.models import CocoOrdering, Graph
from cocoblock.oracle import brute_alpha, enumerate_independent_sets


@pytest.fixture
def p5_levels(p5):
    """Level structure of P5 along the path order."""
    return build_levels(p5, CocoOrdering((0, 1, 2, 3, 4)))


@pytest.fixture
def p5_dag(p5):
    """Longest-chain table of P5 along the path order."""
    return build_nonedge_dag(p5, CocoOrdering((0, 1, 2, 3, 4)))


class TestBuildLevels:
    """Tests for build_levels."""

    def test_p5_extensions(self, p5_levels):
        """Test the sweeps on P5."""
        assert p5_levels.leftext == (0, 0, 1, 1, 2)
        assert p5_levels.rightext == (2, 1, 1, 0, 0)
        assert p5_levels.beta == (3, 2, 3, 2, 3)
        assert p5_levels.pos == (1, 1, 2, 2, 3)
        assert p5_levels.alpha == 3

    def test_p5_layers(self, p5_levels):
        """Test the layer partition of P5."""
        assert p5_levels.i_max == frozenset({0, 2, 4})
        assert p5_levels.layer(1) == frozenset({0})
        assert p5_levels.layer(2) == frozenset({2})
        assert p5_levels.layer(3) == frozenset({4})
        assert p5_levels.layer(1, beta=2) == frozenset({1})
        assert p5_levels.layer(2, beta=2) == frozenset({3})
        assert p5_levels.layer(3, beta=2) == frozenset()
        assert p5_levels.members_with_beta(2) == frozenset({1, 3})

    def test_example10(self, example10, example10_order):
        """Test layers of a graph with vertices outside every maximum independent set."""
        levels = build_levels(example10, example10_order)
        assert levels.alpha == 4
        assert levels.i_max == frozenset(range(8))
        assert levels.layer(1) == frozenset({0, 1})
        assert levels.layer(2) == frozenset({2, 3, 4})
        assert levels.layer(3) == frozenset({5, 6})
        assert levels.layer(4) == frozenset({7})
        assert (levels.beta[8], levels.pos[8]) == (3, 1)
        assert (levels.beta[9], levels.pos[9]) == (3, 3)
        assert levels.layer(2, beta=3) == frozenset()

    def test_empty_graph(self):
        """Test a graph without vertices."""
        levels = build_levels(Graph(0), CocoOrdering(()))
        assert levels.alpha == 0
        assert levels.i_max == frozenset()

    def test_independent_vertices(self):
        """Test a graph without edges."""
        levels = build_levels(Graph(4), CocoOrdering((2, 0, 3, 1)))
        assert levels.alpha == 4
        assert [levels.pos[v] for v in (2, 0, 3, 1)] == [1, 2, 3, 4]

    def test_alpha_matches_oracle(self, generated_instances):
        """Test the independence number against subset dynamic programming."""
        for graph, ordering, _, _ in generated_instances:
            assert independence_number(graph, ordering) == brute_alpha(graph)

    def test_beta_matches_enumeration(self, generated_instances):
        """Test that beta is the largest independent set containing each vertex."""
        for graph, ordering, _, _ in generated_instances[::5]:
            levels = build_levels(graph, ordering)
            best = [0] * graph.n
            for size in range(1, levels.alpha + 1):
                for members in enumerate_independent_sets(graph, size):
                    for v in members:
                        best[v] = max(best[v], size)
            assert list(levels.beta) == best


class TestLayerProperties:
    """Structural properties checked exhaustively on generated graphs."""

    def test_layers_are_cliques(self, generated_instances):
        """Test that every layer L(p, beta) is a clique."""
        for graph, ordering, _, _ in generated_instances:
            levels = build_levels(graph, ordering)
            for members in levels.layers.values():
                for u, v in itertools.combinations(sorted(members), 2):
                    assert graph.has_edge(u, v)

    def test_layers_dominate_wider_layers(self, generated_instances):
        """Test adjacency of L(p, beta) to L(p + i, j) for j >= beta and i <= j - beta."""
        for graph, ordering, _, _ in generated_instances:
            levels = build_levels(graph, ordering)
            for v in range(graph.n):
                p, beta = levels.pos[v], levels.beta[v]
                for j in range(beta, levels.alpha + 1):
                    for i in range(j - beta + 1):
                        for u in levels.layer(p + i, j) - {v}:
                            assert graph.has_edge(u, v)

    def test_positions_are_fixed(self, generated_instances):
        """Test that v sits at index pos(v) of every largest set containing it."""
        for graph, ordering, _, _ in generated_instances[::3]:
            levels = build_levels(graph, ordering)
            for size in range(1, levels.alpha + 1):
                for members in enumerate_independent_sets(graph, size):
                    positions = independent_set_positions(ordering, members)
                    for v in members:
                        if levels.beta[v] == size:
                            assert positions[v] == levels.pos[v]

    def test_order_and_position_agree(self, generated_instances):
        """Test that non-adjacent u before v in I_max means pos(u) < pos(v) and back."""
        for graph, ordering, _, _ in generated_instances:
            levels = build_levels(graph, ordering)
            for u, v in itertools.permutations(sorted(levels.i_max), 2):
                if graph.has_edge(u, v):
                    continue
                assert (levels.pos[u] < levels.pos[v]) == ordering.precedes(u, v)

    def test_positions_grow_along_non_edges(self, generated_instances):
        """Test that pos strictly increases from u to v for every non-edge u before v."""
        for graph, ordering, _, _ in generated_instances:
            levels = build_levels(graph, ordering)
            for u, v in itertools.combinations(ordering.order, 2):
                if not graph.has_edge(u, v):
                    assert levels.pos[u] < levels.pos[v]
                    assert levels.rightext[u] > levels.rightext[v]


class TestNonEdgeDag:
    """Tests for build_nonedge_dag and pair_max_extendable."""

    def test_p5_chains(self, p5_dag):
        """Test longest chains on P5."""
        assert p5_dag.chain_length(0, 0) == 1
        assert p5_dag.chain_length(0, 4) == 3
        assert p5_dag.chain_length(0, 3) == 2
        assert p5_dag.chain_length(1, 4) == 2
        assert p5_dag.chain_length(0, 1) == 0
        assert p5_dag.chain_length(4, 0) == 0

    def test_table_shape(self, p5_dag):
        """Test that the table is indexed by vertex id."""
        assert p5_dag.longest.shape == (5, 5)
        assert (np.diag(p5_dag.longest) == 1).all()

    def test_chains_against_enumeration(self, generated_instances):
        """Test chain lengths against the largest independent set from u to v."""
        for graph, ordering, _, _ in generated_instances[::5]:
            dag = build_nonedge_dag(graph, ordering)
            best = np.zeros((graph.n, graph.n), dtype=np.int64)
            for v in range(graph.n):
                best[v, v] = 1
            for size in range(2, graph.n + 1):
                sets = enumerate_independent_sets(graph, size)
                if not sets:
                    break
                for members in sets:
                    ranked = sorted(members, key=lambda x: ordering.rank[x])
                    first, last = ranked[0], ranked[-1]
                    best[first, last] = max(best[first, last], size)
            assert (dag.longest == best).all()

    def test_pair_max_extendable_p5(self, p5_levels, p5_dag):
        """Test pairs of P5."""
        assert pair_max_extendable(p5_levels, p5_dag, 0, 4)
        assert pair_max_extendable(p5_levels, p5_dag, 4, 0)
        assert pair_max_extendable(p5_levels, p5_dag, 0, 2)
        assert not pair_max_extendable(p5_levels, p5_dag, 0, 3)
        assert not pair_max_extendable(p5_levels, p5_dag, 1, 3)
        assert not pair_max_extendable(p5_levels, p5_dag, 0, 1)

    def test_pair_with_itself(self, p5_levels, p5_dag):
        """Test that a single vertex extends exactly when it is in I_max."""
        assert pair_max_extendable(p5_levels, p5_dag, 2, 2)
        assert not pair_max_extendable(p5_levels, p5_dag, 1, 1)

    def test_pairs_against_oracle(self, generated_instances):
        """Test max-extendability against the list of maximum independent sets."""
        for graph, ordering, _, _ in generated_instances[::2]:
            levels = build_levels(graph, ordering)
            dag = build_nonedge_dag(graph, ordering)
            maximum_sets = [set(s) for s in enumerate_independent_sets(graph, levels.alpha)]
            for u, v in itertools.combinations(range(graph.n), 2):
                expected = any(u in s and v in s for s in maximum_sets)
                assert pair_max_extendable(levels, dag, u, v) == expected


class TestHelpers:
    """Tests for positions and dumps."""

    def test_independent_set_positions(self):
        """Test relative positions along an ordering."""
        ordering = CocoOrdering((3, 1, 4, 0, 2))
        assert independent_set_positions(ordering, [0, 3, 4]) == {3: 1, 4: 2, 0: 3}

    def test_dump_levels(self, p5_levels, test_data_dir):
        """Test the debug dump format."""
        expected = (test_data_dir / "p5_levels_expected.txt").read_text().splitlines()[1:]
        assert dump_levels(p5_levels).splitlines() == expected

    def test_dump_empty(self):
        """Test the dump of an empty graph."""
        assert dump_levels(build_levels(Graph(0), CocoOrdering(()))) == ""
