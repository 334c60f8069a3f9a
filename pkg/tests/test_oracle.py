"""Unit tests for the brute-force oracles and instance generators."""

import networkx as nx
import pytest

from cocoblock.errors import TooLarge
from cocoblock.models import Graph
from cocoblock.oracle import (
    brute_alpha,
    brute_blocker,
    brute_transitive_orientation,
    brute_transversal,
    brute_vertex_cut,
    enumerate_independent_sets,
    gen_cocomparability,
    independence_numbers_by_subset,
    max_extendable_sets,
    oracle_report,
    random_dag,
)


class TestEnumeration:
    """Tests for independent set enumeration and alpha."""

    def test_p5_sets(self, p5):
        """Test lexicographic enumeration on P5."""
        assert enumerate_independent_sets(p5, 3) == [(0, 2, 4)]
        assert enumerate_independent_sets(p5, 2) == [
            (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4),
        ]
        assert enumerate_independent_sets(p5, 0) == [()]
        assert enumerate_independent_sets(p5, 4) == []

    def test_subset_table(self, p5):
        """Test alpha of induced subgraphs by bitmask."""
        table = independence_numbers_by_subset(p5)
        assert len(table) == 32
        assert table[0] == 0
        assert table[0b00011] == 1
        assert table[0b11011] == 2
        assert table[-1] == 3

    def test_brute_alpha(self, example10, c5):
        """Test alpha on the fixture graphs."""
        assert brute_alpha(example10) == 4
        assert brute_alpha(c5) == 2

    def test_max_extendable_sets(self, p5, example10):
        """Test sets contained in a maximum independent set."""
        assert max_extendable_sets(p5, 2) == [(0, 2), (0, 4), (2, 4)]
        assert (8, 9) not in max_extendable_sets(example10, 2)

    def test_guards(self):
        """Test that oversized inputs are refused."""
        with pytest.raises(TooLarge, match="limit is 24"):
            enumerate_independent_sets(Graph(25), 1)
        with pytest.raises(TooLarge, match="limit is 16"):
            brute_alpha(Graph(17))


class TestBruteOptima:
    """Tests for brute_transversal and brute_blocker."""

    @pytest.mark.parametrize(("d", "transversal", "blocker"), [(1, 1, 1), (2, 2, 3), (3, 3, 5)])
    def test_p5(self, p5, d, transversal, blocker):
        """Test the P5 optima."""
        assert brute_transversal(p5, d) == transversal
        assert brute_blocker(p5, d) == blocker

    def test_above_alpha(self, p5):
        """Test that d > alpha has no optimum."""
        assert brute_transversal(p5, 4) is None
        assert brute_blocker(p5, 4) is None

    def test_threshold_must_be_positive(self, p5):
        """Test that d = 0 is rejected."""
        with pytest.raises(ValueError):
            brute_transversal(p5, 0)
        with pytest.raises(ValueError):
            brute_blocker(p5, 0)

    def test_report(self, p5):
        """Test the combined oracle report."""
        report = oracle_report(p5)
        assert report.alpha == 3
        assert report.all_mis == ((0, 2, 4),)
        assert report.best_transversal == {1: 1, 2: 2, 3: 3}
        assert report.best_blocker == {1: 1, 2: 3, 3: 5}


class TestGenerator:
    """Tests for gen_cocomparability."""

    def test_reproducible(self):
        """Test that a seed fixes the instance."""
        assert gen_cocomparability(9, 0.4, seed=7) == gen_cocomparability(9, 0.4, seed=7)

    def test_density_zero_is_complete(self):
        """Test that no comparabilities give a clique."""
        graph, _ = gen_cocomparability(6, 0.0, seed=1)
        assert graph.m == 15

    def test_density_one_is_edgeless(self):
        """Test that a total order gives an independent set."""
        graph, ordering = gen_cocomparability(6, 1.0, seed=1)
        assert graph.m == 0
        assert len(ordering) == 6

    def test_invalid_arguments(self):
        """Test argument validation."""
        with pytest.raises(ValueError, match="non-negative"):
            gen_cocomparability(-1, 0.5)
        with pytest.raises(ValueError, match="density"):
            gen_cocomparability(3, 1.5)

    def test_empty(self):
        """Test the zero-vertex instance."""
        graph, ordering = gen_cocomparability(0, 0.5, seed=0)
        assert graph.n == 0
        assert ordering.order == ()


class TestOrientationSearch:
    """Tests for brute_transitive_orientation."""

    def test_p5(self, p5):
        """Test that the complement of P5 is orientable."""
        arcs = brute_transitive_orientation(p5)
        assert arcs is not None
        assert {(min(a, b), max(a, b)) for a, b in arcs} == p5.complement().edges

    def test_c5(self, c5):
        """Test that the complement of C5 is not."""
        assert brute_transitive_orientation(c5) is None

    def test_guard(self):
        """Test the vertex limit."""
        with pytest.raises(TooLarge):
            brute_transitive_orientation(Graph(9))


class TestCuts:
    """Tests for random_dag and brute_vertex_cut."""

    def test_random_dag_shape(self):
        """Test terminals and acyclicity."""
        dg, s, t = random_dag(8, 0.5, seed=3)
        assert (s, t) == (0, 9)
        assert nx.is_directed_acyclic_graph(dg)
        assert not dg.has_edge(s, t)
        assert dg.number_of_nodes() == 10

    def test_brute_cut(self):
        """Test a hand-made digraph."""
        dg = nx.DiGraph([(0, 1), (0, 2), (1, 3), (2, 3)])
        assert brute_vertex_cut(dg, 0, 3) == 2
        dg.add_edge(0, 3)
        assert brute_vertex_cut(dg, 0, 3) is None

    def test_brute_cut_guard(self):
        """Test the internal node limit."""
        dg, s, t = random_dag(19, 0.5, seed=0)
        with pytest.raises(TooLarge):
            brute_vertex_cut(dg, s, t)
