"""Unit tests for DOT and JSON export of layered digraphs."""

import json

import pytest

from cocoblock.export.dot import DotGenerator, digraph_to_dict, export_dot, export_json
from cocoblock.graph.layers import build_levels
from cocoblock.graph.reduction import build_digraph
from cocoblock.models import CocoOrdering


@pytest.fixture
def digraph(p5):
    """Transversal digraph of P5 for d = 2."""
    ordering = CocoOrdering((0, 1, 2, 3, 4))
    return build_digraph(p5, ordering, build_levels(p5, ordering), "transversal", 2)


class TestDotGenerator:
    """Tests for DotGenerator class."""

    def test_header_and_footer(self, digraph):
        """Test the enclosing statements."""
        lines = export_dot(digraph).splitlines()
        assert lines[0] == "digraph transversal_d2 {"
        assert lines[1] == "  rankdir=LR;"
        assert lines[-1] == "}"

    def test_node_lines(self, digraph):
        """Test one labeled statement per node."""
        output = export_dot(digraph)
        node_lines = [line for line in output.splitlines() if "[label=" in line]
        assert len(node_lines) == 8
        assert '  n0 [label="s", shape=circle' in output
        assert '  n7 [label="t", shape=doublecircle' in output
        assert '  n5 [label="v2@L2,b3", shape=box];' in output

    def test_arc_lines(self, digraph):
        """Test one statement per arc."""
        arc_lines = [line for line in export_dot(digraph).splitlines() if "->" in line]
        assert len(arc_lines) == len(digraph.arcs)
        assert "  n1 -> n6;" in arc_lines

    def test_rankdir(self, digraph):
        """Test a custom layout direction."""
        output = DotGenerator(digraph, rankdir="TB").generate()
        assert "  rankdir=TB;" in output
        assert output.endswith("}\n")


class TestJsonExport:
    """Tests for digraph_to_dict and export_json."""

    def test_structure(self, digraph):
        """Test the plain-data form."""
        data = digraph_to_dict(digraph)
        assert (data["kind"], data["d"], data["alpha"]) == ("transversal", 2, 3)
        assert len(data["nodes"]) == 8
        assert data["nodes"][0]["role"] == "source"
        assert data["nodes"][5] == {
            "index": 5, "orig": 2, "role": "copy", "level": 2, "beta": 3, "pos": 2,
        }
        assert data["arcs"][0] == [0, 1]

    def test_json_parses(self, digraph):
        """Test that the JSON text loads back to the same data."""
        text = export_json(digraph)
        assert text.endswith("\n")
        assert json.loads(text) == digraph_to_dict(digraph)
