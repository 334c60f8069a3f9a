"""DOT and JSON renderings of layered reduction digraphs."""

import json
from typing import Any

from cocoblock.config import DOT_NODE_STYLES, DOT_RANKDIR
from cocoblock.graph.reduction import LayeredDigraph, LayeredNode


class DotGenerator:
    """Generates Graphviz DOT syntax from a layered digraph."""

    def __init__(self, digraph: LayeredDigraph, rankdir: str = DOT_RANKDIR) -> None:
        """Initialize the DOT generator.

        Args:
            digraph: Layered digraph to render
            rankdir: Graphviz layout direction (LR, RL, TB or BT)
        """
        self.digraph = digraph
        self.rankdir = rankdir

    @staticmethod
    def _node_id(index: int) -> str:
        return f"n{index}"

    def _generate_node_definition(self, index: int, node: LayeredNode) -> str:
        """Generate the DOT statement for a single node.

        Args:
            index: Node index in the digraph
            node: Node to render

        Returns:
            DOT node statement
        """
        style = DOT_NODE_STYLES[node.role]
        return f'  {self._node_id(index)} [label="{node.label}", {style}];'

    def _generate_arc_definition(self, tail: int, head: int) -> str:
        return f"  {self._node_id(tail)} -> {self._node_id(head)};"

    def generate(self) -> str:
        """Generate the complete DOT document.

        Nodes appear in index order and arcs in sorted order, so the output is
        deterministic.

        Returns:
            DOT text ending with a newline
        """
        title = f"{self.digraph.kind}_d{self.digraph.d}"
        lines = [f"digraph {title} {{", f"  rankdir={self.rankdir};"]

        for index, node in enumerate(self.digraph.nodes):
            lines.append(self._generate_node_definition(index, node))

        for tail, head in self.digraph.arcs:
            lines.append(self._generate_arc_definition(tail, head))

        lines.append("}")
        return "\n".join(lines) + "\n"


def export_dot(digraph: LayeredDigraph, rankdir: str = DOT_RANKDIR) -> str:
    """Render a layered digraph as DOT, labels ``v{orig}@L{level},b{beta}``."""
    return DotGenerator(digraph, rankdir).generate()


def digraph_to_dict(digraph: LayeredDigraph) -> dict[str, Any]:
    """Plain-data form of a layered digraph: node records and arc index pairs."""
    return {
        "kind": digraph.kind,
        "d": digraph.d,
        "alpha": digraph.alpha,
        "nodes": [
            {
                "index": index,
                "orig": node.orig,
                "role": node.role,
                "level": node.level,
                "beta": node.beta,
                "pos": node.pos,
            }
            for index, node in enumerate(digraph.nodes)
        ],
        "arcs": [[tail, head] for tail, head in digraph.arcs],
    }


def export_json(digraph: LayeredDigraph) -> str:
    """Render a layered digraph as indented JSON."""
    return json.dumps(digraph_to_dict(digraph), indent=2) + "\n"
