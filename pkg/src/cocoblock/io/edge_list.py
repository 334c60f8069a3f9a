"""Parser and writer for the edge-list and ordering text formats."""

from collections.abc import Iterable
from pathlib import Path

from cocoblock.config import COMMENT_PREFIX
from cocoblock.errors import GraphFormatError, OrderingFormatError
from cocoblock.models import CocoOrdering, Graph


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    """Split text into (1-based line number, tokens), skipping blanks and comments."""
    lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        lines.append((line_no, stripped.split()))
    return lines


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(line_no, f"expected an integer, got {token!r}")


def parse_graph(text: str | bytes) -> Graph:
    """Parse an edge list.

    The first data line holds ``n m``, followed by exactly ``m`` lines ``u v``.
    Lines starting with ``#`` are comments.

    Args:
        text: File content

    Returns:
        The encoded graph

    Raises:
        GraphFormatError: On a malformed header, out-of-range vertex, self-loop,
            duplicate edge or wrong edge count, with the offending line number
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    lines = _data_lines(text)
    if not lines:
        raise GraphFormatError(1, "missing header line 'n m'")

    header_no, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError(header_no, "header must be 'n m'")
    n, m = (_parse_int(token, header_no) for token in header)
    if n < 0 or m < 0:
        raise GraphFormatError(header_no, "n and m must be non-negative")

    body = lines[1:]
    if len(body) != m:
        line_no = body[m][0] if len(body) > m else (body[-1][0] if body else header_no)
        raise GraphFormatError(line_no, f"header declares {m} edges, found {len(body)}")

    edges: set[tuple[int, int]] = set()
    for line_no, tokens in body:
        if len(tokens) != 2:
            raise GraphFormatError(line_no, "edge line must be 'u v'")
        u, v = (_parse_int(token, line_no) for token in tokens)
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise GraphFormatError(line_no, f"vertex {vertex} out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(line_no, f"self-loop on vertex {u}")
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise GraphFormatError(line_no, f"duplicate edge {edge[0]} {edge[1]}")
        edges.add(edge)

    return Graph(n, frozenset(edges))


def serialize_graph(graph: Graph) -> str:
    """Render a graph as an edge list with lexicographically sorted edges."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def parse_ordering(text: str, n: int | None = None) -> CocoOrdering:
    """Parse a whitespace-separated permutation of vertex ids.

    Args:
        text: File content; comment lines are ignored
        n: Expected vertex count, checked when given

    Returns:
        The (not yet validated against a graph) ordering

    Raises:
        OrderingFormatError: If the ids are not integers or not a permutation
    """
    tokens = [token for _, line in _data_lines(text) for token in line]
    try:
        order = tuple(int(token) for token in tokens)
    except ValueError as e:
        raise OrderingFormatError(f"ordering must contain integers only: {e}")

    if n is not None and len(order) != n:
        raise OrderingFormatError(f"ordering has {len(order)} ids, graph has {n} vertices")
    return CocoOrdering(order)


def serialize_ordering(ordering: CocoOrdering) -> str:
    """Render an ordering as a single line."""
    return format_vertices(ordering.order, sort=False) + "\n"


def format_vertices(vertices: Iterable[int], sort: bool = True) -> str:
    """Space-separated vertex ids, sorted unless told otherwise."""
    items = sorted(vertices) if sort else list(vertices)
    return " ".join(str(v) for v in items)


def load_graph_file(file_path: str | Path) -> Graph:
    """Load an edge-list file."""
    return parse_graph(Path(file_path).read_text(encoding="utf-8"))


def load_ordering_file(file_path: str | Path, n: int | None = None) -> CocoOrdering:
    """Load an ordering file."""
    return parse_ordering(Path(file_path).read_text(encoding="utf-8"), n)
