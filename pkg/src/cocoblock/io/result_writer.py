"""Write solutions to JSON, YAML or plain text, and read solution sets back."""

import json
from pathlib import Path
from typing import Any

import yaml
from ruamel.yaml import YAML

from cocoblock.config import RESULT_SUFFIXES, OutputFormat
from cocoblock.errors import SolutionFormatError
from cocoblock.io.edge_list import format_vertices
from cocoblock.models import Solution


def _create_yaml_writer() -> YAML:
    """Create a YAML writer with block style output."""
    writer = YAML()
    writer.default_flow_style = False
    return writer


def solution_to_dict(solution: Solution) -> dict[str, Any]:
    """Result record with the keys problem, n, alpha, d, feasible, min_size, solution."""
    return {
        "problem": solution.problem,
        "n": solution.n,
        "alpha": solution.alpha,
        "d": solution.d,
        "feasible": solution.feasible,
        "min_size": solution.min_size,
        "solution": list(solution.vertices),
    }


def result_format(output_path: Path) -> OutputFormat:
    """Output format chosen by file suffix; unknown suffixes mean plain text."""
    return RESULT_SUFFIXES.get(output_path.suffix.lower(), "text")


def write_result(solution: Solution, output_path: str | Path) -> OutputFormat:
    """Write a solution file.

    ``.json`` gets the indented record, ``.yaml``/``.yml`` the same record in
    block style, and anything else a single line of sorted vertex ids.

    Args:
        solution: Solved instance
        output_path: Target file, overwritten if present

    Returns:
        The format that was written
    """
    output_path = Path(output_path)
    fmt = result_format(output_path)

    if fmt == "json":
        output_path.write_text(
            json.dumps(solution_to_dict(solution), indent=2) + "\n", encoding="utf-8"
        )
    elif fmt == "yaml":
        with output_path.open("w", encoding="utf-8") as f:
            _create_yaml_writer().dump(solution_to_dict(solution), f)
    else:
        output_path.write_text(format_vertices(solution.vertices) + "\n", encoding="utf-8")
    return fmt


def _vertex_list(data: Any, file_path: Path) -> list[int]:
    if isinstance(data, dict):
        data = data.get("solution")
    if data is None:
        return []
    if not isinstance(data, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in data
    ):
        raise SolutionFormatError(f"{file_path}: 'solution' must be a list of vertex ids")
    return data


def load_solution_vertices(file_path: str | Path) -> frozenset[int]:
    """Read a vertex set from a result file or a plain line of ids.

    Raises:
        SolutionFormatError: If the content is not a list of integer ids
    """
    file_path = Path(file_path)
    fmt = result_format(file_path)

    with open(file_path, encoding="utf-8") as f:
        if fmt == "json":
            vertices = _vertex_list(json.load(f), file_path)
        elif fmt == "yaml":
            vertices = _vertex_list(yaml.safe_load(f), file_path)
        else:
            tokens = [
                token
                for line in f
                if not line.lstrip().startswith("#")
                for token in line.split()
            ]
            try:
                vertices = [int(token) for token in tokens]
            except ValueError as e:
                raise SolutionFormatError(f"{file_path}: {e}")

    return frozenset(vertices)
