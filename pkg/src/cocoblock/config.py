"""Problem kinds, file formats and rendering configuration."""

from typing import Literal

ProblemKind = Literal[
    "transversal",
    "blocker",
]

NodeRole = Literal[
    "source",
    "sink",
    "copy",
]

OutputFormat = Literal[
    "text",
    "json",
    "yaml",
]

ExportFormat = Literal[
    "dot",
    "json",
]

# Order matters: CLI choices and oracle-check reports follow it
PROBLEM_KINDS: tuple[ProblemKind, ...] = ("transversal", "blocker")

# Result file formats by suffix; anything else is written as a plain id line
RESULT_SUFFIXES: dict[str, OutputFormat] = {
    ".json": "json",
    ".yaml": "yaml",
    ".yml": "yaml",
}

# Edge-list and ordering files
COMMENT_PREFIX = "#"

# Orig tags of the distinguished layered nodes
SOURCE_TAG = -1
SINK_TAG = -2

# DOT attributes per layered node role
# Format: {role: attribute list}
DOT_NODE_STYLES: dict[str, str] = {
    "source": 'shape=circle, style=filled, fillcolor="#e1f5ff"',
    "sink": 'shape=doublecircle, style=filled, fillcolor="#fce4ec"',
    "copy": "shape=box",
}

DOT_RANKDIR = "LR"

# Oracle guards (exponential algorithms)
MAX_ENUMERATION_VERTICES = 24
MAX_BRUTE_VERTICES = 16
MAX_BRUTE_CUT_NODES = 18
MAX_ORIENTATION_VERTICES = 8
MAX_ENUMERATED_PATHS = 100_000

# CLI exit codes
EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
