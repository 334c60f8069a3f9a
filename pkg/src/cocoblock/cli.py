"""CLI tool for minimum d-transversals and d-deletion blockers on co-comparability graphs."""

import json
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any, NoReturn, Optional

import click

from cocoblock import __version__
from cocoblock.config import (
    EXIT_INFEASIBLE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    PROBLEM_KINDS,
    ExportFormat,
    ProblemKind,
)
from cocoblock.export.dot import export_dot, export_json
from cocoblock.graph.layers import build_levels, dump_levels
from cocoblock.graph.ordering import resolve_ordering
from cocoblock.graph.reduction import LayeredDigraph, build_digraph
from cocoblock.io.edge_list import (
    format_vertices,
    load_graph_file,
    load_ordering_file,
    serialize_graph,
    serialize_ordering,
)
from cocoblock.io.result_writer import load_solution_vertices, solution_to_dict, write_result
from cocoblock.models import CocoOrdering, Graph, Solution
from cocoblock.oracle import gen_cocomparability, oracle_report
from cocoblock.solver import decide, solve, solve_clique_variant, verify_solution

logger = logging.getLogger(__name__)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@dataclass(frozen=True)
class RunConfig:
    """Resolved arguments of one CLI invocation.

    Attributes:
        command: Subcommand name
        input: Edge-list file
        ordering: Ordering file, if given
        problem: Problem to solve
        d: Threshold
        k: Budget for ``decide``
        clique: Solve the clique-number version via the complement
        json_output: Print JSON instead of text
        dot: DOT export target for the reduction digraph
    """

    command: str
    input: Path
    ordering: Optional[Path] = None
    problem: ProblemKind = "transversal"
    d: int = 1
    k: Optional[int] = None
    clique: bool = False
    json_output: bool = False
    dot: Optional[Path] = None

    def __post_init__(self) -> None:
        """Validate the threshold and budget."""
        if self.d < 1:
            raise ValueError(f"--d must be at least 1, got {self.d}")
        if self.k is not None and self.k < 0:
            raise ValueError(f"--k must be non-negative, got {self.k}")

    def load(self) -> tuple[Graph, Optional[CocoOrdering]]:
        """Load the input graph and the optional ordering file."""
        graph = load_graph_file(self.input)
        ordering = load_ordering_file(self.ordering, graph.n) if self.ordering else None
        logger.info(
            "%s: loaded %s (n=%d, m=%d, ordering %s)",
            self.command,
            self.input,
            graph.n,
            graph.m,
            "given" if ordering is not None else "computed",
        )
        return graph, ordering

    def load_target(self) -> tuple[Graph, Optional[CocoOrdering]]:
        """Graph the alpha machinery runs on: the complement in clique mode.

        In clique mode the ordering file is read as an ordering of the complement.
        """
        graph, ordering = self.load()
        return (graph.complement() if self.clique else graph), ordering


def _fail(message: str, code: int = EXIT_INPUT_ERROR) -> NoReturn:
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _run(action: Callable[[], None]) -> None:
    """Run a command body, mapping input errors to exit code 2."""
    try:
        action()
    except ValueError as e:
        _fail(str(e))
    except OSError as e:  # pragma: no cover
        _fail(f"{e.strerror}: {e.filename}")


def _write_text(content: str, output: Optional[Path], what: str) -> None:
    if output:
        output.write_text(content, encoding="utf-8")
        click.echo(f"{what} written to {output}")
    else:
        click.echo(content, nl=False)


def _layered_digraph(
    graph: Graph, ordering: Optional[CocoOrdering], problem: ProblemKind, d: int
) -> LayeredDigraph:
    resolved = resolve_ordering(graph, ordering)
    levels = build_levels(graph, resolved)
    return build_digraph(graph, resolved, levels, problem, d)


def _format_solution(solution: Solution, clique: bool) -> str:
    measure = "omega" if clique else "alpha"
    head = f"{solution.problem} d={solution.d} {measure}={solution.alpha}"
    if not solution.feasible:
        return f"{head} infeasible\n"
    return f"{head} min_size={solution.min_size}\n{format_vertices(solution.vertices)}\n"


def _input_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every command that reads a graph."""
    func = click.option(
        "--clique",
        is_flag=True,
        help="Solve the clique-number version on a comparability graph",
    )(func)
    func = click.option(
        "--ordering",
        "ordering_path",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Co-comparability ordering file (default: computed)",
    )(func)
    func = click.option(
        "--input",
        "input_path",
        required=True,
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help="Edge-list file",
    )(func)
    return func


def _problem_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """--problem and --d."""
    func = click.option(
        "--d",
        "d",
        required=True,
        type=click.IntRange(min=1),
        help="Threshold d (at least 1)",
    )(func)
    func = click.option(
        "--problem",
        type=click.Choice(PROBLEM_KINDS),
        default="transversal",
        help="Problem to solve (default: transversal)",
    )(func)
    return func


@click.command(
    name="solve",
    help="Compute a minimum d-transversal or d-deletion blocker",
)
@_problem_options
@_input_options
@click.option("--json", "json_output", is_flag=True, help="Print the result as JSON")
@click.option(
    "--dot",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the reduction digraph as DOT to this file",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the result file (.json, .yaml/.yml, otherwise a line of ids)",
)
def solve_command(
    problem: ProblemKind,
    d: int,
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
    json_output: bool,
    dot: Optional[Path],
    output: Optional[Path],
) -> None:
    """Solve one instance and print the optimum.

    \b
    Text output is two lines: a summary and the sorted solution ids.
    Asking for d above alpha reports the instance as infeasible.

    \b
    Examples:
        cocoblock solve --problem transversal --d 2 --input p5.txt
        cocoblock solve --problem blocker --d 2 --input p5.txt --json
    """

    def action() -> None:
        config = RunConfig(
            "solve", input_path, ordering_path, problem, d,
            clique=clique, json_output=json_output, dot=dot,
        )
        graph, ordering = config.load()
        if clique:
            solution = solve_clique_variant(graph, problem, d, ordering)
            graph = graph.complement()
        else:
            solution = solve(graph, ordering, problem, d)

        if config.json_output:
            click.echo(json.dumps(solution_to_dict(solution), indent=2))
        else:
            click.echo(_format_solution(solution, clique), nl=False)

        if config.dot and solution.feasible:
            digraph = _layered_digraph(graph, ordering, problem, d)
            config.dot.write_text(export_dot(digraph), encoding="utf-8")
            logger.info("reduction digraph written to %s", config.dot)
        if output:
            write_result(solution, output)
            logger.info("result written to %s", output)

    _run(action)


@click.command(
    name="decide",
    help="Decide whether a solution with at most k vertices exists",
)
@_problem_options
@_input_options
@click.option("--k", "k", required=True, type=click.IntRange(min=0), help="Budget k")
def decide_command(
    problem: ProblemKind,
    d: int,
    k: int,
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
) -> None:
    """Print yes or no; exits with code 1 on no."""
    answer = False

    def action() -> None:
        nonlocal answer
        config = RunConfig("decide", input_path, ordering_path, problem, d, k, clique)
        graph, ordering = config.load_target()
        answer = decide(graph, ordering, problem, d, k)
        click.echo("yes" if answer else "no")

    _run(action)
    if not answer:
        sys.exit(EXIT_INFEASIBLE)


@click.command(
    name="verify",
    help="Check whether a vertex set is a feasible solution",
)
@_problem_options
@_input_options
@click.option(
    "--solution",
    "solution_path",
    required=True,
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="Solution file (.json, .yaml/.yml or a line of ids)",
)
def verify_command(
    problem: ProblemKind,
    d: int,
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
    solution_path: Path,
) -> None:
    """Print valid or invalid; exits with code 1 when invalid."""
    valid = False

    def action() -> None:
        nonlocal valid
        config = RunConfig("verify", input_path, ordering_path, problem, d, clique=clique)
        graph, ordering = config.load_target()
        vertices = load_solution_vertices(solution_path)
        valid = verify_solution(graph, ordering, problem, d, vertices)
        click.echo("valid" if valid else "invalid")

    _run(action)
    if not valid:
        sys.exit(EXIT_INFEASIBLE)


@click.command(
    name="gen",
    help="Generate a random co-comparability graph",
)
@click.option("--n", "n", required=True, type=click.IntRange(min=0), help="Number of vertices")
@click.option(
    "--density",
    type=click.FloatRange(0.0, 1.0),
    default=0.5,
    help="Probability of a generating comparability (default: 0.5)",
)
@click.option("--seed", type=int, default=0, help="Random seed (default: 0)")
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Edge-list output file (default: stdout)",
)
@click.option(
    "--ordering",
    "ordering_output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the generated ordering to this file",
)
def gen_command(
    n: int,
    density: float,
    seed: int,
    output: Optional[Path],
    ordering_output: Optional[Path],
) -> None:
    """Sample a graph whose complement is a random partial order.

    \b
    Examples:
        cocoblock gen --n 8 --density 0.5 --seed 7 -o g.txt --ordering g.ord
    """

    def action() -> None:
        graph, ordering = gen_cocomparability(n, density, seed)
        _write_text(serialize_graph(graph), output, "Graph")
        if ordering_output:
            ordering_output.write_text(serialize_ordering(ordering), encoding="utf-8")

    _run(action)


@click.command(
    name="oracle-check",
    help="Compare solver optima with brute force for every d (small graphs)",
)
@_input_options
def oracle_check_command(
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
) -> None:
    """Print one line per problem and d; exits with code 1 on any mismatch."""
    mismatches = 0

    def action() -> None:
        nonlocal mismatches
        config = RunConfig("oracle-check", input_path, ordering_path, clique=clique)
        graph, ordering = config.load_target()
        report = oracle_report(graph)
        expected = {"transversal": report.best_transversal, "blocker": report.best_blocker}

        for problem in PROBLEM_KINDS:
            for d in range(1, report.alpha + 1):
                got = solve(graph, ordering, problem, d).min_size
                want = expected[problem][d]
                status = "ok" if got == want else "MISMATCH"
                mismatches += got != want
                click.echo(f"{problem} d={d} solver={got} oracle={want} {status}")

    _run(action)
    if mismatches:
        click.echo(f"{mismatches} mismatches", err=True)
        sys.exit(EXIT_INFEASIBLE)


@click.command(
    name="export",
    help="Export the reduction digraph as DOT or JSON",
)
@_problem_options
@_input_options
@click.option(
    "--format",
    "export_format",
    type=click.Choice(["dot", "json"]),
    default="dot",
    help="Output format (default: dot)",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Output file path (default: stdout)",
)
def export_command(
    problem: ProblemKind,
    d: int,
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
    export_format: ExportFormat,
    output: Optional[Path],
) -> None:
    """Render the layered digraph the solver cuts.

    Node labels read ``v{orig}@L{level},b{beta}``.
    """

    def action() -> None:
        config = RunConfig("export", input_path, ordering_path, problem, d, clique=clique)
        graph, ordering = config.load_target()
        digraph = _layered_digraph(graph, ordering, problem, d)
        content = export_dot(digraph) if export_format == "dot" else export_json(digraph)
        _write_text(content, output, "Digraph")

    _run(action)


@click.command(
    name="levels",
    help="Print positions and extension sizes of every vertex",
)
@_input_options
def levels_command(
    input_path: Path,
    ordering_path: Optional[Path],
    clique: bool,
) -> None:
    """One line ``v pos beta leftext rightext`` per vertex, in ordering order."""

    def action() -> None:
        config = RunConfig("levels", input_path, ordering_path, clique=clique)
        graph, ordering = config.load_target()
        levels = build_levels(graph, resolve_ordering(graph, ordering))
        click.echo(f"# alpha={levels.alpha}")
        click.echo(dump_levels(levels), nl=False)

    _run(action)


def _configure_logging(ctx: click.Context, param: click.Parameter, verbose: int) -> int:
    if verbose:
        logging.basicConfig(
            level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
    return verbose


@click.group(
    name="cocoblock",
    help="Minimum d-transversals and d-deletion blockers on co-comparability graphs",
)
@click.version_option(version=__version__, prog_name="cocoblock")
@click.option(
    "-v",
    "--verbose",
    count=True,
    expose_value=False,
    is_eager=True,
    callback=_configure_logging,
    help="Log to stderr (-v info, -vv debug)",
)
def cli() -> None:
    """cocoblock CLI tool."""
    pass


# Add commands to the group
cli.add_command(solve_command)
cli.add_command(decide_command)
cli.add_command(verify_command)
cli.add_command(gen_command)
cli.add_command(oracle_check_command)
cli.add_command(export_command)
cli.add_command(levels_command)


def main(argv: Optional[list[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        cli.main(args=argv, prog_name="cocoblock")
    except SystemExit as e:
        if isinstance(e.code, int):
            return e.code
        return EXIT_OK if e.code is None else EXIT_INPUT_ERROR
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    cli()
