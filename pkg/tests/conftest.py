"""Pytest configuration file."""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

# Add the src directory to the Python path so tests can import modules
src_dir = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_dir))

from cocoblock.io.edge_list import load_graph_file, load_ordering_file  # noqa: E402
from cocoblock.models import CocoOrdering, Graph  # noqa: E402
from cocoblock.oracle import gen_cocomparability  # noqa: E402

settings.register_profile("cocoblock", max_examples=60, deadline=None)
settings.load_profile("cocoblock")

DATA_DIR = Path(__file__).parent / "data"

# Batch instances: n cycles through 1..10 for every density
BATCH_DENSITIES = (0.2, 0.5, 0.8)
BATCH_SEEDS_PER_DENSITY = 170


@pytest.fixture
def test_data_dir() -> Path:
    """Provide path to test data directory."""
    return DATA_DIR


@pytest.fixture
def p5() -> Graph:
    """Path 0-1-2-3-4."""
    return load_graph_file(DATA_DIR / "p5.txt")


@pytest.fixture
def k3() -> Graph:
    """Triangle."""
    return load_graph_file(DATA_DIR / "k3.txt")


@pytest.fixture
def c5() -> Graph:
    """Five-cycle, the smallest graph that is not co-comparability."""
    return load_graph_file(DATA_DIR / "c5.txt")


@pytest.fixture
def example10() -> Graph:
    """Ten-vertex graph with alpha 4 where vertices 8 and 9 are in no maximum independent set."""
    return load_graph_file(DATA_DIR / "example10.txt")


@pytest.fixture
def example10_order() -> CocoOrdering:
    """A co-comparability ordering of example10."""
    return load_ordering_file(DATA_DIR / "example10_order.txt", 10)


@pytest.fixture(scope="session")
def generated_instances() -> list[tuple[Graph, CocoOrdering, float, int]]:
    """510 small generated co-comparability graphs with their orderings.

    Returns:
        Tuples of (graph, ordering, density, seed)
    """
    instances = []
    for density in BATCH_DENSITIES:
        for seed in range(BATCH_SEEDS_PER_DENSITY):
            n = 1 + seed % 10
            graph, ordering = gen_cocomparability(n, density, seed)
            instances.append((graph, ordering, density, seed))
    return instances
