"""Shared fixtures: the two 9-vertex reference instances and their coloring.

ref9a/ref9b share the edge set but carry different weight vectors; the
reference 3-coloring is I1={3,6,9}, I2={1,4,8}, I3={2,5,7}. Known values:
omega(ref9a)=13 at {4,5,6}, omega(ref9b)=19 at {1,2,3}; with the reference
coloring UB1=16/22 and UB2=19/19 on the a/b weights respectively.
"""

from pathlib import Path

import pytest

from ewmcp.graph import Coloring, WeightedGraph

REF9_EDGES = [
    (1, 2),
    (1, 3),
    (2, 3),
    (2, 4),
    (3, 7),
    (4, 5),
    (4, 6),
    (5, 6),
    (6, 8),
    (7, 8),
    (7, 9),
    (8, 9),
]
REF9A_WEIGHTS = [5, 3, 2, 2, 5, 3, 3, 7, 9, 4, 3, 2]
REF9B_WEIGHTS = [9, 9, 1, 4, 1, 1, 7, 9, 9, 3, 6, 7]

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"


@pytest.fixture(scope="session")
def ref9a() -> WeightedGraph:
    return WeightedGraph(
        9, [(u, v, w) for (u, v), w in zip(REF9_EDGES, REF9A_WEIGHTS)]
    )


@pytest.fixture(scope="session")
def ref9b() -> WeightedGraph:
    return WeightedGraph(
        9, [(u, v, w) for (u, v), w in zip(REF9_EDGES, REF9B_WEIGHTS)]
    )


@pytest.fixture(scope="session")
def ref_coloring() -> Coloring:
    return Coloring(9, [[3, 6, 9], [1, 4, 8], [2, 5, 7]])


@pytest.fixture(scope="session")
def instance_dir() -> Path:
    return INSTANCE_DIR
