import itertools
import random

import networkx as nx
import pytest

from lcorbits.graph import Graph
from lcorbits.orbit import enumerate_all

HEXACODE_MATRIX = """
w 0 0 1 1 1
0 w 0 W 1 w
0 0 w W w 1
0 1 0 w W 1
0 0 1 w 1 W
1 W 0 w 0 0
"""

# The printed last row is not orthogonal to rows 3 and 4; changing its fifth
# symbol from 0 to 1 is the only single-symbol repair.
HEXACODE_MATRIX_REPAIRED = HEXACODE_MATRIX.replace("1 W 0 w 0 0", "1 W 0 w 1 0")

HEXACODE_GRAPH_FORM = """
w 0 0 1 1 1
0 w 1 1 0 1
0 1 w 1 1 0
1 1 1 w 1 1
1 0 1 1 w 0
1 1 0 1 0 w
"""


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: k for k, v in enumerate(h.nodes())}
    return Graph.from_edges(h.number_of_nodes(), [(idx[u], idx[v]) for u, v in h.edges()])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2)
                                if rng.random() < p])


def atlas_graphs(n_max: int = 7):
    """Every graph on 1..n_max vertices up to isomorphism (networkx atlas)."""
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= n_max:
            yield from_nx(h)


@pytest.fixture(scope="session")
def small_classification():
    """Connected orbit records for n <= 7."""
    return enumerate_all(7)


@pytest.fixture(scope="session")
def classification():
    """Connected orbit records for n <= 9; computed once per session."""
    return enumerate_all(9)
