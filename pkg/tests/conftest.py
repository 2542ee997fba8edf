import random

import networkx as nx
import pytest
from loguru import logger

from randic.enumeration import enumerate_connected
from randic.graph import Graph, build


@pytest.fixture(autouse=True)
def drop_log_sinks():
    """CLI runs point loguru at a captured stream; detach it once the test ends."""
    yield
    logger.remove()


def from_networkx(H: nx.Graph) -> Graph:
    H = nx.convert_node_labels_to_integers(H, ordering="sorted")
    return build(H.number_of_nodes(), H.edges())


def to_networkx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def random_connected(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    """Random spanning tree plus each remaining pair with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return build(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20240607)


def compositions(total: int, parts: int, minimum: int = 0):
    """Every ordered tuple of `parts` integers >= minimum summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def connected_graphs(n_max: int, n_min: int = 2):
    """All connected isomorphism classes on n_min..n_max vertices."""
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)
