import random

import pytest

from hadwiger_lab.graph import Graph, complete_minus_edge, cycle, random_connected


def one_based(g):
    return g.relabel(lambda v: v + 1)


@pytest.fixture
def c5():
    """The 5-cycle v1 -> v2 -> ... -> v5 -> v1."""
    return one_based(cycle(5))


@pytest.fixture
def k4_minus_34():
    """K4 without edge (3, 4), vertices 1..4."""
    return one_based(complete_minus_edge(4))


def random_connected_graphs(count, n_min, n_max, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_connected(n, rng.uniform(0.15, 0.7), rng.getrandbits(32)))
    return out


def random_tree(n, rng):
    return Graph(range(n), ((v, rng.randrange(v)) for v in range(1, n)))
