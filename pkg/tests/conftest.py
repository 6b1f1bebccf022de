import random

import pytest

from arcwalk.graphs import Graph


def random_graph(rng: random.Random, max_n: int = 12) -> Graph:
    n = rng.randint(0, max_n)
    p = rng.random()
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, tuple(edges))


@pytest.fixture(scope="session")
def random_population() -> list[Graph]:
    """200 seeded random graphs with n <= 12."""
    rng = random.Random(20240817)
    return [random_graph(rng) for _ in range(200)]


@pytest.fixture(scope="session")
def small_population() -> list[Graph]:
    """Every graph with n <= 6, one per isomorphism class (208 graphs)."""
    from arcwalk.enumeration import generate_nonisomorphic

    return [g for n in range(1, 7) for g in generate_nonisomorphic(n)]
