"""Shared fixtures: tiny hand-checked graphs and seeded random instances."""

from __future__ import annotations

import random
from importlib.resources import files

import pytest

from modsweep import Graph, Partition, load_edge_list

TRIANGLE_EDGES = [(0, 1, 1), (1, 2, 1), (0, 2, 1)]
# two triangles joined by a single bridge edge, 7 edges, z = 14
BARBELL_EDGES = TRIANGLE_EDGES + [(3, 4, 1), (4, 5, 1), (3, 5, 1), (2, 3, 1)]
TWO_TRIANGLES_EDGES = TRIANGLE_EDGES + [(3, 4, 1), (4, 5, 1), (3, 5, 1)]


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edge_list(TRIANGLE_EDGES)


@pytest.fixture
def barbell() -> Graph:
    return Graph.from_edge_list(BARBELL_EDGES)


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edge_list(TWO_TRIANGLES_EDGES)


@pytest.fixture(scope="session")
def karate() -> tuple[Graph, list[str]]:
    text = files("modsweep").joinpath("data/karate.edges").read_text()
    return load_edge_list(text)


def random_graph(rng: random.Random, n: int, p: float = 0.35, max_w: int = 3,
                 connected: bool = False, loops: bool = True) -> Graph:
    """Random weighted graph with no isolated vertices."""
    acc: dict[tuple[int, int], int] = {}

    def add(u, v, w):
        key = (min(u, v), max(u, v))
        acc[key] = acc.get(key, 0) + w

    if connected and n > 1:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            add(order[i], order[rng.randrange(i)], rng.randint(1, max_w))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                add(u, v, rng.randint(1, max_w))
    if loops:
        for v in range(n):
            if rng.random() < 0.1:
                add(v, v, rng.randint(1, max_w))
    for v in range(n):
        if not any(v in key for key in acc):
            if n == 1:
                add(v, v, 1)
            else:
                other = rng.choice([u for u in range(n) if u != v])
                add(v, other, rng.randint(1, max_w))
    return Graph.from_edge_list([(u, v, w) for (u, v), w in acc.items()], n=n)


def random_partition(rng: random.Random, n: int, k: int | None = None) -> Partition:
    if k is None:
        k = rng.randint(1, n)
    return Partition([rng.randrange(k) for _ in range(n)])


def brute_force_min_cut(graph: Graph) -> tuple[int, set[int]]:
    """Minimum one-orientation crossing weight over all 2**(n-1) - 1 cuts."""
    n = graph.n
    best = None
    best_side: set[int] = set()
    # every cut appears once as the side avoiding vertex n-1
    for mask in range(1, 1 << (n - 1)):
        side = {v for v in range(n - 1) if mask >> v & 1}
        cut = 0
        for u in side:
            for v, w in graph.adj[u].items():
                if v not in side and v != u:
                    cut += w
        if best is None or cut < best:
            best, best_side = cut, side
    assert best is not None
    return best, best_side
