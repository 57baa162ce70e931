"""Shared fixtures: the Heawood graph and its expensive derived families, built once per session."""

import random

import pytest

from Certifier.AutGroup import automorphisms
from Certifier.CycleEnum import disjoint_six_cycle_pairs, enumerate_cycles
from Certifier.GraphCore import Graph, complete_graph, cycle_graph, disjoint_union, heawood


@pytest.fixture(scope="session")
def heawood_graph():
    return heawood()


@pytest.fixture(scope="session")
def heawood_aut(heawood_graph):
    return automorphisms(heawood_graph)


@pytest.fixture(scope="session")
def heawood_cycles(heawood_graph):
    return {k: enumerate_cycles(heawood_graph, k) for k in (6, 8, 10, 12, 14)}


@pytest.fixture(scope="session")
def clique_union():
    """K5, K4 and C5 side by side: 14 vertices, 21 edges, automorphism group of order 28800."""
    return disjoint_union(disjoint_union(complete_graph(5), complete_graph(4)), cycle_graph(5))


@pytest.fixture(scope="session")
def heawood_pairs(heawood_graph, heawood_cycles):
    return disjoint_six_cycle_pairs(heawood_graph, heawood_cycles[6])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(edges, vertices=range(1, n + 1))


@pytest.fixture(scope="session")
def random_corpus():
    """220 seeded random graphs with 3..10 vertices and varied densities."""
    rng = random.Random(20240611)
    corpus = []
    for _ in range(220):
        n = rng.randint(3, 10)
        densities = (0.2, 0.35, 0.5, 0.7) if n <= 7 else (0.2, 0.3, 0.4)
        corpus.append(random_graph(rng, n, rng.choice(densities)))
    return corpus
