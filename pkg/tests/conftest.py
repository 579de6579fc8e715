from itertools import permutations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vulngraph.graph import Graph, from_edge_list, members

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    from vulngraph.enumeration import random_connected_graph

    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(n - 1, n * (n - 1) // 2))
    return random_connected_graph(n, m, draw(st.integers(0, 2**32)))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(range(n)))


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search; only for tiny graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges())
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges()):
            return True
    return False


def spider(legs):
    """Tree with centre 0 and paths of the given lengths hanging from it."""
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return from_edge_list(nxt, edges)


@pytest.fixture
def p4():
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star3():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


__all__ = ["brute_isomorphic", "connected_graphs", "graphs", "members", "spider"]
