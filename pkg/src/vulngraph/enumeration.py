"""Isomorph-free families of small graphs and seeded random generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .canon import canonical_form
from .errors import CapExceededError, DomainError, NotConnectedError
from .graph import Graph, component_masks, from_edge_list, is_connected
from .graph6 import parse_graph6

TREE_CAP = 12
UNICYCLIC_CAP = 11
LABELED_CAP = 7
ISO_CAP = 8


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    m: Optional[int] = None
    up_to_isomorphism: bool = True

    def __post_init__(self):
        if self.family not in ("trees", "unicyclic", "connected"):
            raise DomainError(f"unknown family {self.family!r}")
        if self.family == "connected" and self.m is None:
            raise DomainError("the connected family needs an edge count")

    def generate(self) -> Iterator[Graph]:
        if self.family == "trees":
            return all_trees(self.n)
        if self.family == "unicyclic":
            return all_unicyclic(self.n)
        return all_connected_graphs(self.n, self.m, self.up_to_isomorphism)


def _canonical_representatives(graphs) -> tuple[Graph, ...]:
    return tuple(parse_graph6(form) for form in sorted({canonical_form(g) for g in graphs}))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (from_edge_list(1, []),)
    grown = (
        from_edge_list(n, t.edges() + [(v, n - 1)])
        for t in _trees(n - 1)
        for v in range(n - 1)
    )
    return _canonical_representatives(grown)


def all_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class, canonically labelled, in canonical order.

    Trees on ``n`` vertices are grown from those on ``n - 1`` by attaching a
    leaf at every vertex.
    """
    if not 1 <= n <= TREE_CAP:
        raise CapExceededError(f"trees are enumerated for 1 <= n <= {TREE_CAP}, got {n}")
    return iter(_trees(n))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    closed = (
        from_edge_list(n, t.edges() + [(u, v)])
        for t in _trees(n)
        for v in range(n)
        for u in range(v)
        if not t.has_edge(u, v)
    )
    return _canonical_representatives(closed)


def all_unicyclic(n: int) -> Iterator[Graph]:
    """One connected graph with ``m = n`` per isomorphism class."""
    if not 3 <= n <= UNICYCLIC_CAP:
        raise CapExceededError(f"unicyclic graphs are enumerated for 3 <= n <= {UNICYCLIC_CAP}, got {n}")
    return iter(_unicyclic(n))


@lru_cache(maxsize=None)
def _connected_classes(n: int, m: int) -> tuple[Graph, ...]:
    # every connected graph above tree size has a non-bridge edge to delete
    if m == n - 1:
        return _trees(n)
    added = (
        from_edge_list(n, h.edges() + [(u, v)])
        for h in _connected_classes(n, m - 1)
        for v in range(n)
        for u in range(v)
        if not h.has_edge(u, v)
    )
    return _canonical_representatives(added)


def _labeled_connected(n: int, m: int) -> Iterator[Graph]:
    pairs = [(u, v) for v in range(n) for u in range(v)]
    full = (1 << n) - 1
    for chosen in combinations(pairs, m):
        adj = [0] * n
        for u, v in chosen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if len(component_masks(adj, full)) == 1:
            yield Graph(n, tuple(adj))


def all_connected_graphs(n: int, m: int, up_to_isomorphism: bool = True) -> Iterator[Graph]:
    """Connected graphs with ``n`` vertices and ``m`` edges.

    Labelled mode yields every connected edge subset once, in lexicographic
    order of the chosen pairs; isomorphism mode yields canonical
    representatives in canonical order.
    """
    cap = ISO_CAP if up_to_isomorphism else LABELED_CAP
    mode = "isomorphism" if up_to_isomorphism else "labeled"
    if not 1 <= n <= cap:
        raise CapExceededError(f"{mode} enumeration of connected graphs supports n <= {cap}, got {n}")
    if not n - 1 <= m <= comb(n, 2):
        raise DomainError(f"need n-1 <= m <= C(n,2), got n={n}, m={m}")
    if up_to_isomorphism:
        return iter(_connected_classes(n, m))
    return _labeled_connected(n, m)


def prufer_to_tree(n: int, sequence) -> Graph:
    """Decode a Prüfer sequence of length ``n - 2`` into a labelled tree."""
    if n == 1:
        return from_edge_list(1, [])
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    edges = []
    for v in sequence:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return from_edge_list(n, edges)


def random_connected_graph(n: int, m: int, seed: int) -> Graph:
    """Random spanning tree from a Prüfer sequence plus distinct random extra edges."""
    if not 1 <= n <= 64 or not n - 1 <= m <= comb(n, 2):
        raise DomainError(f"no connected graph with n={n}, m={m}")
    rng = random.Random(seed)
    tree = prufer_to_tree(n, [rng.randrange(n) for _ in range(n - 2)]) if n > 1 else from_edge_list(1, [])
    present = set(tree.edges())
    spare = [(u, v) for v in range(n) for u in range(v) if (u, v) not in present]
    return from_edge_list(n, sorted(present | set(rng.sample(spare, m - (n - 1)))))


def random_connected_spanning_subgraph(g: Graph, seed: int) -> Graph:
    """Random spanning tree of ``g`` plus every other edge kept with probability 1/2."""
    if not is_connected(g):
        raise NotConnectedError("spanning subgraph requires a connected graph")
    rng = random.Random(seed)
    edges = g.edges()
    rng.shuffle(edges)
    root = list(range(g.n))

    def find(v):
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    kept = []
    rest = []
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            root[a] = b
            kept.append((u, v))
        else:
            rest.append((u, v))
    kept += [e for e in sorted(rest) if rng.random() < 0.5]
    return from_edge_list(g.n, kept)


def random_graph(n: int, seed: int, p: Optional[float] = None) -> Graph:
    """Erdős–Rényi style graph; ``p`` drawn uniformly when not given."""
    rng = random.Random(seed)
    if p is None:
        p = rng.random()
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
