"""Closed-form extremal values and the graphs attaining them.

Covers minimum tenacity over connected ``(n, m)``-graphs, maximum tenacity over
trees and unicyclic graphs, tenacity of paths and cycles, and the classical
maximum and minimum connectivity for given order and size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import CompleteGraphError, DomainError
from .graph import (
    Graph,
    from_edge_list,
    is_connected,
    members,
    path_graph,
    popcount,
)


@dataclass(frozen=True)
class TenacityBracket:
    n: int
    m: int
    k: int
    value: Fraction


@dataclass(frozen=True)
class UnicyclicAnatomy:
    cycle_vertices: int
    branch_vertices: int


def bracket_bounds(n: int, k: int) -> tuple[int, int]:
    """Half-open edge-count interval ``(low, high]`` whose minimum tenacity uses ``k``."""
    return comb(k, 2) + (n - k) * (k - 1), comb(k, 2) + (n - k) * k


def min_tenacity_bracket(n: int, m: int) -> TenacityBracket:
    if n < 2 or not n - 1 <= m <= comb(n, 2) - 1:
        raise DomainError(f"minimum tenacity bracket out of domain: need n >= 2 and n-1 <= m <= C(n,2)-1, got n={n}, m={m}")
    for k in range(1, n):
        low, high = bracket_bounds(n, k)
        if low < m <= high:
            return TenacityBracket(n, m, k, Fraction(k + 1, n - k))
    raise AssertionError("brackets do not cover the domain")  # pragma: no cover


def min_tenacity_value(n: int, m: int) -> Fraction:
    return min_tenacity_bracket(n, m).value


def build_min_tenacity_graph(n: int, m: int) -> Graph:
    """Clique on ``0..k-1`` plus an independent set whose edges go to the clique.

    The ``m - C(k,2)`` remaining edges are dealt to the independent vertices in
    rounds; round ``r`` joins each independent vertex, in order, to clique
    vertex ``r`` until the edges run out.
    """
    k = min_tenacity_bracket(n, m).k
    edges = [(u, v) for v in range(k) for u in range(v)]
    extra = m - comb(k, 2)
    outside = n - k
    for i in range(extra):
        target, vertex = divmod(i, outside)
        edges.append((target, k + vertex))
    return from_edge_list(n, edges)


def path_tenacity(n: int) -> Fraction:
    if n < 2:
        raise DomainError("path tenacity needs n >= 2 (P_1 has no vertex cut)")
    return Fraction(1) if n % 2 else Fraction(n + 2, n)


def cycle_tenacity(n: int) -> Fraction:
    if n < 3:
        raise DomainError("cycle tenacity needs n >= 3")
    if n == 3:
        raise CompleteGraphError("C_3 is the complete graph K_3; tenacity undefined")
    return Fraction(n + 3, n - 1) if n % 2 else Fraction(n + 2, n)


def max_tree_tenacity(n: int) -> Fraction:
    if n < 2:
        raise DomainError("maximum tree tenacity needs n >= 2")
    return path_tenacity(n)


def max_unicyclic_tenacity(n: int) -> Fraction:
    if n < 4:
        raise DomainError("maximum unicyclic tenacity needs n >= 4")
    return cycle_tenacity(n)


def _cubic_vertices_pairwise_adjacent(g: Graph) -> bool:
    cubic = [v for v in range(g.n) if g.degree(v) == 3]
    return all(g.has_edge(u, v) for i, u in enumerate(cubic) for v in cubic[i + 1:])


def is_max_tenacity_tree(g: Graph) -> bool:
    """Whether tree ``g`` has the largest tenacity among trees of its order."""
    if g.n < 2 or g.m != g.n - 1 or not is_connected(g):
        raise DomainError("predicate requires a tree with at least 2 vertices")
    max_degree = max(g.degree(v) for v in range(g.n))
    if g.n % 2 == 0:
        return max_degree <= 2
    return max_degree <= 3 and _cubic_vertices_pairwise_adjacent(g)


def is_max_tenacity_unicyclic(g: Graph) -> bool:
    """Whether unicyclic ``g`` has the largest tenacity among unicyclic graphs of its order."""
    if g.m != g.n or not is_connected(g):
        raise DomainError("predicate requires a unicyclic graph")
    if g.n == 3:
        raise CompleteGraphError("the only unicyclic graph on 3 vertices is K_3")
    max_degree = max(g.degree(v) for v in range(g.n))
    if g.n % 2:
        return max_degree == 2
    return max_degree <= 3 and _cubic_vertices_pairwise_adjacent(g)


def unicyclic_anatomy(g: Graph) -> UnicyclicAnatomy:
    """The unique cycle of ``g`` and its vertices of degree at least 3."""
    if g.m != g.n or not is_connected(g):
        raise DomainError("anatomy requires a unicyclic graph")
    alive = g.full_mask
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    while leaves:
        v = leaves.pop()
        alive &= ~(1 << v)
        for u in members(g.adj[v] & alive):
            if popcount(g.adj[u] & alive) == 1:
                leaves.append(u)
    branch = 0
    for v in members(alive):
        if g.degree(v) >= 3:
            branch |= 1 << v
    return UnicyclicAnatomy(alive, branch)


def max_connectivity_value(n: int, m: int) -> int:
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need 0 <= m <= C(n,2), got n={n}, m={m}")
    return 0 if m < n - 1 else 2 * m // n


def min_connectivity_value(n: int, m: int) -> int:
    if n < 1 or not 0 <= m <= comb(n, 2):
        raise DomainError(f"need 0 <= m <= C(n,2), got n={n}, m={m}")
    return max(0, m - comb(n - 1, 2))


def harary_base_edges(k: int, n: int) -> set[tuple[int, int]]:
    """Edges of the k-connected circulant-style graph on n vertices with ceil(kn/2) edges."""

    def edge(u, v):
        u, v = u % n, v % n
        return (u, v) if u < v else (v, u)

    if k <= 0:
        return set()
    if k == 1:
        return {(i, i + 1) for i in range(n - 1)}
    edges = {edge(i, i + d) for i in range(n) for d in range(1, k // 2 + 1)}
    if k % 2:
        half = n // 2
        if n % 2 == 0:
            edges |= {edge(i, i + half) for i in range(half)}
        else:
            edges |= {edge(0, half), edge(0, half + 1)}
            edges |= {edge(i, i + half + 1) for i in range(1, half)}
    return edges


def build_harary_graph(n: int, m: int) -> Graph:
    """Graph with ``n`` vertices, ``m`` edges and connectivity ``floor(2m/n)``.

    Starts from the minimal k-connected base and fills up with the
    lexicographically smallest missing pairs.
    """
    if n < 1 or not n - 1 <= m <= comb(n, 2):
        raise DomainError(f"Harary construction needs n-1 <= m <= C(n,2), got n={n}, m={m}")
    edges = harary_base_edges(2 * m // n, n)
    missing = m - len(edges)
    if missing < 0:  # pragma: no cover
        raise AssertionError("base graph exceeds the edge budget")
    fill = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(fill[:missing])
    return from_edge_list(n, sorted(edges))


def build_min_connectivity_graph(n: int, m: int) -> Graph:
    """``K_{n-1}`` on ``0..n-2`` plus vertex ``n-1`` joined to ``0..m-C(n-1,2)-1``."""
    base = comb(n - 1, 2)
    if n < 2 or not base < m <= comb(n, 2):
        raise DomainError(
            "minimum connectivity 0; no connected witness in this constructor's regime"
            if n >= 2 and m <= base
            else f"need C(n-1,2) < m <= C(n,2), got n={n}, m={m}"
        )
    edges = [(u, v) for v in range(n - 1) for u in range(v)]
    edges += [(u, n - 1) for u in range(m - base)]
    return from_edge_list(n, edges)


def extremal_tree(n: int) -> Graph:
    """A maximum-tenacity tree on ``n`` vertices: the path."""
    if n < 1:
        raise DomainError("need n >= 1")
    return path_graph(n)


def extremal_unicyclic(n: int) -> Graph:
    """A maximum-tenacity unicyclic graph on ``n`` vertices: the cycle."""
    if n < 3:
        raise DomainError("need n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])



def has_min_tenacity_structure(g: Graph) -> bool:
    """Whether ``g`` is a ``K_k`` plus ``n - k`` independent vertices joined only to it.

    ``k`` is the bracket index for ``g``'s order and size; each independent
    vertex must have between 1 and ``k`` neighbours.
    """
    k = min_tenacity_bracket(g.n, g.m).k
    for clique in combinations(range(g.n), k):
        mask = sum(1 << v for v in clique)
        if any(popcount(g.adj[v] & mask) != k - 1 for v in clique):
            continue
        rest = g.full_mask & ~mask
        if all(g.adj[v] & rest == 0 and g.adj[v] & mask for v in members(rest)):
            return True
    return False
