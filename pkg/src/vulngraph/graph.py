"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitsets.

Vertex subsets are plain ``int`` bitmasks throughout the package: bit ``v`` is
set when vertex ``v`` belongs to the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidGraphError

MAX_VERTICES = 64


def vertex_set(vertices: Iterable[int]) -> int:
    """Return the bitmask holding ``vertices``."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Return the vertices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise InvalidGraphError(f"vertex count must lie in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise InvalidGraphError("adjacency must have one bitset per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidGraphError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidGraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidGraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for v in range(self.n) for u in members(self.adj[v] & ((1 << v) - 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``order[i]`` becomes vertex ``i``."""
        position = [0] * self.n
        for i, v in enumerate(order):
            position[v] = i
        return from_edge_list(self.n, [(position[u], position[v]) for u, v in self.edges()])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class ComponentSummary:
    omega: int
    tau: int
    components: list[int] = field(compare=False)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated edges are collapsed."""
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise InvalidGraphError(f"vertex count must lie in 1..{MAX_VERTICES}, got {n!r}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for v in range(n) for u in range(v)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def component_masks(adj: Sequence[int], remaining: int) -> list[int]:
    """Connected components of the subgraph induced by ``remaining``.

    Components are listed in order of their lowest vertex.
    """
    comps = []
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            grown = 0
            while frontier:
                low = frontier & -frontier
                grown |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = grown & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        comps.append(comp)
    return comps


def omega_tau(adj: Sequence[int], remaining: int) -> tuple[int, int]:
    """Component count and largest component order of the induced subgraph."""
    omega = tau = 0
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            grown = 0
            while frontier:
                low = frontier & -frontier
                grown |= adj[low.bit_length() - 1]
                frontier ^= low
            frontier = grown & remaining & ~comp
            comp |= frontier
        remaining &= ~comp
        omega += 1
        size = bin(comp).count("1")
        if size > tau:
            tau = size
    return omega, tau


def components_after_removal(g: Graph, x: int) -> ComponentSummary:
    """Components of ``g - x``; ``x`` must be a proper subset of the vertices."""
    if x & ~g.full_mask:
        raise InvalidGraphError("vertex set contains vertices outside the graph")
    if x == g.full_mask:
        raise InvalidGraphError("cannot remove every vertex: largest component undefined")
    comps = component_masks(g.adj, g.full_mask & ~x)
    return ComponentSummary(len(comps), max(popcount(c) for c in comps), comps)


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.full_mask)) == 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def is_forest_mask(g: Graph, remaining: int) -> bool:
    """True when the subgraph induced by ``remaining`` has no cycle."""
    edges = sum(popcount(g.adj[v] & remaining) for v in members(remaining)) // 2
    return edges == popcount(remaining) - len(component_masks(g.adj, remaining))
