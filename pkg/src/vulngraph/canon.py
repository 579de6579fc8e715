"""Isomorphism canonicalisation for small graphs.

The canonical form of a graph is the graph6 encoding of the relabelling whose
column-major upper-triangle bit string is lexicographically smallest among all
orderings that list vertices by nonincreasing degree, refined further by the
stable colouring of iterated neighbour-colour multisets.  Because graph6 stores
exactly that bit string, comparing canonical forms as bytes compares the bit
strings.

Column ``j`` of the bit string only depends on which vertices occupy positions
``0..j``, so the search extends prefixes one position at a time and keeps the
prefixes achieving the smallest column.  Two prefixes that cover the same
vertex set and give every unplaced vertex the same adjacency pattern to the
placed positions have identical futures, so only one of them is kept.
"""

from __future__ import annotations

from .errors import CapExceededError
from .graph import Graph, is_tree, members
from .graph6 import to_graph6

CANON_LIMIT = 12


def refined_colors(g: Graph) -> list[int]:
    """Stable colour refinement started from degrees.

    Colour ids are ranks of the refinement signatures, so they are invariant
    under relabelling; a higher degree always gets a smaller colour.
    """
    colors = [-g.degree(v) for v in range(g.n)]
    while True:
        sigs = [(colors[v], sorted(colors[u] for u in members(g.adj[v]))) for v in range(g.n)]
        ranks = {}
        for sig in sorted(sigs):
            ranks.setdefault(repr(sig), len(ranks))
        fresh = [ranks[repr(sig)] for sig in sigs]
        if len(ranks) == len(set(colors)):
            return fresh
        colors = fresh


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering producing the canonical relabelling of ``g``."""
    n = g.n
    degrees = refined_colors(g)
    slots = sorted(degrees)
    # state key -> (order, signatures); signature[u] = adjacency of u to placed positions
    states = [(0, [], (0,) * n)]
    for j in range(n):
        want = slots[j]
        best = None
        extended = {}
        for placed, order, sig in states:
            for v in range(n):
                if placed >> v & 1 or degrees[v] != want:
                    continue
                col = sig[v]
                if best is not None and col > best:
                    continue
                if best is None or col < best:
                    best = col
                    extended = {}
                row = g.adj[v]
                new_sig = tuple((s << 1) | (row >> u & 1) for u, s in enumerate(sig))
                new_placed = placed | (1 << v)
                key = (new_placed, tuple(s for u, s in enumerate(new_sig) if not new_placed >> u & 1))
                if key not in extended:
                    extended[key] = (new_placed, order + [v], new_sig)
        states = list(extended.values())
    return states[0][1]


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes equal for two graphs exactly when they are isomorphic."""
    if g.n > CANON_LIMIT:
        raise CapExceededError(
            f"canonical form supports at most {CANON_LIMIT} vertices, got {g.n}"
        )
    if is_tree(g):
        return to_graph6(g.relabel(tree_canonical_order(g)))
    return to_graph6(g.relabel(canonical_order(g)))


def _rooted_codes(g: Graph, root: int) -> tuple[dict[int, str], dict[int, list[int]]]:
    parent = {root: -1}
    bfs = [root]
    for v in bfs:
        for u in members(g.adj[v]):
            if u not in parent:
                parent[u] = v
                bfs.append(u)
    children: dict[int, list[int]] = {v: [] for v in bfs}
    for v in bfs[1:]:
        children[parent[v]].append(v)
    code: dict[int, str] = {}
    for v in reversed(bfs):
        children[v].sort(key=lambda c: code[c])
        code[v] = "(" + "".join(code[c] for c in children[v]) + ")"
    return code, children


def tree_centers(g: Graph) -> list[int]:
    degree = [g.degree(v) for v in range(g.n)]
    alive = g.full_mask
    leaves = [v for v in range(g.n) if degree[v] <= 1]
    left = g.n
    while left > 2:
        left -= len(leaves)
        fresh = []
        for leaf in leaves:
            alive &= ~(1 << leaf)
            for u in members(g.adj[leaf] & alive):
                degree[u] -= 1
                if degree[u] == 1:
                    fresh.append(u)
        leaves = fresh
    return members(alive)


def tree_canonical_order(g: Graph) -> list[int]:
    """BFS order of the tree rooted at a centre, children sorted by subtree code.

    Bicentral trees try both centres and keep the smaller encoding.
    """
    best = None
    for root in tree_centers(g):
        code, children = _rooted_codes(g, root)
        order = [root]
        for v in order:
            order.extend(children[v])
        enc = to_graph6(g.relabel(order))
        if best is None or enc < best[0]:
            best = (enc, order)
    return best[1]
