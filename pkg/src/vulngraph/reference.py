"""Naive reference enumerator for the six parameters.

Deliberately shares nothing with the search engine: adjacency lists instead of
bitsets, breadth-first search with a queue, every proper subset visited in
plain numeric order and no pruning.  Used only to cross-check the engine.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Optional

from .graph import Graph


def _components(neighbours: list[list[int]], removed: set[int]) -> list[int]:
    seen = set(removed)
    sizes = []
    for start in range(len(neighbours)):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        size = 0
        while queue:
            v = queue.popleft()
            size += 1
            for u in neighbours[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        sizes.append(size)
    return sizes


def naive_parameters(g: Graph) -> dict[str, tuple[Optional[Fraction], Optional[int]]]:
    """Map parameter name to ``(value, optimal cut bitmask)``.

    Undefined parameters map to ``(None, None)``; connectivity of a complete
    graph maps to ``(n - 1, None)``.
    """
    n = g.n
    neighbours = [[u for u in range(n) if g.has_edge(v, u)] for v in range(n)]
    complete = all(len(nb) == n - 1 for nb in neighbours)
    keyed: dict[str, tuple] = {}
    for mask in range((1 << n) - 1):
        removed = {v for v in range(n) if mask >> v & 1}
        sizes = _components(neighbours, removed)
        size, omega, tau = len(removed), len(sizes), max(sizes)
        values = {"integrity": (Fraction(size + tau), False)}
        if omega > 1:
            values.update(
                connectivity=(Fraction(size), False),
                toughness=(Fraction(size, omega), False),
                scattering=(Fraction(omega - size), True),
                tenacity=(Fraction(size + tau, omega), False),
                rupture=(Fraction(omega - size - tau), True),
            )
        for name, (value, maximise) in values.items():
            key = (-value if maximise else value, size, mask)
            if name not in keyed or key < keyed[name]:
                keyed[name] = key
    out: dict[str, tuple[Optional[Fraction], Optional[int]]] = {}
    for name in ("connectivity", "toughness", "scattering", "integrity", "tenacity", "rupture"):
        if complete and name != "integrity":
            out[name] = (Fraction(n - 1), None) if name == "connectivity" else (None, None)
            continue
        key = keyed[name]
        value = -key[0] if name in ("scattering", "rupture") else key[0]
        out[name] = (value, key[2])
    return out
