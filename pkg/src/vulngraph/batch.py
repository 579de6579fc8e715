"""Vectorised exact tenacity over every labelled graph of a small order.

A labelled graph on ``n`` vertices is an integer code whose bit ``p`` marks
the ``p``-th vertex pair in column-major upper-triangle order.  For each
vertex subset ``X`` the code of ``G - X`` is extracted bit by bit and its
component count and largest component are looked up in a table covering all
graphs on ``n - |X|`` vertices.  Ratios are compared by cross-multiplication,
so the minimum is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CapExceededError
from .graph import omega_tau
from .invariants import subsets_by_size

BATCH_CAP = 7


def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {(u, v): p for p, (u, v) in enumerate((u, v) for v in range(n) for u in range(v))}


@lru_cache(maxsize=None)
def component_table(r: int) -> tuple[np.ndarray, np.ndarray]:
    """``(omega, tau)`` for every labelled graph on ``r`` vertices, indexed by code."""
    pairs = list(pair_index(r))
    size = 1 << len(pairs)
    omega = np.empty(size, dtype=np.int8)
    tau = np.empty(size, dtype=np.int8)
    full = (1 << r) - 1
    for code in range(size):
        adj = [0] * r
        for p, (u, v) in enumerate(pairs):
            if code >> p & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        omega[code], tau[code] = omega_tau(adj, full)
    return omega, tau


def connected_mask(codes: np.ndarray, n: int) -> np.ndarray:
    """Boolean array: which codes describe connected graphs."""
    rows = [np.zeros(codes.shape, dtype=np.uint32) for _ in range(n)]
    for (u, v), p in pair_index(n).items():
        bit = (codes >> np.uint32(p)) & np.uint32(1)
        rows[u] |= bit << np.uint32(v)
        rows[v] |= bit << np.uint32(u)
    reach = np.ones(codes.shape, dtype=np.uint32)
    for _ in range(n - 1):
        grown = reach.copy()
        for v in range(n):
            grown |= np.where((reach >> np.uint32(v)) & np.uint32(1), rows[v], np.uint32(0))
        reach = grown
    return reach == (1 << n) - 1


def induced_codes(codes: np.ndarray, n: int, removed: int) -> np.ndarray:
    """Codes of ``G - removed`` on the surviving vertices, relabelled in order."""
    keep = [v for v in range(n) if not removed >> v & 1]
    index = pair_index(n)
    out = np.zeros(codes.shape, dtype=np.uint32)
    q = 0
    for b in range(len(keep)):
        for a in range(b):
            out |= ((codes >> np.uint32(index[(keep[a], keep[b])])) & np.uint32(1)) << np.uint32(q)
            q += 1
    return out


def labeled_connected_codes(n: int) -> np.ndarray:
    """Codes of all connected labelled graphs on ``n`` vertices, ascending."""
    if not 2 <= n <= BATCH_CAP:
        raise CapExceededError(f"labelled batch enumeration supports 2 <= n <= {BATCH_CAP}, got {n}")
    codes = np.arange(1 << (n * (n - 1) // 2), dtype=np.uint32)
    return codes[connected_mask(codes, n)]


def edge_counts(codes: np.ndarray) -> np.ndarray:
    counts = np.zeros(codes.shape, dtype=np.int64)
    work = codes.copy()
    while work.any():
        counts += (work & np.uint32(1)).astype(np.int64)
        work >>= np.uint32(1)
    return counts


def batch_scan(codes: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Exact tenacity and connectivity of each coded connected graph.

    Returns ``(num, den, kappa)``: tenacity is ``num / den`` (not reduced) and
    is meaningless for complete graphs, whose connectivity is ``n - 1``.
    """
    best_num = np.full(codes.shape, 4 * n, dtype=np.int64)
    best_den = np.ones(codes.shape, dtype=np.int64)
    kappa = np.full(codes.shape, n - 1, dtype=np.int64)
    for s in range(1, n - 1):
        omega_table, tau_table = component_table(n - s)
        for x in subsets_by_size(n, s):
            sub = induced_codes(codes, n, x)
            omega = omega_table[sub].astype(np.int64)
            cut = omega > 1
            kappa = np.where(cut & (kappa > s), s, kappa)
            num = s + tau_table[sub].astype(np.int64)
            better = cut & (num * best_den < best_num * omega)
            best_num = np.where(better, num, best_num)
            best_den = np.where(better, omega, best_den)
    return best_num, best_den, kappa


def batch_tenacity(codes: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators and denominators of the tenacity of connected noncomplete coded graphs."""
    num, den, _ = batch_scan(codes, n)
    return num, den


def code_to_edges(code: int, n: int) -> list[tuple[int, int]]:
    return [pair for pair, p in pair_index(n).items() if code >> p & 1]


def minimum_fraction(num: np.ndarray, den: np.ndarray) -> Fraction:
    pairs = np.unique(np.stack([num, den], axis=1), axis=0)
    return min(Fraction(int(a), int(b)) for a, b in pairs)
