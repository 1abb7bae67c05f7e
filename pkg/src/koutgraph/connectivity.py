"""Degree and connectivity analysis.

``is_k_vertex_connected`` uses unit-capacity max-flow with node splitting
(via the active backend); ``brute_force_k_connected`` is the independent
oracle that removes every (k-1)-subset of vertices and checks connectivity,
i.e. the definition itself. The two must agree on every graph small enough
for the oracle.

Conventions: a graph with n <= k is not k-connected; the complete graph K_n
is (n-1)-connected but not n-connected; for n >= 2 an isolated vertex means
not connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _backend
from .model import Graph

BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class ConnectivityReport:
    min_degree: int
    is_connected: bool
    k_checked: int
    is_k_vertex_connected: bool


def degree_sequence(g: Graph) -> list[int]:
    return [g.degree(i) for i in range(g.n)]


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("min_degree needs at least one node")
    return min(degree_sequence(g))


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component."""
    if g.n < 1:
        raise ValueError("is_connected needs at least one node")
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def is_k_vertex_connected(g: Graph, k: int) -> bool:
    """True iff the graph stays connected after deleting any k-1 vertices.

    Equivalently (Menger) every vertex pair is joined by at least k
    internally vertex-disjoint paths.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n <= k:
        return False
    if k == 1:
        return is_connected(g)
    indptr, indices = g.to_csr()
    return bool(_backend.kernel.kconn_csr(g.n, indptr, indices, k))


def brute_force_k_connected(g: Graph, k: int) -> bool:
    """Definition-as-algorithm oracle: remove every (k-1)-subset, re-check
    connectivity of the remainder. Guarded to n <= 20."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute-force check limited to n <= {BRUTE_FORCE_MAX_N}, got n={g.n}"
        )
    if g.n <= k:
        return False
    masks = [0] * g.n
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    full = (1 << g.n) - 1
    for removed in combinations(range(g.n), k - 1):
        alive = full
        for v in removed:
            alive ^= 1 << v
        if not _mask_connected(masks, alive):
            return False
    return True


def _mask_connected(masks: list[int], alive: int) -> bool:
    start = alive & -alive
    reach = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= masks[b.bit_length() - 1]
            m ^= b
        frontier = nxt & alive & ~reach
        reach |= frontier
    return reach == alive


def connectivity_report(g: Graph, k: int) -> ConnectivityReport:
    return ConnectivityReport(
        min_degree=min_degree(g),
        is_connected=is_connected(g),
        k_checked=k,
        is_k_vertex_connected=is_k_vertex_connected(g, k),
    )
