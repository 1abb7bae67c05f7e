"""Pure-Python implementations of the hot kernels.

Same API and bit-identical results as the compiled ``_kernel`` extension:
graph generation consumes the SplitMix64 stream in the same order, and the
connectivity checks implement the same algorithms. Selected automatically
when the extension is unavailable (or KOUTGRAPH_PURE=1); expect one to two
orders of magnitude less throughput.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product
from math import prod

import numpy as np

from .rng import SplitMix64

name = "pure"

_ENUM_MAX_N = 16


def generate_selections(
    n: int, mu: float, k1: int, k2: int, seed: int
) -> tuple[list[int], list[list[int]]]:
    """Types (1/2) and sorted selection lists for one instance."""
    stream = SplitMix64(seed)
    types = [1 if stream.next_double() < mu else 2 for _ in range(n)]
    pool = list(range(n))
    selections: list[list[int]] = []
    for i in range(n):
        count = k1 if types[i] == 1 else k2
        pool[i], pool[n - 1] = pool[n - 1], pool[i]
        swaps = []
        for j in range(count):
            idx = j + stream.next_below(n - 1 - j)
            pool[j], pool[idx] = pool[idx], pool[j]
            swaps.append((j, idx))
        selections.append(sorted(pool[:count]))
        for j, idx in reversed(swaps):
            pool[j], pool[idx] = pool[idx], pool[j]
        pool[i], pool[n - 1] = pool[n - 1], pool[i]
    return types, selections


def run_trials(
    n: int, mu: float, k1: int, k2: int, k: int, seeds
) -> tuple[int, int, int, int]:
    """Monte-Carlo loop: counts of {min degree >= k} and {k-connected}
    plus the sum and sum of squares of per-trial edge counts.

    The k-connectivity check runs only when min degree >= k, which cannot
    change its outcome (the degree bound is necessary).
    """
    mindeg_hits = 0
    kconn_hits = 0
    edge_sum = 0
    edge_sq = 0
    for seed in seeds:
        _, sels = generate_selections(n, mu, k1, k2, int(seed))
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, sel in enumerate(sels):
            for j in sel:
                adj[i].add(j)
                adj[j].add(i)
        deg = [len(s) for s in adj]
        e = sum(deg) // 2
        edge_sum += e
        edge_sq += e * e
        if min(deg) >= k:
            mindeg_hits += 1
            if _kconn_adj(n, adj, deg, k):
                kconn_hits += 1
    return mindeg_hits, kconn_hits, edge_sum, edge_sq


def connected_csr(n: int, indptr, indices) -> bool:
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for t in range(indptr[u], indptr[u + 1]):
            v = indices[t]
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def kconn_csr(n: int, indptr, indices, k: int) -> bool:
    """k-vertex-connectivity of an arbitrary CSR graph."""
    if n <= k:
        return False
    adj: list[set[int]] = [
        {indices[t] for t in range(indptr[i], indptr[i + 1])} for i in range(n)
    ]
    deg = [len(s) for s in adj]
    return _kconn_adj(n, adj, deg, k)


def _kconn_adj(n: int, adj: list[set[int]], deg: list[int], k: int) -> bool:
    if n <= k:
        return False
    if min(deg) < k:
        return False
    if not _connected_adj(n, adj):
        return False
    if k == 1:
        return True
    if k == 2:
        return not _has_articulation(n, adj)
    return _kconn_flows(n, adj, deg, k)


def _connected_adj(n: int, adj: list[set[int]]) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == n


def _has_articulation(n: int, adj: list[set[int]]) -> bool:
    """Iterative Tarjan lowlink scan; assumes the graph is connected."""
    disc = [0] * n
    low = [0] * n
    timer = 1
    disc[0] = low[0] = timer
    timer += 1
    stack: list[tuple[int, int]] = [(0, -1)]
    iters = {0: iter(adj[0])}
    root_children = 0
    while stack:
        v, parent = stack[-1]
        advanced = False
        for w in iters[v]:
            if w == parent:
                continue
            if disc[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v))
                iters[w] = iter(adj[w])
                advanced = True
                break
        if not advanced:
            stack.pop()
            if parent == 0:
                root_children += 1
                if root_children > 1:
                    return True
            elif parent != -1:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    return True
    return False


def _build_flow(n: int, adj: list[set[int]]):
    """Node-split unit-capacity digraph. Node x becomes x_in = 2x and
    x_out = 2x+1; arcs are appended in twin pairs so arc id ^ 1 is the
    residual partner."""
    fto: list[int] = []
    fcap: list[int] = []
    arcs_of: list[list[int]] = [[] for _ in range(2 * n)]

    def add_pair(u: int, v: int) -> None:
        arcs_of[u].append(len(fto))
        fto.append(v)
        fcap.append(1)
        arcs_of[v].append(len(fto))
        fto.append(u)
        fcap.append(0)

    for x in range(n):
        add_pair(2 * x, 2 * x + 1)
    for x in range(n):
        for y in adj[x]:
            if y > x:
                add_pair(2 * x + 1, 2 * y)
                add_pair(2 * y + 1, 2 * x)
    return fto, fcap, arcs_of


def _maxflow_atleast(fto, fcap, arcs_of, s: int, t: int, k: int) -> bool:
    """True iff the s-t max flow reaches k; shortest-augmenting-path with
    early exit at the sink. Mutates fcap."""
    nn = len(arcs_of)
    parent = [-1] * nn
    flow = 0
    while flow < k:
        vis = [False] * nn
        vis[s] = True
        queue = deque((s,))
        found = False
        while queue and not found:
            u = queue.popleft()
            for aid in arcs_of[u]:
                if fcap[aid] > 0:
                    v = fto[aid]
                    if not vis[v]:
                        vis[v] = True
                        parent[v] = aid
                        if v == t:
                            found = True
                            break
                        queue.append(v)
        if not found:
            return False
        v = t
        while v != s:
            aid = parent[v]
            fcap[aid] -= 1
            fcap[aid ^ 1] += 1
            v = fto[aid ^ 1]
        flow += 1
    return True


def _kconn_flows(n: int, adj: list[set[int]], deg: list[int], k: int) -> bool:
    """Flow phase, valid once min degree >= k and the graph is connected.

    Any vertex cut of size < k either misses the min-degree vertex v* (then
    v* is separated from some non-neighbor) or contains it (then two of v*'s
    neighbors on opposite sides are non-adjacent and separated), so checking
    v*-to-non-neighbor flows plus non-adjacent neighbor pairs suffices.
    """
    vstar = min(range(n), key=lambda i: deg[i])
    fto, fcap_base, arcs_of = _build_flow(n, adj)
    nbrs = adj[vstar]
    for u in range(n):
        if u != vstar and u not in nbrs:
            if not _maxflow_atleast(
                fto, fcap_base.copy(), arcs_of, 2 * vstar + 1, 2 * u, k
            ):
                return False
    ordered = sorted(nbrs)
    for i, x in enumerate(ordered):
        ax = adj[x]
        for y in ordered[i + 1 :]:
            if y not in ax:
                if not _maxflow_atleast(
                    fto, fcap_base.copy(), arcs_of, 2 * x + 1, 2 * y, k
                ):
                    return False
    return True


# -- exhaustive enumeration pass --------------------------------------------


def enum_profile(n: int, k1: int, k2: int, kconn_max: int = 0) -> dict:
    """Exact per-type-assignment event counts over every selection combination.

    For each type assignment (bit i of the mask set means node i is type-1)
    the counts are plain integers over the uniform selection space, so the
    caller can weight them by any mu exactly. Returned arrays, indexed by
    [mask, value]:

    - totals: number of selection combinations for the mask
    - deg_v0: configurations with deg(node0) = d
    - joint01: configurations with deg(node0) = deg(node1) = d
    - degree_count: sum over nodes of 1{deg = d} (for expected counts)
    - mindeg: configurations with min degree exactly m
    - kconn: configurations that are kk-vertex-connected (kk = 1..kconn_max,
      by the subset-removal definition)
    """
    if not 2 <= n <= _ENUM_MAX_N:
        raise ValueError(f"enumeration supports 2 <= n <= {_ENUM_MAX_N}, got {n}")
    nmasks = 1 << n
    sub: dict[int, list[list[int]]] = {}
    for kk, count in ((1, k1), (2, k2)):
        per_node = []
        for i in range(n):
            cands = [j for j in range(n) if j != i]
            per_node.append(
                [sum(1 << x for x in c) for c in combinations(cands, count)]
            )
        sub[kk] = per_node

    totals = np.zeros(nmasks, dtype=np.int64)
    deg_v0 = np.zeros((nmasks, n), dtype=np.int64)
    joint01 = np.zeros((nmasks, n), dtype=np.int64)
    degree_count = np.zeros((nmasks, n), dtype=np.int64)
    mindeg = np.zeros((nmasks, n), dtype=np.int64)
    kconn = np.zeros((nmasks, max(kconn_max, 0)), dtype=np.int64)

    removals = [
        [sum(1 << v for v in c) for c in combinations(range(n), kk - 1)]
        for kk in range(1, kconn_max + 1)
    ]
    full = (1 << n) - 1

    for tmask in range(nmasks):
        lists = [sub[1][i] if (tmask >> i) & 1 else sub[2][i] for i in range(n)]
        totals[tmask] = prod(len(lst) for lst in lists)
        for pick in product(*lists):
            adjm = [0] * n
            for i, m in enumerate(pick):
                adjm[i] |= m
                while m:
                    b = m & -m
                    adjm[b.bit_length() - 1] |= 1 << i
                    m ^= b
            degs = [bin(x).count("1") for x in adjm]
            d0 = degs[0]
            deg_v0[tmask, d0] += 1
            if degs[1] == d0:
                joint01[tmask, d0] += 1
            for d in degs:
                degree_count[tmask, d] += 1
            mindeg[tmask, min(degs)] += 1
            for kk in range(1, kconn_max + 1):
                if n <= kk or not all(
                    _mask_connected(adjm, full ^ rm) for rm in removals[kk - 1]
                ):
                    break
                kconn[tmask, kk - 1] += 1
    return {
        "totals": totals,
        "deg_v0": deg_v0,
        "joint01": joint01,
        "degree_count": degree_count,
        "mindeg": mindeg,
        "kconn": kconn,
    }


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
