# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: graph generation, Monte-Carlo trial loops,
k-connectivity via node-split max-flow, and the exhaustive enumeration pass.

Mirrors ``_purekernel`` exactly: same SplitMix64 stream consumption, same
algorithms, bit-identical outputs.
"""

from libc.stdint cimport int8_t, int32_t, int64_t, uint8_t, uint32_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

from itertools import combinations
from math import comb

import numpy as np

name = "cython"

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


# ------------------------------------------------------------------ RNG ----

cdef inline uint64_t _mix64(uint64_t z) noexcept nogil:
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef inline uint64_t _next_u64(uint64_t* state) noexcept nogil:
    state[0] = state[0] + <uint64_t>0x9E3779B97F4A7C15
    return _mix64(state[0])


cdef inline double _next_double(uint64_t* state) noexcept nogil:
    return <double>(_next_u64(state) >> 11) * (1.0 / 9007199254740992.0)


cdef inline uint64_t _next_below(uint64_t* state, uint64_t bound) noexcept nogil:
    # rejection from the top keeps the draw exactly uniform
    cdef uint64_t rem = (<uint64_t>0 - bound) % bound
    cdef uint64_t r
    while True:
        r = _next_u64(state)
        if r <= <uint64_t>0xFFFFFFFFFFFFFFFF - rem:
            return r % bound


# ----------------------------------------------------------- generation ----

cdef void _draw(int n, double mu, int k1, int k2, uint64_t seed,
                uint8_t* types, int32_t* counts, int32_t* sel_flat,
                int32_t* pool, int32_t* swaps) noexcept nogil:
    """Types then selections, consuming the stream in the documented order.
    Partial Fisher-Yates over the other n-1 nodes, with undo so the pool
    stays the identity permutation between nodes."""
    cdef uint64_t state = seed
    cdef int i, j, idx, count, pos = 0
    cdef int32_t tmp
    for i in range(n):
        types[i] = 1 if _next_double(&state) < mu else 2
    for i in range(n):
        pool[i] = i
    for i in range(n):
        count = k1 if types[i] == 1 else k2
        counts[i] = count
        tmp = pool[i]; pool[i] = pool[n - 1]; pool[n - 1] = tmp
        for j in range(count):
            idx = j + <int>_next_below(&state, <uint64_t>(n - 1 - j))
            tmp = pool[j]; pool[j] = pool[idx]; pool[idx] = tmp
            swaps[j] = idx
            sel_flat[pos] = pool[j]
            pos += 1
        for j in range(count - 1, -1, -1):
            idx = swaps[j]
            tmp = pool[j]; pool[j] = pool[idx]; pool[idx] = tmp
        tmp = pool[i]; pool[i] = pool[n - 1]; pool[n - 1] = tmp


cdef int64_t _build_adj(int n, const int32_t* counts, const int32_t* sel_flat,
                        int32_t* incoming, int32_t* moff, int32_t* mfill,
                        int32_t* madj, int32_t* aoff, int32_t* aadj,
                        int32_t* deg, int32_t* mark) noexcept nogil:
    """Undirected adjacency CSR from the directed picks; duplicate pair
    (mutual pick) collapsed via per-row stamps. Returns the edge count."""
    cdef int i, t, j, pos
    memset(incoming, 0, n * sizeof(int32_t))
    pos = 0
    for i in range(n):
        for t in range(counts[i]):
            incoming[sel_flat[pos + t]] += 1
        pos += counts[i]
    moff[0] = 0
    for i in range(n):
        moff[i + 1] = moff[i] + counts[i] + incoming[i]
        mfill[i] = moff[i]
    pos = 0
    for i in range(n):
        for t in range(counts[i]):
            j = sel_flat[pos + t]
            madj[mfill[i]] = j; mfill[i] += 1
            madj[mfill[j]] = i; mfill[j] += 1
        pos += counts[i]
    for i in range(n):
        mark[i] = -1
    pos = 0
    aoff[0] = 0
    for i in range(n):
        for t in range(moff[i], mfill[i]):
            j = madj[t]
            if mark[j] != i:
                mark[j] = i
                aadj[pos] = j
                pos += 1
        deg[i] = pos - aoff[i]
        aoff[i + 1] = pos
    return pos // 2


# ---------------------------------------------------------- connectivity ----

cdef bint _connected(int n, const int32_t* aoff, const int32_t* aadj,
                     int32_t* queue, uint8_t* seen) noexcept nogil:
    if n <= 1:
        return True
    cdef int head = 0, tail = 0, u, t, v, cnt = 1
    memset(seen, 0, n)
    queue[tail] = 0; tail += 1
    seen[0] = 1
    while head < tail:
        u = queue[head]; head += 1
        for t in range(aoff[u], aoff[u + 1]):
            v = aadj[t]
            if not seen[v]:
                seen[v] = 1
                cnt += 1
                queue[tail] = v; tail += 1
    return cnt == n


cdef bint _has_articulation(int n, const int32_t* aoff, const int32_t* aadj,
                            int32_t* disc, int32_t* low, int32_t* parent,
                            int32_t* itpos, int32_t* stack) noexcept nogil:
    """Iterative lowlink scan rooted at node 0; assumes connected input."""
    cdef int timer = 2, top, v, w, root_children = 0
    cdef bint advanced
    memset(disc, 0, n * sizeof(int32_t))
    disc[0] = 1; low[0] = 1
    parent[0] = -1
    itpos[0] = aoff[0]
    stack[0] = 0; top = 1
    while top > 0:
        v = stack[top - 1]
        advanced = False
        while itpos[v] < aoff[v + 1]:
            w = aadj[itpos[v]]
            itpos[v] += 1
            if w == parent[v]:
                continue
            if disc[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = timer; low[w] = timer; timer += 1
                parent[w] = v
                itpos[w] = aoff[w]
                stack[top] = w; top += 1
                advanced = True
                break
        if not advanced:
            top -= 1
            w = parent[v]
            if w == 0:
                root_children += 1
                if root_children > 1:
                    return True
            elif w != -1:
                if low[v] < low[w]:
                    low[w] = low[v]
                if low[v] >= disc[w]:
                    return True
    return False


cdef int _build_flow(int n, const int32_t* aoff, const int32_t* aadj,
                     int32_t* foff, int32_t* ffill, int32_t* fids,
                     int32_t* fto, int8_t* fcap_base) noexcept nogil:
    """Node-split unit-capacity digraph: node x becomes x_in = 2x and
    x_out = 2x+1; arcs appended in twin pairs so id ^ 1 is the residual
    partner. Returns the arc count 2n + 4E."""
    cdef int x, t, y, d, aid = 0, dn = 2 * n
    for x in range(n):
        d = aoff[x + 1] - aoff[x]
        foff[2 * x + 1] = 1 + d      # temporarily counts
        foff[2 * x] = 1 + d
    cdef int acc = 0, tmp
    for x in range(dn):
        tmp = foff[x]
        foff[x] = acc
        ffill[x] = acc
        acc += tmp
    foff[dn] = acc
    for x in range(n):
        fto[aid] = 2 * x + 1; fcap_base[aid] = 1
        fids[ffill[2 * x]] = aid; ffill[2 * x] += 1; aid += 1
        fto[aid] = 2 * x; fcap_base[aid] = 0
        fids[ffill[2 * x + 1]] = aid; ffill[2 * x + 1] += 1; aid += 1
    for x in range(n):
        for t in range(aoff[x], aoff[x + 1]):
            y = aadj[t]
            if y > x:
                fto[aid] = 2 * y; fcap_base[aid] = 1
                fids[ffill[2 * x + 1]] = aid; ffill[2 * x + 1] += 1; aid += 1
                fto[aid] = 2 * x + 1; fcap_base[aid] = 0
                fids[ffill[2 * y]] = aid; ffill[2 * y] += 1; aid += 1
                fto[aid] = 2 * x; fcap_base[aid] = 1
                fids[ffill[2 * y + 1]] = aid; ffill[2 * y + 1] += 1; aid += 1
                fto[aid] = 2 * y + 1; fcap_base[aid] = 0
                fids[ffill[2 * x]] = aid; ffill[2 * x] += 1; aid += 1
    return aid


cdef bint _maxflow_atleast(int s, int t, int k, const int32_t* foff,
                           const int32_t* fids, const int32_t* fto,
                           int8_t* fcap, int32_t* parent, int32_t* vis,
                           int32_t* visid, int32_t* queue) noexcept nogil:
    """Shortest-augmenting-path flow, early exit at the sink, capped at k."""
    cdef int flow = 0, head, tail, u, a, ai, v
    cdef bint found
    while flow < k:
        visid[0] += 1
        head = 0; tail = 0
        queue[tail] = s; tail += 1
        vis[s] = visid[0]
        found = False
        while head < tail and not found:
            u = queue[head]; head += 1
            for ai in range(foff[u], foff[u + 1]):
                a = fids[ai]
                if fcap[a] > 0:
                    v = fto[a]
                    if vis[v] != visid[0]:
                        vis[v] = visid[0]
                        parent[v] = a
                        if v == t:
                            found = True
                            break
                        queue[tail] = v; tail += 1
        if not found:
            return False
        v = t
        while v != s:
            a = parent[v]
            fcap[a] -= 1
            fcap[a ^ 1] += 1
            v = fto[a ^ 1]
        flow += 1
    return True


cdef bint _kconn_flows(int n, const int32_t* aoff, const int32_t* aadj,
                       const int32_t* deg, int k,
                       int32_t* foff, int32_t* ffill, int32_t* fids,
                       int32_t* fto, int8_t* fcap_base, int8_t* fcap,
                       int32_t* parent, int32_t* vis, int32_t* visid,
                       int32_t* fqueue, uint8_t* is_nbr,
                       uint8_t* row_mark) noexcept nogil:
    """Flow phase, valid once min degree >= k and the graph is connected:
    a cut of size < k either misses the min-degree vertex (separating it
    from a non-neighbor) or contains it (separating two of its neighbors
    that are non-adjacent)."""
    cdef int narcs, vstar = 0, i, u, t, x, y, ti, tj
    for i in range(1, n):
        if deg[i] < deg[vstar]:
            vstar = i
    narcs = _build_flow(n, aoff, aadj, foff, ffill, fids, fto, fcap_base)
    memset(is_nbr, 0, n)
    for t in range(aoff[vstar], aoff[vstar + 1]):
        is_nbr[aadj[t]] = 1
    for u in range(n):
        if u != vstar and not is_nbr[u]:
            memcpy(fcap, fcap_base, narcs)
            if not _maxflow_atleast(2 * vstar + 1, 2 * u, k, foff, fids, fto,
                                    fcap, parent, vis, visid, fqueue):
                return False
    for ti in range(aoff[vstar], aoff[vstar + 1]):
        x = aadj[ti]
        memset(row_mark, 0, n)
        for t in range(aoff[x], aoff[x + 1]):
            row_mark[aadj[t]] = 1
        for tj in range(ti + 1, aoff[vstar + 1]):
            y = aadj[tj]
            if not row_mark[y]:
                memcpy(fcap, fcap_base, narcs)
                if not _maxflow_atleast(2 * x + 1, 2 * y, k, foff, fids, fto,
                                        fcap, parent, vis, visid, fqueue):
                    return False
    return True


cdef bint _kconn(int n, const int32_t* aoff, const int32_t* aadj,
                 const int32_t* deg, int k,
                 int32_t* queue, uint8_t* seen,
                 int32_t* disc, int32_t* low, int32_t* parent_a,
                 int32_t* itpos, int32_t* stack,
                 int32_t* foff, int32_t* ffill, int32_t* fids,
                 int32_t* fto, int8_t* fcap_base, int8_t* fcap,
                 int32_t* fparent, int32_t* vis, int32_t* visid,
                 int32_t* fqueue, uint8_t* is_nbr,
                 uint8_t* row_mark) noexcept nogil:
    cdef int i, mind
    if n <= k:
        return False
    mind = deg[0]
    for i in range(1, n):
        if deg[i] < mind:
            mind = deg[i]
    if mind < k:
        return False
    if not _connected(n, aoff, aadj, queue, seen):
        return False
    if k == 1:
        return True
    if k == 2:
        return not _has_articulation(n, aoff, aadj, disc, low, parent_a,
                                     itpos, stack)
    return _kconn_flows(n, aoff, aadj, deg, k, foff, ffill, fids, fto,
                        fcap_base, fcap, fparent, vis, visid, fqueue,
                        is_nbr, row_mark)


# ------------------------------------------------------- Python surface ----

def generate_selections(int n, double mu, int k1, int k2, seed):
    """Types (1/2) and sorted selection lists for one instance."""
    cdef uint64_t s = <uint64_t>(int(seed) & 0xFFFFFFFFFFFFFFFF)
    cdef int kmax = k1 if k1 > k2 else k2
    types_a = np.empty(n, dtype=np.uint8)
    counts_a = np.empty(n, dtype=np.int32)
    sel_a = np.empty(max(1, n * kmax), dtype=np.int32)
    pool_a = np.empty(n, dtype=np.int32)
    swaps_a = np.empty(max(1, kmax), dtype=np.int32)
    cdef uint8_t[::1] types_v = types_a
    cdef int32_t[::1] counts_v = counts_a
    cdef int32_t[::1] sel_v = sel_a
    cdef int32_t[::1] pool_v = pool_a
    cdef int32_t[::1] swaps_v = swaps_a
    _draw(n, mu, k1, k2, s, &types_v[0], &counts_v[0], &sel_v[0],
          &pool_v[0], &swaps_v[0])
    types = [int(t) for t in types_a]
    selections = []
    pos = 0
    for i in range(n):
        c = int(counts_a[i])
        selections.append(sorted(int(x) for x in sel_a[pos:pos + c]))
        pos += c
    return types, selections


cdef class _Workspace:
    """Scratch buffers reused across trials of one run_trials call."""
    cdef object arrays
    cdef uint8_t* types
    cdef int32_t* counts
    cdef int32_t* sel
    cdef int32_t* pool
    cdef int32_t* swaps
    cdef int32_t* incoming
    cdef int32_t* moff
    cdef int32_t* mfill
    cdef int32_t* madj
    cdef int32_t* aoff
    cdef int32_t* aadj
    cdef int32_t* deg
    cdef int32_t* mark
    cdef int32_t* queue
    cdef uint8_t* seen
    cdef int32_t* disc
    cdef int32_t* low
    cdef int32_t* parent_a
    cdef int32_t* itpos
    cdef int32_t* stack
    cdef int32_t* foff
    cdef int32_t* ffill
    cdef int32_t* fids
    cdef int32_t* fto
    cdef int8_t* fcap_base
    cdef int8_t* fcap
    cdef int32_t* fparent
    cdef int32_t* vis
    cdef int32_t* visid
    cdef int32_t* fqueue
    cdef uint8_t* is_nbr
    cdef uint8_t* row_mark

    def __init__(self, int n, int kmax):
        cdef int64_t picks = <int64_t>n * kmax
        cdef int64_t narcs = 2 * n + 4 * picks
        i32 = lambda size: np.zeros(max(1, size), dtype=np.int32)
        i8 = lambda size: np.zeros(max(1, size), dtype=np.int8)
        u8 = lambda size: np.zeros(max(1, size), dtype=np.uint8)
        self.arrays = dict(
            types=u8(n), counts=i32(n), sel=i32(picks), pool=i32(n),
            swaps=i32(kmax), incoming=i32(n), moff=i32(n + 1), mfill=i32(n),
            madj=i32(2 * picks), aoff=i32(n + 1), aadj=i32(2 * picks),
            deg=i32(n), mark=i32(n), queue=i32(n), seen=u8(n), disc=i32(n),
            low=i32(n), parent_a=i32(n), itpos=i32(n), stack=i32(n),
            foff=i32(2 * n + 1), ffill=i32(2 * n), fids=i32(narcs),
            fto=i32(narcs), fcap_base=i8(narcs), fcap=i8(narcs),
            fparent=i32(2 * n), vis=i32(2 * n), visid=i32(1),
            fqueue=i32(2 * n), is_nbr=u8(n), row_mark=u8(n),
        )
        a = self.arrays
        cdef uint8_t[::1] mv_u8
        cdef int8_t[::1] mv_i8
        cdef int32_t[::1] mv_i32
        mv_u8 = a["types"]; self.types = &mv_u8[0]
        mv_i32 = a["counts"]; self.counts = &mv_i32[0]
        mv_i32 = a["sel"]; self.sel = &mv_i32[0]
        mv_i32 = a["pool"]; self.pool = &mv_i32[0]
        mv_i32 = a["swaps"]; self.swaps = &mv_i32[0]
        mv_i32 = a["incoming"]; self.incoming = &mv_i32[0]
        mv_i32 = a["moff"]; self.moff = &mv_i32[0]
        mv_i32 = a["mfill"]; self.mfill = &mv_i32[0]
        mv_i32 = a["madj"]; self.madj = &mv_i32[0]
        mv_i32 = a["aoff"]; self.aoff = &mv_i32[0]
        mv_i32 = a["aadj"]; self.aadj = &mv_i32[0]
        mv_i32 = a["deg"]; self.deg = &mv_i32[0]
        mv_i32 = a["mark"]; self.mark = &mv_i32[0]
        mv_i32 = a["queue"]; self.queue = &mv_i32[0]
        mv_u8 = a["seen"]; self.seen = &mv_u8[0]
        mv_i32 = a["disc"]; self.disc = &mv_i32[0]
        mv_i32 = a["low"]; self.low = &mv_i32[0]
        mv_i32 = a["parent_a"]; self.parent_a = &mv_i32[0]
        mv_i32 = a["itpos"]; self.itpos = &mv_i32[0]
        mv_i32 = a["stack"]; self.stack = &mv_i32[0]
        mv_i32 = a["foff"]; self.foff = &mv_i32[0]
        mv_i32 = a["ffill"]; self.ffill = &mv_i32[0]
        mv_i32 = a["fids"]; self.fids = &mv_i32[0]
        mv_i32 = a["fto"]; self.fto = &mv_i32[0]
        mv_i8 = a["fcap_base"]; self.fcap_base = &mv_i8[0]
        mv_i8 = a["fcap"]; self.fcap = &mv_i8[0]
        mv_i32 = a["fparent"]; self.fparent = &mv_i32[0]
        mv_i32 = a["vis"]; self.vis = &mv_i32[0]
        mv_i32 = a["visid"]; self.visid = &mv_i32[0]
        mv_i32 = a["fqueue"]; self.fqueue = &mv_i32[0]
        mv_u8 = a["is_nbr"]; self.is_nbr = &mv_u8[0]
        mv_u8 = a["row_mark"]; self.row_mark = &mv_u8[0]


def run_trials(int n, double mu, int k1, int k2, int k, seeds):
    """Monte-Carlo loop: counts of {min degree >= k} and {k-connected} plus
    the sum and sum of squares of per-trial edge counts. The connectivity
    check runs only when min degree >= k (a necessary condition)."""
    seeds_arr = np.ascontiguousarray(seeds, dtype=np.uint64)
    cdef Py_ssize_t trials = seeds_arr.shape[0]
    if trials == 0:
        return 0, 0, 0, 0
    cdef const uint64_t[::1] sv = seeds_arr
    cdef int kmax = k1 if k1 > k2 else k2
    ws = _Workspace(n, kmax)
    cdef _Workspace w = ws
    cdef int64_t mindeg_hits = 0, kconn_hits = 0, esum = 0, esq = 0, e
    cdef Py_ssize_t ti
    cdef int i, mind
    with nogil:
        for ti in range(trials):
            _draw(n, mu, k1, k2, sv[ti], w.types, w.counts, w.sel, w.pool,
                  w.swaps)
            e = _build_adj(n, w.counts, w.sel, w.incoming, w.moff, w.mfill,
                           w.madj, w.aoff, w.aadj, w.deg, w.mark)
            esum += e
            esq += e * e
            mind = w.deg[0]
            for i in range(1, n):
                if w.deg[i] < mind:
                    mind = w.deg[i]
            if mind >= k:
                mindeg_hits += 1
                if _kconn(n, w.aoff, w.aadj, w.deg, k, w.queue, w.seen,
                          w.disc, w.low, w.parent_a, w.itpos, w.stack,
                          w.foff, w.ffill, w.fids, w.fto, w.fcap_base,
                          w.fcap, w.fparent, w.vis, w.visid, w.fqueue,
                          w.is_nbr, w.row_mark):
                    kconn_hits += 1
    return int(mindeg_hits), int(kconn_hits), int(esum), int(esq)


def connected_csr(int n, indptr, indices):
    if n <= 1:
        return True
    ip = np.ascontiguousarray(indptr, dtype=np.int32)
    ix = np.ascontiguousarray(indices, dtype=np.int32)
    if ix.shape[0] == 0:
        return False
    cdef const int32_t[::1] ipv = ip
    cdef const int32_t[::1] ixv = ix
    queue_a = np.empty(n, dtype=np.int32)
    seen_a = np.empty(n, dtype=np.uint8)
    cdef int32_t[::1] qv = queue_a
    cdef uint8_t[::1] sv = seen_a
    return bool(_connected(n, &ipv[0], &ixv[0], &qv[0], &sv[0]))


def kconn_csr(int n, indptr, indices, int k):
    """k-vertex-connectivity of an arbitrary CSR graph."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n <= k:
        return False
    ip = np.ascontiguousarray(indptr, dtype=np.int32)
    ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef const int32_t[::1] ipv = ip
    deg_a = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] degv = deg_a
    cdef int i, mind
    for i in range(n):
        degv[i] = ipv[i + 1] - ipv[i]
    mind = degv[0]
    for i in range(1, n):
        if degv[i] < mind:
            mind = degv[i]
    if mind < k:
        return False
    cdef const int32_t[::1] ixv = ix
    # scratch sized from the actual adjacency
    cdef int64_t nnz = ix.shape[0]
    cdef int64_t narcs = 2 * n + 2 * nnz
    queue_a = np.zeros(n, dtype=np.int32)
    seen_a = np.zeros(n, dtype=np.uint8)
    disc_a = np.zeros(n, dtype=np.int32)
    low_a = np.zeros(n, dtype=np.int32)
    par_a = np.zeros(n, dtype=np.int32)
    itp_a = np.zeros(n, dtype=np.int32)
    stk_a = np.zeros(n, dtype=np.int32)
    foff_a = np.zeros(2 * n + 1, dtype=np.int32)
    ffill_a = np.zeros(2 * n, dtype=np.int32)
    fids_a = np.zeros(max(1, narcs), dtype=np.int32)
    fto_a = np.zeros(max(1, narcs), dtype=np.int32)
    fcb_a = np.zeros(max(1, narcs), dtype=np.int8)
    fc_a = np.zeros(max(1, narcs), dtype=np.int8)
    fpar_a = np.zeros(2 * n, dtype=np.int32)
    vis_a = np.zeros(2 * n, dtype=np.int32)
    visid_a = np.zeros(1, dtype=np.int32)
    fq_a = np.zeros(2 * n, dtype=np.int32)
    isn_a = np.zeros(n, dtype=np.uint8)
    rm_a = np.zeros(n, dtype=np.uint8)
    cdef int32_t[::1] qv = queue_a
    cdef uint8_t[::1] sev = seen_a
    cdef int32_t[::1] dv = disc_a
    cdef int32_t[::1] lv = low_a
    cdef int32_t[::1] pv = par_a
    cdef int32_t[::1] itv = itp_a
    cdef int32_t[::1] stv = stk_a
    cdef int32_t[::1] fov = foff_a
    cdef int32_t[::1] ffv = ffill_a
    cdef int32_t[::1] fiv = fids_a
    cdef int32_t[::1] ftv = fto_a
    cdef int8_t[::1] fbv = fcb_a
    cdef int8_t[::1] fcv = fc_a
    cdef int32_t[::1] fpv = fpar_a
    cdef int32_t[::1] vv = vis_a
    cdef int32_t[::1] viv = visid_a
    cdef int32_t[::1] fqv = fq_a
    cdef uint8_t[::1] inv = isn_a
    cdef uint8_t[::1] rmv = rm_a
    return bool(_kconn(n, &ipv[0], &ixv[0], &degv[0], k, &qv[0], &sev[0],
                       &dv[0], &lv[0], &pv[0], &itv[0], &stv[0], &fov[0],
                       &ffv[0], &fiv[0], &ftv[0], &fbv[0], &fcv[0], &fpv[0],
                       &vv[0], &viv[0], &fqv[0], &inv[0], &rmv[0]))


# ------------------------------------------------------- enumeration ----

cdef inline bint _mask_conn(const uint32_t* adjm, uint32_t alive) noexcept nogil:
    cdef uint32_t start = alive & (~alive + 1)
    cdef uint32_t reach = start, frontier = start, nxt, m
    cdef int b
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = __builtin_ctz(m)
            nxt |= adjm[b]
            m &= m - 1
        frontier = nxt & alive & (~reach)
        reach |= frontier
    return reach == alive


cdef void _enum_mask(int n, int64_t total, const uint32_t** rows,
                     const int64_t* sizes, int kconn_max,
                     const uint32_t* rem_flat, const int64_t* rem_off,
                     int64_t* deg_row, int64_t* joint_row,
                     int64_t* count_row, int64_t* mind_row,
                     int64_t* kconn_row, int64_t* idx, uint32_t* adjm,
                     int32_t* degs) noexcept nogil:
    cdef int64_t c, t
    cdef int i, b, d0, mind, kk
    cdef uint32_t m, full = (<uint32_t>1 << n) - 1
    cdef bint ok
    for i in range(n):
        idx[i] = 0
    for c in range(total):
        for i in range(n):
            adjm[i] = 0
        for i in range(n):
            m = rows[i][idx[i]]
            adjm[i] |= m
            while m:
                b = __builtin_ctz(m)
                adjm[b] |= (<uint32_t>1) << i
                m &= m - 1
        mind = n
        for i in range(n):
            degs[i] = __builtin_popcount(adjm[i])
            if degs[i] < mind:
                mind = degs[i]
        d0 = degs[0]
        deg_row[d0] += 1
        if degs[1] == d0:
            joint_row[d0] += 1
        for i in range(n):
            count_row[degs[i]] += 1
        mind_row[mind] += 1
        for kk in range(1, kconn_max + 1):
            if n <= kk:
                break
            ok = True
            for t in range(rem_off[kk - 1], rem_off[kk]):
                if not _mask_conn(adjm, full ^ rem_flat[t]):
                    ok = False
                    break
            if not ok:
                break
            kconn_row[kk - 1] += 1
        i = 0
        while i < n:
            idx[i] += 1
            if idx[i] < sizes[i]:
                break
            idx[i] = 0
            i += 1


def enum_profile(int n, int k1, int k2, int kconn_max=0):
    """Exact per-type-assignment event counts over every selection
    combination; see the pure backend for the output contract."""
    if not 2 <= n <= 16:
        raise ValueError(f"enumeration supports 2 <= n <= 16, got {n}")
    cdef int nmasks = 1 << n
    c1 = comb(n - 1, k1)
    c2 = comb(n - 1, k2)
    sub1_a = np.zeros((n, max(1, c1)), dtype=np.uint32)
    sub2_a = np.zeros((n, max(1, c2)), dtype=np.uint32)
    for i in range(n):
        cands = [j for j in range(n) if j != i]
        for col, cset in enumerate(combinations(cands, k1)):
            sub1_a[i, col] = sum(1 << x for x in cset)
        for col, cset in enumerate(combinations(cands, k2)):
            sub2_a[i, col] = sum(1 << x for x in cset)

    rem_masks = []
    rem_off_list = [0]
    for kk in range(1, kconn_max + 1):
        rem_masks.extend(
            sum(1 << v for v in c) for c in combinations(range(n), kk - 1)
        )
        rem_off_list.append(len(rem_masks))
    rem_flat_a = np.asarray(rem_masks if rem_masks else [0], dtype=np.uint32)
    rem_off_a = np.asarray(rem_off_list, dtype=np.int64)

    totals = np.zeros(nmasks, dtype=np.int64)
    deg_v0 = np.zeros((nmasks, n), dtype=np.int64)
    joint01 = np.zeros((nmasks, n), dtype=np.int64)
    degree_count = np.zeros((nmasks, n), dtype=np.int64)
    mindeg = np.zeros((nmasks, n), dtype=np.int64)
    kconn = np.zeros((nmasks, max(kconn_max, 1)), dtype=np.int64)

    cdef const uint32_t[:, ::1] s1 = sub1_a
    cdef const uint32_t[:, ::1] s2 = sub2_a
    cdef const uint32_t[::1] remv = rem_flat_a
    cdef const int64_t[::1] remoff = rem_off_a
    cdef int64_t[::1] totv = totals
    cdef int64_t[:, ::1] degv = deg_v0
    cdef int64_t[:, ::1] jv = joint01
    cdef int64_t[:, ::1] cv = degree_count
    cdef int64_t[:, ::1] mv = mindeg
    cdef int64_t[:, ::1] kv = kconn

    sizes_a = np.zeros(n, dtype=np.int64)
    idx_a = np.zeros(n, dtype=np.int64)
    adjm_a = np.zeros(n, dtype=np.uint32)
    degs_a = np.zeros(n, dtype=np.int32)
    cdef int64_t[::1] sizes = sizes_a
    cdef int64_t[::1] idxv = idx_a
    cdef uint32_t[::1] adjmv = adjm_a
    cdef int32_t[::1] degsv = degs_a

    cdef const uint32_t** rows = <const uint32_t**>malloc(n * sizeof(void*))
    if rows == NULL:
        raise MemoryError
    cdef int tmask, i2
    cdef int64_t total
    try:
        for tmask in range(nmasks):
            total = 1
            for i2 in range(n):
                if (tmask >> i2) & 1:
                    rows[i2] = &s1[i2, 0]
                    sizes[i2] = c1
                else:
                    rows[i2] = &s2[i2, 0]
                    sizes[i2] = c2
                total *= sizes[i2]
            totv[tmask] = total
            with nogil:
                _enum_mask(n, total, rows, &sizes[0], kconn_max, &remv[0],
                           &remoff[0], &degv[tmask, 0], &jv[tmask, 0],
                           &cv[tmask, 0], &mv[tmask, 0], &kv[tmask, 0],
                           &idxv[0], &adjmv[0], &degsv[0])
    finally:
        free(rows)
    return {
        "totals": totals,
        "deg_v0": deg_v0,
        "joint01": joint01,
        "degree_count": degree_count,
        "mindeg": mindeg,
        "kconn": kconn[:, :kconn_max] if kconn_max > 0 else kconn[:, :0],
    }
