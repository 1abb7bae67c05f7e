"""Heterogeneous pairwise scheme and the induced inhomogeneous random K-out graph.

Each of ``n`` nodes is independently labeled type-1 with probability ``mu``
(else type-2). A type-1 node selects ``k1`` peers uniformly at random, a
type-2 node selects ``k2``; one pairwise key is assigned per selected
unordered pair, and two nodes are adjacent exactly when they share a key,
i.e. when either selected the other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from . import _backend
from .rng import SplitMix64


class ParamError(ValueError):
    """A model parameter violates its documented bounds."""


class NodeType(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class ModelParams:
    """Scheme parameters.

    Attributes:
        n: node count, at least 2.
        mu: probability that a node is type-1, in [0, 1].
        k2: selections made by each type-2 node.
        k1: selections made by each type-1 node (default 1).
    """

    n: int
    mu: float
    k2: int
    k1: int = 1

    @property
    def in_regime(self) -> bool:
        """True when parameters match the analyzed regime:
        0 < mu < 1, k1 = 1 and 2 <= k2 < n. Generation works outside the
        regime (homogeneous limits mu = 0 and mu = 1 included); the
        closed-form analytics assume the regime."""
        return 0.0 < self.mu < 1.0 and self.k1 == 1 and 2 <= self.k2 < self.n

    def selections_of(self, t: NodeType) -> int:
        return self.k1 if t is NodeType.TYPE1 else self.k2


def validate_params(p: ModelParams) -> ModelParams:
    """Check every parameter bound, reporting the first violation.

    Returns ``p`` unchanged when valid; raises :class:`ParamError` naming
    the violated bound and the offending value otherwise.
    """
    if not isinstance(p.n, int) or isinstance(p.n, bool):
        raise ParamError(f"n must be an integer, got {p.n!r}")
    if p.n < 2:
        raise ParamError(f"n >= 2 violated (n={p.n})")
    if not 0.0 <= p.mu <= 1.0:
        raise ParamError(f"0 <= mu <= 1 violated (mu={p.mu})")
    for name, val in (("k1", p.k1), ("k2", p.k2)):
        if not isinstance(val, int) or isinstance(val, bool):
            raise ParamError(f"{name} must be an integer, got {val!r}")
    if p.k1 < 1:
        raise ParamError(f"k1 >= 1 violated (k1={p.k1})")
    if p.k1 > p.n - 1:
        raise ParamError(f"k1 <= n-1 violated (k1={p.k1}, n={p.n})")
    if p.k2 < 1:
        raise ParamError(f"k2 >= 1 violated (k2={p.k2})")
    if p.k2 > p.n - 1:
        raise ParamError(f"k2 <= n-1 violated (k2={p.k2}, n={p.n})")
    if p.k1 > p.k2:
        raise ParamError(f"k1 <= k2 violated (k1={p.k1}, k2={p.k2})")
    return p


@dataclass(frozen=True)
class SelectionTable:
    """Per-node type and the set of selected peers (directed out-choices)."""

    types: tuple[NodeType, ...]
    selections: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.types)
        if len(self.selections) != n:
            raise ValueError("types and selections must have equal length")
        for i, sel in enumerate(self.selections):
            if i in sel:
                raise ValueError(f"node {i} selects itself")
            for j in sel:
                if not 0 <= j < n:
                    raise ValueError(f"node {i} selects out-of-range peer {j}")

    @property
    def n(self) -> int:
        return len(self.types)


@dataclass(frozen=True)
class KeyRingTable:
    """Pairwise keys: ``rings[i]`` is node i's key-id set, and
    ``pair_of_key[kid]`` the unordered node pair holding key ``kid``.

    Key ids are dense integers 0..m-1 assigned in sorted pair order, so the
    table is a deterministic function of the selection table.
    """

    rings: tuple[frozenset[int], ...]
    pair_of_key: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.rings)

    @property
    def num_keys(self) -> int:
        return len(self.pair_of_key)


class Graph:
    """Simple undirected graph on nodes 0..n-1.

    Edges are stored canonically as a sorted tuple of (i, j) pairs with
    i < j; adjacency sets support degree and neighbor queries.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("n must be nonnegative")
        canon = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            canon.add((i, j) if i < j else (j, i))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, i: int) -> frozenset[int]:
        return self._adj[i]

    def degree(self, i: int) -> int:
        return len(self._adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def nodes(self) -> Iterator[int]:
        return iter(range(self.n))

    def to_csr(self) -> tuple[list[int], list[int]]:
        """Adjacency in compressed form (indptr, indices), neighbors sorted."""
        indptr = [0]
        indices: list[int] = []
        for i in range(self.n):
            indices.extend(sorted(self._adj[i]))
            indptr.append(len(indices))
        return indptr, indices

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def draw_selection_table(p: ModelParams, stream: SplitMix64) -> SelectionTable:
    """Draw types and selections from a random stream.

    This is the reference generator: types are drawn first (one uniform per
    node), then each node's selection set by a partial Fisher-Yates shuffle
    over the other n-1 nodes, exactly uniform over size-K subsets. The
    compiled backend reproduces this stream consumption bit for bit.
    """
    validate_params(p)
    n = p.n
    types = tuple(
        NodeType.TYPE1 if stream.next_double() < p.mu else NodeType.TYPE2
        for _ in range(n)
    )
    pool = list(range(n))
    selections = []
    for i in range(n):
        count = p.selections_of(types[i])
        # Swap node i out of the candidate prefix, shuffle K slots, undo.
        pool[i], pool[n - 1] = pool[n - 1], pool[i]
        swaps = []
        for j in range(count):
            idx = j + stream.next_below(n - 1 - j)
            pool[j], pool[idx] = pool[idx], pool[j]
            swaps.append((j, idx))
        selections.append(frozenset(pool[:count]))
        for j, idx in reversed(swaps):
            pool[j], pool[idx] = pool[idx], pool[j]
        pool[i], pool[n - 1] = pool[n - 1], pool[i]
    return SelectionTable(types=types, selections=tuple(selections))


def build_graph(t: SelectionTable) -> Graph:
    """Induced graph: {i, j} is an edge iff either node selected the other."""
    edges = set()
    for i, sel in enumerate(t.selections):
        for j in sel:
            edges.add((i, j) if i < j else (j, i))
    return Graph(t.n, edges)


def assign_keyrings(t: SelectionTable) -> KeyRingTable:
    """One fresh key per unordered selected pair, stored at both endpoints."""
    pairs = set()
    for i, sel in enumerate(t.selections):
        for j in sel:
            pairs.add((i, j) if i < j else (j, i))
    pair_of_key = tuple(sorted(pairs))
    rings: list[set[int]] = [set() for _ in range(t.n)]
    for kid, (i, j) in enumerate(pair_of_key):
        rings[i].add(kid)
        rings[j].add(kid)
    return KeyRingTable(
        rings=tuple(frozenset(r) for r in rings), pair_of_key=pair_of_key
    )


def shared_key_graph(r: KeyRingTable) -> Graph:
    """Graph with an edge wherever two rings share at least one key.

    Computed by pairwise ring intersection, deliberately not reusing the
    key-to-pair index, so it serves as an independent check that key
    assignment and graph construction agree.
    """
    n = r.n
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if r.rings[i] & r.rings[j]
    ]
    return Graph(n, edges)


def generate(
    p: ModelParams, seed: int
) -> tuple[SelectionTable, KeyRingTable, Graph]:
    """Deterministically generate one instance from (params, seed).

    Same (p, seed) gives bit-identical output on every platform and backend.
    """
    validate_params(p)
    types_raw, sels_raw = _backend.kernel.generate_selections(
        p.n, p.mu, p.k1, p.k2, seed
    )
    table = SelectionTable(
        types=tuple(NodeType(t) for t in types_raw),
        selections=tuple(frozenset(s) for s in sels_raw),
    )
    return table, assign_keyrings(table), build_graph(table)


# -- edge-list and DOT formats (CLI import/export) --------------------------

EDGELIST_HEADER_TAG = "n"


def write_edgelist(g: Graph, fp: IO[str]) -> None:
    """Text edge list: header line ``n <node-count>``, then one sorted
    ``i j`` pair per line with i < j."""
    fp.write(f"{EDGELIST_HEADER_TAG} {g.n}\n")
    for i, j in g.edges:
        fp.write(f"{i} {j}\n")


def read_edgelist(fp: IO[str]) -> Graph:
    header = fp.readline().split()
    if len(header) != 2 or header[0] != EDGELIST_HEADER_TAG:
        raise ValueError("edge list must start with a 'n <node-count>' header")
    n = int(header[1])
    edges = []
    for lineno, line in enumerate(fp, start=2):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def write_dot(g: Graph, fp: IO[str]) -> None:
    """Graphviz DOT export; declares every node so isolated ones survive."""
    fp.write("graph G {\n")
    for i in range(g.n):
        fp.write(f"  {i};\n")
    for i, j in g.edges:
        fp.write(f"  {i} -- {j};\n")
    fp.write("}\n")
