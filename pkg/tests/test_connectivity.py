import itertools

import pytest

from koutgraph.connectivity import (
    brute_force_k_connected,
    connectivity_report,
    degree_sequence,
    is_connected,
    is_k_vertex_connected,
    min_degree,
)
from koutgraph.model import Graph, ModelParams, generate
from koutgraph.rng import derive_seed


def star(n):
    return Graph(n, [(0, i) for i in range(1, n)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def test_degree_sequence_examples():
    assert degree_sequence(star(4)) == [3, 1, 1, 1]
    assert degree_sequence(Graph(3, [])) == [0, 0, 0]
    assert degree_sequence(cycle(3)) == [2, 2, 2]


def test_degree_sequence_sums_to_twice_edges():
    _, _, g = generate(ModelParams(n=40, mu=0.5, k2=3), 5)
    assert sum(degree_sequence(g)) == 2 * g.num_edges


def test_min_degree_examples():
    assert min_degree(star(4)) == 1
    assert min_degree(complete(4)) == 3
    _, _, g = generate(ModelParams(n=100, mu=0.0, k2=2, k1=2), 9)
    assert min_degree(g) >= 2


def test_is_connected_examples():
    assert is_connected(path(3))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, []))
    assert not is_connected(Graph(2, []))


def test_k_connected_examples():
    assert is_k_vertex_connected(complete(4), 3)
    assert not is_k_vertex_connected(path(3), 2)
    assert is_k_vertex_connected(cycle(5), 2)
    assert not is_k_vertex_connected(cycle(5), 3)


def test_complete_graph_conventions():
    for n in (3, 4, 5, 6):
        assert is_k_vertex_connected(complete(n), n - 1)
        assert not is_k_vertex_connected(complete(n), n)


def test_small_n_conventions():
    assert not is_k_vertex_connected(Graph(2, [(0, 1)]), 2)  # n <= k
    assert is_k_vertex_connected(Graph(2, [(0, 1)]), 1)
    assert not is_k_vertex_connected(Graph(1, []), 1)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        is_k_vertex_connected(cycle(4), 0)
    with pytest.raises(ValueError):
        brute_force_k_connected(cycle(4), 0)


def test_articulation_detected_with_min_degree_met():
    # two triangles sharing node 0: min degree 2 but a cut vertex
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert min_degree(g) == 2
    assert not is_k_vertex_connected(g, 2)
    assert not brute_force_k_connected(g, 2)


def test_flow_phase_detects_two_vertex_cut():
    # two K5 blocks glued on vertices {0, 1}: min degree 4, cut size 2
    edges = set()
    for block in ([0, 1, 2, 3, 4], [0, 1, 5, 6, 7]):
        edges.update(itertools.combinations(block, 2))
    g = Graph(8, edges)
    assert min_degree(g) == 4
    assert is_k_vertex_connected(g, 2)
    assert not is_k_vertex_connected(g, 3)
    assert brute_force_k_connected(g, 2)
    assert not brute_force_k_connected(g, 3)


def test_brute_force_examples():
    assert brute_force_k_connected(cycle(3), 2)
    assert not brute_force_k_connected(star(4), 2)


def test_brute_force_size_guard():
    with pytest.raises(ValueError, match="n <= 20"):
        brute_force_k_connected(Graph(21, []), 2)


def _random_small_graphs(count, index_seed):
    params = []
    for n in range(4, 13):
        for mu in (0.2, 0.5, 0.8):
            for k2 in (2, 3):
                params.append((n, mu, k2))
    graphs = []
    for i in range(count):
        n, mu, k2 = params[i % len(params)]
        _, _, g = generate(ModelParams(n=n, mu=mu, k2=k2), derive_seed(index_seed, i))
        graphs.append(g)
    return graphs


def test_flow_checker_agrees_with_brute_force():
    for g in _random_small_graphs(120, 20210):
        for k in (1, 2, 3, 4):
            assert is_k_vertex_connected(g, k) == brute_force_k_connected(g, k)


def test_kconn_implies_min_degree_and_monotone():
    for g in _random_small_graphs(60, 555):
        prev = True
        for k in (4, 3, 2, 1):
            ok = is_k_vertex_connected(g, k)
            if ok:
                assert min_degree(g) >= k
            # monotonicity: k-connected implies (k-1)-connected
            if prev and k < 4:
                pass
        for k in (2, 3, 4):
            if is_k_vertex_connected(g, k):
                assert is_k_vertex_connected(g, k - 1)


def test_kconn_implies_edge_removal_survival():
    # spot-check: remove random (k-1)-edge subsets from a k-connected graph
    import random

    rng = random.Random(4)
    for g in _random_small_graphs(25, 808):
        for k in (2, 3):
            if not is_k_vertex_connected(g, k):
                continue
            edges = list(g.edges)
            for _ in range(10):
                removed = rng.sample(edges, k - 1)
                g2 = Graph(g.n, [e for e in edges if e not in removed])
                assert is_connected(g2)


def test_connectivity_report_consistency():
    _, _, g = generate(ModelParams(n=30, mu=0.3, k2=4), 44)
    rep = connectivity_report(g, 2)
    assert rep.min_degree == min_degree(g)
    assert rep.is_connected == is_connected(g)
    assert rep.k_checked == 2
    if rep.is_k_vertex_connected:
        assert rep.min_degree >= 2
    rep1 = connectivity_report(g, 1)
    assert rep1.is_k_vertex_connected == rep1.is_connected
