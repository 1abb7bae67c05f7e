import math

import pytest

from koutgraph import analytics as an
from koutgraph import oracle as orc
from koutgraph.experiment import run_point
from koutgraph.model import ModelParams, NodeType
from koutgraph.oracle import (
    BudgetError,
    EnumerationBudget,
    ZeroProbabilityCondition,
    enumerate_event_prob,
    enumerate_joint_degree_prob,
    enumerate_kconn_prob,
    enumerate_min_degree_prob,
    weighted_outcome_count,
)


def test_hand_enumeration_min_degree():
    # 3 type-1 nodes each picking one peer: 2 of 8 pick patterns close the
    # triangle, so P[min degree >= 2] = 0.25
    p = ModelParams(n=3, mu=1.0, k2=2)
    assert enumerate_min_degree_prob(p, 2) == 0.25


def test_hand_enumeration_joint_degree():
    p = ModelParams(n=3, mu=1.0, k2=2)
    assert enumerate_joint_degree_prob(p, 2) == 0.25


def test_degree_pmf_oracle_value():
    p = ModelParams(n=4, mu=0.5, k2=2)
    pmf = orc.enumerate_degree_pmf(p, NodeType.TYPE1)
    assert pmf[1] == pytest.approx(0.25, abs=1e-12)
    assert math.fsum(pmf) == pytest.approx(1.0, abs=1e-12)


def test_event_prob_true_is_one():
    p = ModelParams(n=4, mu=0.5, k2=2)
    assert enumerate_event_prob(p, lambda t, g: True) == pytest.approx(1.0, abs=1e-12)


def test_event_prob_conditional_matches_specialized():
    p = ModelParams(n=4, mu=0.5, k2=2)
    generic = enumerate_event_prob(
        p,
        lambda t, g: g.degree(0) == 1,
        condition=lambda t, g: t.types[0] is NodeType.TYPE1,
    )
    assert generic == pytest.approx(orc.enumerate_degree_pmf(p, NodeType.TYPE1)[1], abs=1e-12)


def test_event_prob_exchangeable_under_relabeling():
    p = ModelParams(n=4, mu=0.3, k2=2)
    a = enumerate_event_prob(p, lambda t, g: g.degree(0) == 2)
    b = enumerate_event_prob(p, lambda t, g: g.degree(2) == 2)
    assert a == pytest.approx(b, abs=1e-12)


def test_zero_probability_condition_raises():
    p = ModelParams(n=4, mu=0.5, k2=2)
    with pytest.raises(ZeroProbabilityCondition):
        enumerate_event_prob(
            p, lambda t, g: True, condition=lambda t, g: g.degree(0) > 10
        )


def test_kconn_le_min_degree_prob():
    for mu in (0.25, 0.75):
        p = ModelParams(n=5, mu=mu, k2=2)
        for k in (1, 2, 3):
            assert enumerate_kconn_prob(p, k) <= enumerate_min_degree_prob(p, k) + 1e-15


def test_min_degree_prob_guaranteed_by_selection_count():
    p = ModelParams(n=4, mu=0.0, k2=2, k1=2)
    assert enumerate_min_degree_prob(p, 2) == pytest.approx(1.0, abs=1e-15)


def test_budget_rejects_large_n():
    with pytest.raises(BudgetError):
        enumerate_min_degree_prob(ModelParams(n=7, mu=0.5, k2=2), 2)


def test_budget_rejects_outcome_explosion():
    tight = EnumerationBudget(max_n=6, max_outcomes=1000)
    with pytest.raises(BudgetError):
        enumerate_min_degree_prob(ModelParams(n=6, mu=0.5, k2=2), 2, budget=tight)


def test_weighted_outcome_count():
    p = ModelParams(n=6, mu=0.5, k2=3)
    assert weighted_outcome_count(p) == (5 + 10) ** 6


def test_probabilities_in_unit_interval():
    p = ModelParams(n=5, mu=0.4, k2=3)
    prof = orc.profile(p, kconn_max=3)
    for seq in (prof.pmf_type1, prof.pmf_type2, prof.joint_type1, prof.mindeg_ge, prof.kconn):
        for v in seq:
            assert -1e-15 <= v <= 1.0 + 1e-15


def test_pool_pick_oracle_matches_quantity_B():
    p = ModelParams(n=6, mu=0.4, k2=3)
    probs = an.pair_pick_probs(6, 0.4, 3)
    for m in (0, 1, 2, 3, 4):
        for alpha in range(m + 1):
            for beta in range(m + 1):
                assert an.quantity_B(m, alpha, beta, probs) == pytest.approx(
                    orc.enumerate_pool_pick_prob(p, m, alpha, beta), abs=1e-12
                )


def test_pair_pick_oracle_matches_formula():
    for (n, mu, k2) in [(5, 0.5, 2), (6, 0.25, 3), (6, 1.0, 2)]:
        got = orc.enumerate_pair_pick_probs(ModelParams(n=n, mu=mu, k2=k2))
        want = an.pair_pick_probs(n, mu, k2)
        assert got.p12 == pytest.approx(want.p12, abs=1e-12)
        assert got.p1not2 == pytest.approx(want.p1not2, abs=1e-12)
        assert got.pnot1not2 == pytest.approx(want.pnot1not2, abs=1e-12)


def test_monte_carlo_converges_to_oracle():
    # 1e5 trials must land within 4 standard errors of the exact values
    trials = 100_000
    for (n, mu, k2, k) in [(5, 0.5, 2, 2), (6, 0.5, 2, 2)]:
        p = ModelParams(n=n, mu=mu, k2=k2)
        exact_md = enumerate_min_degree_prob(p, k)
        exact_kc = enumerate_kconn_prob(p, k)
        row = run_point(p, k, trials, master_seed=20240817)
        se_md = math.sqrt(exact_md * (1 - exact_md) / trials)
        se_kc = math.sqrt(exact_kc * (1 - exact_kc) / trials)
        assert abs(row.p_mindeg - exact_md) <= 4 * se_md
        assert abs(row.p_kconn - exact_kc) <= 4 * se_kc
