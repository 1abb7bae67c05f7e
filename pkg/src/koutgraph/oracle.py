"""Exhaustive enumeration of the full probability space at tiny n.

This is the independent ground truth for every closed formula in
``analytics`` and for the Monte-Carlo estimators: probabilities are computed
by summing over all type assignments (weight mu^a (1-mu)^b) and all
selection-set combinations (uniform weight per node), never through the
formulas under test. Event counts per type assignment are exact integers;
only the final mu-weighted combination is floating point, accumulated with
compensated summation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, fsum, prod

from . import _backend
from .analytics import PairPickProbs
from .model import (
    ModelParams,
    NodeType,
    SelectionTable,
    build_graph,
    validate_params,
)

DEFAULT_BUDGET_OUTCOMES = 10**8


class BudgetError(ValueError):
    """The requested enumeration exceeds the configured budget."""


class ZeroProbabilityCondition(ValueError):
    """The conditioning event has probability zero."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_n: int = 6
    max_outcomes: int = DEFAULT_BUDGET_OUTCOMES


DEFAULT_BUDGET = EnumerationBudget()


def weighted_outcome_count(p: ModelParams) -> int:
    """Number of (type, selection) configurations the enumeration visits."""
    return (comb(p.n - 1, p.k1) + comb(p.n - 1, p.k2)) ** p.n


def _check_budget(p: ModelParams, budget: EnumerationBudget) -> None:
    validate_params(p)
    if p.n > budget.max_n:
        raise BudgetError(f"n={p.n} exceeds enumeration budget max_n={budget.max_n}")
    count = weighted_outcome_count(p)
    if count > budget.max_outcomes:
        raise BudgetError(
            f"{count} weighted configurations exceed budget {budget.max_outcomes}"
        )


@dataclass(frozen=True)
class EnumProfile:
    """Exact probabilities from one enumeration pass.

    Degree indices run over 0..n-1; ``mindeg_ge[k]`` is P[min degree >= k]
    for k = 0..n; ``kconn[k]`` (1-based, when computed) is the probability
    of k-vertex-connectivity under the subset-removal definition.
    """

    n: int
    pmf_type1: tuple[float, ...]
    pmf_type2: tuple[float, ...]
    expected_counts: tuple[float, ...]
    joint_type1: tuple[float, ...]
    mindeg_ge: tuple[float, ...]
    kconn: tuple[float, ...]


@lru_cache(maxsize=32)
def _raw_counts(n: int, k1: int, k2: int, kconn_max: int):
    return _backend.kernel.enum_profile(n, k1, k2, kconn_max)


def _mask_weight(mask: int, n: int, mu: float, skip: tuple[int, ...]) -> float:
    w = 1.0
    for i in range(n):
        if i in skip:
            continue
        w *= mu if (mask >> i) & 1 else 1.0 - mu
    return w


def profile(
    p: ModelParams,
    kconn_max: int = 0,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> EnumProfile:
    """Run (or reuse) the enumeration pass and weight it by mu.

    Conditioning on node types is done by restricting the type loop, so the
    conditional quantities are exact even at mu = 0 or mu = 1.
    """
    _check_budget(p, budget)
    raw = _raw_counts(p.n, p.k1, p.k2, kconn_max)
    n, mu = p.n, p.mu
    totals = raw["totals"]
    nmasks = 1 << n

    def combine(counts, skip: tuple[int, ...], required: int) -> list[float]:
        # required: bitmask of nodes whose type must be 1 (conditioned on)
        out = []
        for d in range(counts.shape[1]):
            terms = []
            for mask in range(nmasks):
                if (mask & required) != required:
                    continue
                c = int(counts[mask, d])
                if c:
                    w = _mask_weight(mask, n, mu, skip)
                    if w:
                        terms.append(w * c / int(totals[mask]))
            out.append(fsum(terms))
        return out

    def combine_not1(counts) -> list[float]:
        # conditioned on node 0 being type-2
        out = []
        for d in range(counts.shape[1]):
            terms = []
            for mask in range(nmasks):
                if mask & 1:
                    continue
                c = int(counts[mask, d])
                if c:
                    w = _mask_weight(mask, n, mu, (0,))
                    if w:
                        terms.append(w * c / int(totals[mask]))
            out.append(fsum(terms))
        return out

    pmf1 = combine(raw["deg_v0"], skip=(0,), required=0b1)
    pmf2 = combine_not1(raw["deg_v0"])
    counts = combine(raw["degree_count"], skip=(), required=0)
    joint = combine(raw["joint01"], skip=(0, 1), required=0b11)
    mindeg_pmf = combine(raw["mindeg"], skip=(), required=0)
    mindeg_ge = [0.0] * (n + 1)
    acc = 0.0
    for m in range(n - 1, -1, -1):
        acc = fsum((acc, mindeg_pmf[m]))
        mindeg_ge[m] = acc
    kconn = combine(raw["kconn"], skip=(), required=0) if kconn_max > 0 else []
    return EnumProfile(
        n=n,
        pmf_type1=tuple(pmf1),
        pmf_type2=tuple(pmf2),
        expected_counts=tuple(counts),
        joint_type1=tuple(joint),
        mindeg_ge=tuple(mindeg_ge),
        kconn=tuple(kconn),
    )


def enumerate_degree_pmf(
    p: ModelParams,
    node_type: NodeType,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> tuple[float, ...]:
    """Exact P[deg(v) = d | type] for d = 0..n-1."""
    prof = profile(p, budget=budget)
    return prof.pmf_type1 if node_type is NodeType.TYPE1 else prof.pmf_type2


def enumerate_expected_counts(
    p: ModelParams, budget: EnumerationBudget = DEFAULT_BUDGET
) -> tuple[float, ...]:
    """Exact expected number of degree-d nodes, d = 0..n-1."""
    return profile(p, budget=budget).expected_counts


def enumerate_min_degree_prob(
    p: ModelParams, k: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> float:
    """Exact P[min degree >= k]."""
    prof = profile(p, budget=budget)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > p.n:
        return 0.0
    return prof.mindeg_ge[k]


def enumerate_kconn_prob(
    p: ModelParams, k: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> float:
    """Exact P[k-vertex-connected], by the subset-removal definition."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k >= p.n:
        return 0.0
    prof = profile(p, kconn_max=k, budget=budget)
    return prof.kconn[k - 1]


def enumerate_joint_degree_prob(
    p: ModelParams, k: int, budget: EnumerationBudget = DEFAULT_BUDGET
) -> float:
    """Exact P[deg(v1) = deg(v2) = k-1 | both type-1] (nodes 0 and 1; any
    pair gives the same value by exchangeability)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if k - 1 > p.n - 1:
        return 0.0
    return profile(p, budget=budget).joint_type1[k - 1]


def enumerate_event_prob(
    p: ModelParams,
    event,
    condition=None,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> float:
    """Exact probability of ``event(table, graph)``, optionally conditioned.

    Generic and therefore slow (it materializes every configuration as a
    SelectionTable plus Graph); intended for small n. The specialized
    ``enumerate_*`` functions use the compiled counting pass instead.
    """
    _check_budget(p, budget)
    n = p.n
    num_terms: list[float] = []
    den_terms: list[float] = []
    for types in product((NodeType.TYPE1, NodeType.TYPE2), repeat=n):
        w_t = prod(p.mu if t is NodeType.TYPE1 else 1.0 - p.mu for t in types)
        if w_t == 0.0:
            continue
        combo_lists = [
            tuple(
                combinations(
                    [j for j in range(n) if j != i], p.selections_of(types[i])
                )
            )
            for i in range(n)
        ]
        w = w_t / prod(len(lst) for lst in combo_lists)
        for pick in product(*combo_lists):
            table = SelectionTable(
                types=types, selections=tuple(frozenset(c) for c in pick)
            )
            graph = build_graph(table)
            if condition is None or condition(table, graph):
                den_terms.append(w)
                if event(table, graph):
                    num_terms.append(w)
    if condition is None:
        return fsum(num_terms)
    den = fsum(den_terms)
    if den == 0.0:
        raise ZeroProbabilityCondition("conditioning event has probability zero")
    return fsum(num_terms) / den


def enumerate_pair_pick_probs(p: ModelParams) -> PairPickProbs:
    """Pick probabilities of a third node toward two fixed targets, by
    counting subsets directly (independent of the closed forms)."""
    validate_params(p)
    n = p.n
    if n < 3:
        raise ValueError("needs at least three nodes")
    picker = 2
    cands = [j for j in range(n) if j != picker]
    both_terms, one_terms, neither_terms = [], [], []
    for type_weight, count in ((p.mu, p.k1), (1.0 - p.mu, p.k2)):
        if type_weight == 0.0:
            continue
        total = b = o1 = nn = 0
        for chosen in combinations(cands, count):
            total += 1
            has0 = 0 in chosen
            has1 = 1 in chosen
            if has0 and has1:
                b += 1
            elif has0:
                o1 += 1
            elif not has1:
                nn += 1
        both_terms.append(type_weight * b / total)
        one_terms.append(type_weight * o1 / total)
        neither_terms.append(type_weight * nn / total)
    return PairPickProbs(
        p12=fsum(both_terms),
        p1not2=fsum(one_terms),
        pnot1not2=fsum(neither_terms),
    )


def enumerate_pool_pick_prob(
    p: ModelParams, m: int, alpha: int, beta: int
) -> float:
    """Probability that among m pool nodes exactly alpha pick target 0 and
    beta pick target 1 (both-pickers count toward each side), by full
    product enumeration over the pool nodes' types and selection sets."""
    validate_params(p)
    n = p.n
    if not 0 <= m <= n - 2:
        raise ValueError(f"pool size must lie in [0, n-2], got {m}")
    if alpha < 0 or beta < 0:
        return 0.0
    per_node_options = []
    for i in range(2, 2 + m):
        cands = [j for j in range(n) if j != i]
        options = []
        for type_weight, count in ((p.mu, p.k1), (1.0 - p.mu, p.k2)):
            if type_weight == 0.0:
                continue
            subsets = list(combinations(cands, count))
            w = type_weight / len(subsets)
            for chosen in subsets:
                options.append((w, int(0 in chosen), int(1 in chosen)))
        per_node_options.append(options)
    terms = []
    for combo in product(*per_node_options):
        a = sum(c[1] for c in combo)
        b = sum(c[2] for c in combo)
        if a == alpha and b == beta:
            terms.append(prod(c[0] for c in combo))
    return fsum(terms)
