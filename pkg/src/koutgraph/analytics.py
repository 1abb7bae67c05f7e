"""Exact finite-n evaluation of the scheme's closed-form quantities.

Everything here assumes the analyzed regime k1 = 1; functions raise when the
assumption matters and cannot hold. All logarithms are natural. With
mean selection count m = mu + (1-mu)*k2 and per-node pick probability
p = m/(n-1):

* a type-1 node's degree is 1 + Binomial(n-2, p), exactly;
* a type-2 node's degree is k2 + Binomial(n-1-k2, p), exactly;
* a third node picks two fixed nodes both / exactly one / neither with the
  probabilities in :class:`PairPickProbs`;
* ``joint_degree_prob_type1`` assembles the probability that two fixed
  type-1 nodes both end with a given degree by conditioning on their own
  selections (mutual pick, one-way pick, shared target, distinct targets)
  and on whether their targets pick back.

Double precision throughout; binomial and multinomial terms switch to
log-space (lgamma) once the pool exceeds 1000 so that n up to 1e7 stays
finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, exp, fsum, lgamma, log, log1p

from .model import NodeType

_EXACT_LIMIT = 1000


@dataclass(frozen=True)
class ScalingPoint:
    """A parameter point located relative to the critical scaling.

    ``gamma`` is the deviation of the mean selection count from
    ``log n + (k-2) log log n``; driving it to +/- infinity selects the
    one/zero side of the minimum-degree law.
    """

    n: int
    mu: float
    k2: int
    k: int
    mean_k: float
    gamma: float


@dataclass(frozen=True)
class PairPickProbs:
    """Probabilities that a third node picks both / exactly one / neither
    of two fixed nodes. Satisfies p12 + 2*p1not2 + pnot1not2 = 1."""

    p12: float
    p1not2: float
    pnot1not2: float


def _check_mu(mu: float) -> None:
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu}")


def _check_nk2(n: int, k2: int) -> None:
    if n < 3:
        raise ValueError(f"n >= 3 required, got {n}")
    if not 1 <= k2 <= n - 1:
        raise ValueError(f"k2 must lie in [1, n-1], got k2={k2}, n={n}")


def mean_selection(mu: float, k2: int) -> float:
    """Mean number of selections per node, mu*1 + (1-mu)*k2 (k1 = 1)."""
    _check_mu(mu)
    if k2 < 1:
        raise ValueError(f"k2 >= 1 required, got {k2}")
    return mu + (1.0 - mu) * k2


def edge_probability(n: int, mean_k: float) -> float:
    """Probability that two fixed nodes are adjacent: 2p - p^2 with
    p = mean_k/(n-1), from either direction of selection."""
    if n < 2:
        raise ValueError(f"n >= 2 required, got {n}")
    if not 0.0 < mean_k <= n - 1:
        raise ValueError(f"mean_k must lie in (0, n-1], got {mean_k}")
    p = mean_k / (n - 1)
    return 2.0 * p - p * p


def mean_degree(n: int, mean_k: float) -> float:
    """Expected degree of a node: (n-1) times the edge probability."""
    if n < 2:
        raise ValueError(f"n >= 2 required, got {n}")
    if not 0.0 < mean_k <= n - 1:
        raise ValueError(f"mean_k must lie in (0, n-1], got {mean_k}")
    return 2.0 * mean_k - mean_k * mean_k / (n - 1)


def _binom_pmf(j: int, m: int, q: float) -> float:
    """P[Binomial(m, q) = j]; exact combinatorics for small m, log-space
    beyond, with the q = 0 and q = 1 point masses handled exactly."""
    if j < 0 or j > m:
        return 0.0
    if q == 0.0:
        return 1.0 if j == 0 else 0.0
    if q == 1.0:
        return 1.0 if j == m else 0.0
    if m <= _EXACT_LIMIT:
        return comb(m, j) * q**j * (1.0 - q) ** (m - j)
    lg = lgamma(m + 1) - lgamma(j + 1) - lgamma(m - j + 1)
    return exp(lg + j * log(q) + (m - j) * log1p(-q))


def _check_d(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValueError(f"degree must be an integer, got {d!r}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")


def degree_pmf(n: int, mu: float, k2: int, node_type: NodeType, d: int) -> float:
    """Exact degree distribution of a node of the given type.

    Type-1: P[deg = d] = C(n-2, d-1) p^(d-1) (1-p)^(n-1-d) for 1 <= d <= n-1.
    Type-2: P[deg = d] = C(n-1-k2, d-k2) p^(d-k2) (1-p)^(n-1-d) for
    k2 <= d <= n-1. Degrees outside the support give 0.
    """
    _check_mu(mu)
    _check_nk2(n, k2)
    _check_d(d)
    p = mean_selection(mu, k2) / (n - 1)
    if node_type is NodeType.TYPE1:
        return _binom_pmf(d - 1, n - 2, p)
    return _binom_pmf(d - k2, n - 1 - k2, p)


def expected_count_Z(n: int, mu: float, k2: int, d: int) -> float:
    """Expected number of nodes with degree exactly d."""
    return n * (
        mu * degree_pmf(n, mu, k2, NodeType.TYPE1, d)
        + (1.0 - mu) * degree_pmf(n, mu, k2, NodeType.TYPE2, d)
    )


def gamma_from_scaling(n: int, mu: float, k2: int, k: int) -> ScalingPoint:
    """Locate (n, mu, k2) against the level-k critical scaling.

    gamma = mean_k - log n - (k-2) log log n, natural logarithms.
    """
    if n < 3:
        raise ValueError(f"n >= 3 required for log log n, got {n}")
    if k < 2:
        raise ValueError(f"k >= 2 required, got {k}")
    _check_nk2(n, k2)
    mean_k = mean_selection(mu, k2)
    gamma = mean_k - log(n) - (k - 2) * log(log(n))
    return ScalingPoint(n=n, mu=mu, k2=k2, k=k, mean_k=mean_k, gamma=gamma)


def threshold_k2(n: int, mu: float, k: int) -> int:
    """Critical type-2 selection count: ceil((log n + (k-2) log log n)/(1-mu)).

    This is the vertical-line value used in the transition plots.
    """
    if n < 3:
        raise ValueError(f"n >= 3 required, got {n}")
    if k < 2:
        raise ValueError(f"k >= 2 required, got {k}")
    if not 0.0 <= mu < 1.0:
        raise ValueError(f"mu must lie in [0, 1) (mu=1 divides by zero), got {mu}")
    return ceil((log(n) + (k - 2) * log(log(n))) / (1.0 - mu))


def pair_pick_probs(n: int, mu: float, k2: int) -> PairPickProbs:
    """Exact pre-asymptotic pick probabilities for two fixed target nodes.

    Only a type-2 node can pick both targets (a type-1 node has a single
    selection), hence the (1-mu) factor in p12.
    """
    _check_mu(mu)
    _check_nk2(n, k2)
    d2 = (n - 1) * (n - 2)
    p12 = (1.0 - mu) * k2 * (k2 - 1) / d2
    p1not2 = mu / (n - 1) + (1.0 - mu) * (n - k2 - 1) * k2 / d2
    pnot1not2 = (
        mu * (n - 3) / (n - 1)
        + (1.0 - mu) * (n - k2 - 1) * (n - k2 - 2) / d2
    )
    return PairPickProbs(p12=p12, p1not2=p1not2, pnot1not2=pnot1not2)


def quantity_A(
    m: int, alpha: int, r: int, beta: int, probs: PairPickProbs
) -> float:
    """Probability that, out of m pool nodes, exactly alpha-r pick only the
    first target, r pick both, beta-r pick only the second, and the rest
    pick neither. Out-of-range cell counts give 0 by convention."""
    a1 = alpha - r
    b1 = beta - r
    rest = m - (alpha + beta) + r
    if m < 0 or a1 < 0 or r < 0 or b1 < 0 or rest < 0:
        return 0.0
    if m <= _EXACT_LIMIT:
        coef = comb(m, a1) * comb(m - a1, r) * comb(m - a1 - r, b1)
        return (
            coef
            * probs.p1not2 ** (a1 + b1)
            * probs.p12**r
            * probs.pnot1not2**rest
        )
    s = (
        lgamma(m + 1)
        - lgamma(a1 + 1)
        - lgamma(r + 1)
        - lgamma(b1 + 1)
        - lgamma(rest + 1)
    )
    for base, e in ((probs.p1not2, a1 + b1), (probs.p12, r), (probs.pnot1not2, rest)):
        if e:
            if base == 0.0:
                return 0.0
            s += e * log(base)
    return exp(s)


def quantity_B(m: int, alpha: int, beta: int, probs: PairPickProbs) -> float:
    """Probability that out of m pool nodes exactly alpha pick the first
    target and beta pick the second (both-pickers counted for each side);
    the sum of quantity_A over the both-picker count r. Negative alpha or
    beta gives 0."""
    if alpha < 0 or beta < 0:
        return 0.0
    return fsum(
        quantity_A(m, alpha, r, beta, probs) for r in range(0, min(alpha, beta) + 1)
    )


def joint_degree_prob_type1(n: int, mu: float, k2: int, k: int) -> float:
    """Exact P[both of two fixed type-1 nodes have degree k-1].

    Conditions on the two nodes' own selections and, where a selected third
    node can still raise a target's degree, on whether it picks back:

    * mutual pick: both need k-2 more picks from the other n-2 nodes;
    * one picks the other (2 ways): the picker needs k-2 or k-3 more from
      the n-3 pool depending on whether the picked node's own target picks
      the picker; the picked node needs k-3;
    * neither picks the other, same target: both need k-2 from n-3;
    * neither picks the other, distinct targets: each target may pick the
      opposite node (probability p each, independently), leaving
      (k-2 or k-3, k-2 or k-3) to come from the n-4 pool.
    """
    if k < 2:
        raise ValueError(f"k >= 2 required, got {k}")
    _check_mu(mu)
    _check_nk2(n, k2)
    probs = pair_pick_probs(n, mu, k2)
    p = mean_selection(mu, k2) / (n - 1)
    a = 1.0 / (n - 1)

    def B(m: int, alpha: int, beta: int) -> float:
        return quantity_B(m, alpha, beta, probs)

    total = a * a * B(n - 2, k - 2, k - 2)
    total += (
        2.0
        * a
        * (1.0 - a)
        * (p * B(n - 3, k - 3, k - 3) + (1.0 - p) * B(n - 3, k - 2, k - 3))
    )
    shared = B(n - 3, k - 2, k - 2) / (n - 2)
    distinct = (1.0 - 1.0 / (n - 2)) * (
        p * p * B(n - 4, k - 3, k - 3)
        + 2.0 * p * (1.0 - p) * B(n - 4, k - 2, k - 3)
        + (1.0 - p) * (1.0 - p) * B(n - 4, k - 2, k - 2)
    )
    total += (1.0 - a) * (1.0 - a) * (shared + distinct)
    return total


def second_moment_ratio(n: int, mu: float, k2: int, k: int) -> float:
    """Ratio of the joint degree-(k-1) probability of two type-1 nodes to
    the squared single-node probability; approaches 1 from above in the
    sub-critical regime."""
    pmf = degree_pmf(n, mu, k2, NodeType.TYPE1, k - 1)
    if pmf == 0.0:
        raise ZeroDivisionError(
            f"degree pmf is zero at d={k - 1} for n={n}, mu={mu}, k2={k2}"
        )
    return joint_degree_prob_type1(n, mu, k2, k) / (pmf * pmf)


def psi(x: float) -> float:
    """Remainder of the log expansion: -x - log(1-x) = integral of t/(1-t)
    from 0 to x; nonnegative on [0, 1) and ~ x^2/2 near zero."""
    if not 0.0 <= x < 1.0:
        raise ValueError(f"x must lie in [0, 1), got {x}")
    return -x - log1p(-x)
