"""Bound formulas for the connectivity value and the machinery to check the
proven inequalities on concrete instances.

Every check is normalized to the form lhs <= rhs with slack = rhs - lhs;
status is "holds" when slack >= -tolerance. Reduction checks are equality
checks instead: they hold when |slack| <= tolerance. Lower-bound checks run
only when an oracle-certified connectivity value is available (n <= 6),
because the gradient solver alone certifies upper estimates only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .combinatorics import (
    CutResult,
    Graph,
    clique_expansion,
    graph_diameter,
    isoperimetric_number,
    lambda2,
)
from .combinatorics import diameter as hypergraph_diameter
from .errors import (
    Disconnected,
    GuardError,
    HyperalphaError,
    NonPositiveEntry,
    NotUniform,
    TooFewEdges,
    ValidationError,
)
from .hypergraph import Hypergraph, build, degree_profile, is_connected
from .solver import SolverConfig, analytic_connectivity, grid_oracle

# pinned tolerances: closed-form bounds vs checks where the oracle value enters
DEGREE_UPPER_TOL = 1e-6
CHEEGER_UPPER_TOL = 1e-3
LOWER_TOL = 1e-3
REDUCTION_TOL = 1e-12
GRAPH_TOL = 1e-9

# grid-oracle settings used for certification inside verify
ORACLE_MAX_N = 6
ORACLE_STEPS = 16
ORACLE_ROUNDS = 12

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    lhs: float | None = None
    rhs: float | None = None
    slack: float | None = None


@dataclass(frozen=True)
class AmGmGapResult:
    arithmetic: float
    geometric: float
    gap: float
    pairwise_bound: float
    paired_bound: float


@dataclass(frozen=True)
class BoundsReport:
    n: int
    edge_count: int
    m: int
    s_min: int
    max_degree: int
    connected: bool
    has_nested_edges: bool
    has_spanning_edge: bool
    alpha_estimate: float | None
    oracle_value: float | None
    alpha_certified: float | None
    fixed_vertex: int | None
    diameter: float | None
    iso: CutResult | None
    lambda2_clique: float | None
    diameter_lower: float | None
    degree_upper: float | None
    degree_upper_nonspanning: float | None
    cheeger_lower: float | None
    cheeger_upper: float | None
    checks: tuple[Check, ...]


def _ineq(name, lhs, rhs, tol) -> Check:
    slack = rhs - lhs
    return Check(name, HOLDS if slack >= -tol else VIOLATED, lhs, rhs, slack)


def _equality(name, general, uniform, tol) -> Check:
    slack = uniform - general
    return Check(name, HOLDS if abs(slack) <= tol else VIOLATED, general, uniform, slack)


def _na(name) -> Check:
    return Check(name, NOT_APPLICABLE)


def diameter_lower_bound(H: Hypergraph) -> float:
    """4 s_min / (n^2 m (m-1) diam); requires a connected instance, m >= 2."""
    prof = degree_profile(H)
    if prof.m < 2:
        raise ValidationError("diameter lower bound needs largest edge size >= 2")
    if H.n < 2:
        raise ValidationError("diameter lower bound needs n >= 2")
    if not is_connected(H):
        raise Disconnected("diameter undefined for disconnected instances")
    d = hypergraph_diameter(H)
    return 4.0 * prof.s_min / (H.n ** 2 * prof.m * (prof.m - 1) * d)


def degree_upper_bound(H: Hypergraph) -> float:
    """min over edges of (sum of member degrees - edge size) / edge size."""
    if len(H.edges) < 2:
        raise TooFewEdges("degree upper bound requires more than one edge")
    deg = degree_profile(H).degrees
    return min((sum(deg[v - 1] for v in e) - len(e)) / len(e) for e in H.edges)


def degree_upper_bound_nonspanning(H: Hypergraph) -> float:
    """Degree upper bound restricted to edges that leave a vertex uncovered.

    The proof of the degree bound pins a vertex outside the chosen edge to
    zero, so an edge covering all of V supports no such witness; the
    restricted minimum is the provable upper bound (a spanning edge can
    exist at most once, so with two or more edges the minimum is nonempty).
    The unrestricted value can genuinely exceed the connectivity: on
    edges {1,2,3,4} and {1,2,4} the connectivity equals 1 while the
    unrestricted minimum is 3/4.
    """
    if len(H.edges) < 2:
        raise TooFewEdges("degree upper bound requires more than one edge")
    deg = degree_profile(H).degrees
    return min(
        (sum(deg[v - 1] for v in e) - len(e)) / len(e)
        for e in H.edges
        if len(e) < H.n
    )


def cheeger_interval(H: Hypergraph) -> tuple[float, float]:
    """(lower, upper) two-sided bound from the isoperimetric number:
    (s_min/m) (max_degree - sqrt(max_degree^2 - i^2)) and (m/2) i."""
    if H.n < 2:
        raise ValidationError("cheeger interval needs n >= 2")
    prof = degree_profile(H)
    cut = isoperimetric_number(H)
    i = float(cut.value)
    delta = float(prof.max_degree)
    lower = (prof.s_min / prof.m) * (delta - math.sqrt(max(delta * delta - i * i, 0.0)))
    upper = (prof.m / 2.0) * i
    return lower, upper


def uniform_reduction_check(H: Hypergraph) -> tuple[Check, ...]:
    """For k-uniform instances, check that the general bound formulas reduce
    to their k-uniform counterparts (equality to 1e-12)."""
    sizes = {len(e) for e in H.edges}
    if len(sizes) != 1:
        raise NotUniform("uniform reduction check requires a k-uniform instance")
    k = sizes.pop()
    prof = degree_profile(H)
    checks = []
    if is_connected(H) and k >= 2 and H.n >= 2:
        d = hypergraph_diameter(H)
        checks.append(_equality(
            "uniform-diameter-reduction",
            diameter_lower_bound(H),
            4.0 / (H.n ** 2 * (k - 1) * d),
            REDUCTION_TOL,
        ))
    else:
        checks.append(_na("uniform-diameter-reduction"))
    if len(H.edges) >= 2:
        uniform_degree = min(
            (sum(prof.degrees[v - 1] for v in e) - k) / k for e in H.edges
        )
        checks.append(_equality(
            "uniform-degree-reduction", degree_upper_bound(H), uniform_degree,
            REDUCTION_TOL,
        ))
    else:
        checks.append(_na("uniform-degree-reduction"))
    if H.n >= 2 and H.n <= 24:
        lower, _ = cheeger_interval(H)
        i = float(isoperimetric_number(H).value)
        delta = float(prof.max_degree)
        uniform_lower = delta - math.sqrt(max(delta * delta - i * i, 0.0))
        checks.append(_equality(
            "uniform-cheeger-reduction", lower, uniform_lower, REDUCTION_TOL,
        ))
    else:
        checks.append(_na("uniform-cheeger-reduction"))
    return tuple(checks)


def graph_bounds_check(G: Graph) -> tuple[Check, ...]:
    """Evaluate the 2-graph inequalities on a connected graph.

    The edge-degree upper bound is recorded but known to fail on some
    graphs (e.g. paths); it is reported under a -recorded name and is not
    part of any hard assertion.
    """
    if G.n < 2:
        raise ValidationError("graph bounds need n >= 2")
    d = graph_diameter(G)
    if math.isinf(d):
        raise Disconnected("graph bounds require a connected graph")
    lam = lambda2(G)
    H2 = build(G.n, [list(e) for e in G.edges])
    i = float(isoperimetric_number(H2).value)
    deg = degree_profile(H2).degrees
    delta = float(max(deg))
    checks = [
        _ineq("graph-diameter-lower", 4.0 / (G.n * d), lam, GRAPH_TOL),
        _ineq("graph-cheeger-upper", lam, 2.0 * i, GRAPH_TOL),
        _ineq("graph-cheeger-lower",
              delta - math.sqrt(max(delta * delta - i * i, 0.0)), lam, GRAPH_TOL),
    ]
    if len(G.edges) >= 2:
        bound = min((deg[a - 1] + deg[b - 1] - 2) / 2.0 for a, b in G.edges)
        checks.append(_ineq("graph-degree-upper-recorded", lam, bound, GRAPH_TOL))
    else:
        checks.append(_na("graph-degree-upper-recorded"))
    return tuple(checks)


def amgm_gaps(a, permutation=None) -> AmGmGapResult:
    """Arithmetic-geometric mean gap with its two square-difference lower
    bounds: the all-pairs sum scaled by 1/(n(n-1)), and the opposite-ends
    paired sum under the given ordering scaled by 1/n."""
    a = np.asarray(a, dtype=np.float64)
    n = a.size
    if n < 2:
        raise ValidationError("mean gap needs at least 2 entries")
    if (a <= 0).any():
        raise NonPositiveEntry("entries must be strictly positive")
    if permutation is None:
        b = a
    else:
        perm = list(permutation)
        if sorted(perm) != list(range(n)):
            raise ValidationError("permutation must reorder positions 0..n-1")
        b = a[perm]
    arithmetic = float(np.mean(a))
    geometric = float(np.exp(np.mean(np.log(a))))
    gap = arithmetic - geometric
    r = np.sqrt(a)
    pairwise = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            pairwise += (r[i] - r[j]) ** 2
    pairwise /= n * (n - 1)
    rb = np.sqrt(b)
    paired = sum((rb[j] - rb[n - 1 - j]) ** 2 for j in range(n // 2)) / n
    scale = 1e-9 * max(1.0, arithmetic)
    if gap < pairwise - scale or gap < paired - scale:
        raise HyperalphaError("mean gap fell below a proven lower bound")
    return AmGmGapResult(arithmetic, geometric, gap, float(pairwise), float(paired))


def _has_nested_edges(H: Hypergraph) -> bool:
    sets = [frozenset(e) for e in H.edges]
    return any(a < b for a in sets for b in sets)


def verify(H: Hypergraph, config: SolverConfig | None = None) -> BoundsReport:
    """Compute all quantities and bound checks for one instance.

    Inapplicable checks (disconnected, single edge, m = 2, uncertified
    lower bounds, guard overruns) are marked not-applicable rather than
    raising.
    """
    config = config or SolverConfig()
    prof = degree_profile(H)
    conn = is_connected(H)
    has_edges = len(H.edges) > 0

    alpha_est = None
    fixed_vertex = None
    if has_edges and H.n >= 2:
        res = analytic_connectivity(H, config)
        alpha_est = res.alpha
        fixed_vertex = res.fixed_vertex

    oracle_val = None
    if has_edges and 2 <= H.n <= ORACLE_MAX_N:
        oracle_val = grid_oracle(H, ORACLE_STEPS, ORACLE_ROUNDS)
    alpha_cert = None
    if alpha_est is not None and oracle_val is not None:
        alpha_cert = min(alpha_est, oracle_val)

    iso = None
    if has_edges and 2 <= H.n <= 24:
        iso = isoperimetric_number(H)

    diam = hypergraph_diameter(H) if H.n >= 1 else None

    lam2 = None
    if 2 <= H.n <= 2000:
        try:
            lam2 = lambda2(clique_expansion(H))
        except GuardError:
            lam2 = None

    diam_lower = None
    if conn and prof.m >= 2 and H.n >= 2:
        diam_lower = diameter_lower_bound(H)
    degree_upper = None
    degree_upper_ns = None
    if len(H.edges) >= 2:
        degree_upper = degree_upper_bound(H)
        degree_upper_ns = degree_upper_bound_nonspanning(H)
    cheeger_lower = None
    cheeger_upper = None
    if iso is not None and prof.m >= 1:
        cheeger_lower, cheeger_upper = cheeger_interval(H)

    checks = []
    if alpha_est is not None and degree_upper_ns is not None:
        checks.append(_ineq("degree-upper", alpha_est, degree_upper_ns,
                            DEGREE_UPPER_TOL))
    else:
        checks.append(_na("degree-upper"))
    if alpha_est is not None and cheeger_upper is not None and prof.m >= 3:
        checks.append(_ineq("cheeger-upper", alpha_est, cheeger_upper, CHEEGER_UPPER_TOL))
    else:
        checks.append(_na("cheeger-upper"))
    if alpha_cert is not None and diam_lower is not None:
        checks.append(_ineq("diameter-lower", diam_lower, alpha_cert, LOWER_TOL))
    else:
        checks.append(_na("diameter-lower"))
    if alpha_cert is not None and cheeger_lower is not None and prof.m >= 3:
        checks.append(_ineq("cheeger-lower", cheeger_lower, alpha_cert, LOWER_TOL))
    else:
        checks.append(_na("cheeger-lower"))

    return BoundsReport(
        n=H.n,
        edge_count=len(H.edges),
        m=prof.m,
        s_min=prof.s_min,
        max_degree=prof.max_degree,
        connected=conn,
        has_nested_edges=_has_nested_edges(H),
        has_spanning_edge=any(len(e) == H.n for e in H.edges),
        alpha_estimate=alpha_est,
        oracle_value=oracle_val,
        alpha_certified=alpha_cert,
        fixed_vertex=fixed_vertex,
        diameter=diam,
        iso=iso,
        lambda2_clique=lam2,
        diameter_lower=diam_lower,
        degree_upper=degree_upper,
        degree_upper_nonspanning=degree_upper_ns,
        cheeger_lower=cheeger_lower,
        cheeger_upper=cheeger_upper,
        checks=tuple(checks),
    )
