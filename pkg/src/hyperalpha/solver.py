"""Analytic connectivity: minimize the Laplacian form over the nonnegative
unit m-norm slice with one coordinate pinned to zero, for every choice of
pinned vertex.

The minimization is projected gradient descent with backtracking line search
and multistart; it certifies upper estimates only. grid_oracle provides an
independent lattice-enumeration estimate for tiny instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import InstanceTooLarge, NoEdges, ValidationError
from .forms import form_table
from .hypergraph import Hypergraph, components


@dataclass(frozen=True)
class SolverConfig:
    restarts: int = 16
    max_iterations: int = 10_000
    objective_tolerance: float = 1e-10
    step_init: float = 1.0
    step_shrink: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise ValidationError("restarts must be >= 1")
        if self.objective_tolerance <= 0 or self.step_init <= 0:
            raise ValidationError("tolerances and step size must be positive")
        if not 0 < self.step_shrink < 1:
            raise ValidationError("step_shrink must lie in (0, 1)")


@dataclass(frozen=True)
class AlphaResult:
    """Global minimum over pinned vertices, with per-vertex values and the
    feasible witness vector (zero at fixed_vertex, unit m-norm)."""

    alpha: float
    per_vertex: tuple[float, ...]
    witness: tuple[float, ...]
    fixed_vertex: int
    converged: tuple[tuple[bool, ...], ...]


def _mnormalized(x, m):
    p = float(np.sum(x ** m))
    return x / p ** (1.0 / m)


def _restart_points(H: Hypergraph, j: int, config: SolverConfig, m: int):
    """Start vectors for pinned vertex j: uniform off j, per-component and
    per-edge indicators avoiding j, then random exponential fills."""
    n = H.n
    starts = []
    u = np.ones(n)
    u[j - 1] = 0.0
    starts.append(_mnormalized(u, m))
    for comp in components(H):
        if j not in comp and len(comp) >= 1:
            v = np.zeros(n)
            for w in comp:
                v[w - 1] = 1.0
            starts.append(_mnormalized(v, m))
    for e in H.edges:
        if j not in e:
            v = np.zeros(n)
            for w in e:
                v[w - 1] = 1.0
            starts.append(_mnormalized(v, m))
    rng = np.random.default_rng(np.random.SeedSequence((config.seed, j)))
    for _ in range(max(0, config.restarts - len(starts))):
        v = rng.standard_exponential(n)
        v[j - 1] = 0.0
        starts.append(_mnormalized(v, m))
    return starts


def _minimize_full(H: Hypergraph, j: int, config: SolverConfig):
    if not H.edges:
        raise NoEdges("analytic connectivity needs at least one edge")
    if H.n < 2:
        raise ValidationError("analytic connectivity needs n >= 2")
    if not 1 <= j <= H.n:
        raise ValidationError(f"fixed vertex {j} outside [1, {H.n}]")
    t = form_table(H)
    K = kernels.active()
    best_f = math.inf
    best_x = None
    flags = []
    for x0 in _restart_points(H, j, config, t.m):
        f, x, conv = K.descend(
            t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
            x0, j - 1, config.max_iterations, config.objective_tolerance,
            config.step_init, config.step_shrink,
        )
        flags.append(bool(conv))
        if f < best_f:
            best_f = f
            best_x = x
    if -1e-12 < best_f < 0.0:
        # the form is nonnegative; sub-ulp negatives are cancellation noise
        best_f = 0.0
    witness = _mnormalized(best_x, t.m)
    witness[j - 1] = 0.0
    return float(best_f), witness, tuple(flags)


def minimize_fixed_zero(H: Hypergraph, j: int, config: SolverConfig | None = None):
    """Best objective value and feasible witness with x_j pinned to zero."""
    value, witness, _ = _minimize_full(H, j, config or SolverConfig())
    return value, witness


def analytic_connectivity(H: Hypergraph, config: SolverConfig | None = None) -> AlphaResult:
    """Minimum of the pinned-vertex minima over all vertices.

    Deterministic for a fixed config seed; ties resolved toward the
    smallest vertex index.
    """
    config = config or SolverConfig()
    per_vertex = []
    witnesses = []
    flags = []
    for j in range(1, H.n + 1):
        value, witness, conv = _minimize_full(H, j, config)
        per_vertex.append(value)
        witnesses.append(witness)
        flags.append(conv)
    best_j = int(np.argmin(per_vertex))
    return AlphaResult(
        alpha=float(per_vertex[best_j]),
        per_vertex=tuple(per_vertex),
        witness=tuple(float(v) for v in witnesses[best_j]),
        fixed_vertex=best_j + 1,
        converged=tuple(flags),
    )


@lru_cache(maxsize=32)
def _simplex_lattice(total: int, parts: int) -> np.ndarray:
    """All nonnegative integer vectors of the given length summing to total."""
    rows: list[list[int]] = []

    def rec(prefix, remaining, left):
        if left == 1:
            rows.append(prefix + [remaining])
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v, left - 1)

    rec([], total, parts)
    arr = np.array(rows, dtype=np.float64)
    arr.setflags(write=False)
    return arr


def grid_oracle(H: Hypergraph, steps: int = 16, refine_rounds: int = 12) -> float:
    """Independent upper estimate of the analytic connectivity.

    Enumerates all simplex lattice points with denominator `steps` on every
    pinned-vertex slice (mapped to the m-norm sphere via the 1/m power),
    then refines the best point by pairwise mass moves with halving step.
    Guarded at n <= 7.
    """
    if not H.edges:
        raise NoEdges("grid oracle needs at least one edge")
    if H.n > 7:
        raise InstanceTooLarge(f"n={H.n} exceeds the grid oracle guard 7")
    if H.n < 2:
        raise ValidationError("grid oracle needs n >= 2")
    if steps < 1:
        raise ValidationError("steps must be >= 1")
    if math.comb(steps + H.n - 2, H.n - 2) > 5_000_000:
        raise InstanceTooLarge("lattice too fine for the grid oracle")
    t = form_table(H)
    K = kernels.active()
    n, m = H.n, t.m
    lattice = _simplex_lattice(steps, n - 1) / float(steps)
    best_f = math.inf
    best_y = None
    best_j = 0
    for j in range(n):
        Y = np.insert(lattice, j, 0.0, axis=1)
        X = np.ascontiguousarray(Y ** (1.0 / m))
        vals = K.form_value_batch(t.deg, m, t.sub_idx, t.sub_ptr, t.sub_coef, X)
        i = int(np.argmin(vals))
        if vals[i] < best_f:
            best_f = float(vals[i])
            best_y = Y[i].copy()
            best_j = j
    y = best_y
    delta = 1.0 / steps
    for _ in range(refine_rounds):
        for _ in range(60):
            cands = []
            for a in range(n):
                if a == best_j or y[a] <= 0.0:
                    continue
                d = min(delta, y[a])
                for b in range(n):
                    if b == a or b == best_j:
                        continue
                    y2 = y.copy()
                    y2[a] = max(y2[a] - d, 0.0)
                    y2[b] += d
                    cands.append(y2)
            if not cands:
                break
            Y2 = np.array(cands)
            X2 = np.ascontiguousarray(Y2 ** (1.0 / m))
            vals = K.form_value_batch(t.deg, m, t.sub_idx, t.sub_ptr, t.sub_coef, X2)
            i = int(np.argmin(vals))
            if vals[i] < best_f:
                best_f = float(vals[i])
                y = Y2[i]
            else:
                break
        delta /= 2.0
    if -1e-12 < best_f < 0.0:
        best_f = 0.0
    return best_f
