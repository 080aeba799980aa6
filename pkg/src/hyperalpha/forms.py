"""Tensor Laplacian forms for general hypergraphs.

The order-m form of a hypergraph decomposes over edges: for an edge e of
size s, the edge term is sum_{v in e} x_v^m minus s/omega(m, s) times the
covering power sum of e. The covering power sum is evaluated by signed
inclusion-exclusion over the 2^s - 1 nonempty subsets of e, which the dense
contraction oracle cross-checks by enumerating all n^m index tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import kernels
from .errors import (
    DimensionMismatch,
    EdgeLargerThanOrder,
    InstanceTooLarge,
    InvalidOrder,
    NegativeEntry,
    ValidationError,
)
from .hypergraph import Hypergraph, degree_profile

# subset-table size guard; protects against pathological edge sizes
_MAX_TABLE_ENTRIES = 50_000_000


def omega(m: int, s: int) -> int:
    """Number of m-tuples covering an s-set, by inclusion-exclusion.

    Exact integer arithmetic; equals the sum over positive compositions
    k_1 + ... + k_s = m of the multinomial m!/(k_1! ... k_s!).
    """
    if s < 1 or s > m:
        raise InvalidOrder(f"need 1 <= s <= m, got s={s}, m={m}")
    return sum((-1) ** j * math.comb(s, j) * (s - j) ** m for j in range(s))


def _check_point(x, n) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (n,):
        raise DimensionMismatch(f"expected vector of length {n}, got shape {x.shape}")
    if (x < 0).any():
        raise NegativeEntry("evaluation points must be nonnegative")
    return x


def _pow_scalar(base: float, e: int) -> float:
    out = 1.0
    b = float(base)
    while e > 0:
        if e & 1:
            out *= b
        e >>= 1
        if e:
            b *= b
    return out


def edge_power_sum(e, x, m: int) -> float:
    """Covering power sum of edge e at x: the sum over all index m-tuples
    drawn from e that use every vertex of e at least once."""
    e = tuple(e)
    s = len(e)
    if s > m:
        raise EdgeLargerThanOrder(f"edge size {s} exceeds order {m}")
    if s < 1:
        raise InvalidOrder("edge must be nonempty")
    if len(set(e)) != s:
        raise ValidationError(f"repeated vertex in edge {list(e)}")
    x = np.asarray(x, dtype=np.float64)
    if any(v < 1 or v > x.size for v in e):
        raise DimensionMismatch(f"edge {list(e)} indexes outside the vector")
    if (x < 0).any():
        raise NegativeEntry("evaluation points must be nonnegative")
    total = 0.0
    for r in range(1, s + 1):
        sign = -1.0 if (s - r) % 2 else 1.0
        for sub in combinations(e, r):
            t = 0.0
            for v in sub:
                t += float(x[v - 1])
            total += sign * _pow_scalar(t, m)
    return total


def edge_laplacian_form(e, x, m: int) -> float:
    """Per-edge Laplacian term; nonnegative, zero iff x is constant on e."""
    e = tuple(e)
    s = len(e)
    x = np.asarray(x, dtype=np.float64)
    ps = edge_power_sum(e, x, m)
    diag = 0.0
    for v in e:
        diag += _pow_scalar(float(x[v - 1]), m)
    return diag - (s / omega(m, s)) * ps


@dataclass(frozen=True)
class FormTable:
    """Flattened inclusion-exclusion data for one hypergraph, kernel-ready.

    sub_idx/sub_ptr list the 0-based members of each nonempty subset of each
    edge; sub_coef carries the signed weight (-1)^(s-|T|) * s/omega(m, s).
    """

    n: int
    m: int
    deg: np.ndarray
    sub_idx: np.ndarray
    sub_ptr: np.ndarray
    sub_coef: np.ndarray
    edge_sizes: np.ndarray
    edge_flat: np.ndarray
    edge_ptr: np.ndarray
    edge_coef: np.ndarray


@lru_cache(maxsize=128)
def form_table(H: Hypergraph) -> FormTable:
    prof = degree_profile(H)
    m = prof.m
    total = sum((1 << len(e)) - 1 for e in H.edges)
    if total > _MAX_TABLE_ENTRIES:
        raise InstanceTooLarge("edge subset table too large")
    sub_idx: list[int] = []
    sub_ptr = [0]
    sub_coef: list[float] = []
    edge_flat: list[int] = []
    edge_ptr = [0]
    edge_coef: list[float] = []
    for e in H.edges:
        s = len(e)
        scale = s / omega(m, s)
        edge_flat.extend(v - 1 for v in e)
        edge_ptr.append(len(edge_flat))
        edge_coef.append(scale)
        for tmask in range(1, 1 << s):
            r = 0
            for b in range(s):
                if tmask >> b & 1:
                    sub_idx.append(e[b] - 1)
                    r += 1
            sub_ptr.append(len(sub_idx))
            sub_coef.append(scale if (s - r) % 2 == 0 else -scale)
    table = FormTable(
        n=H.n,
        m=m,
        deg=np.asarray(prof.degrees, dtype=np.float64),
        sub_idx=np.asarray(sub_idx, dtype=np.int64),
        sub_ptr=np.asarray(sub_ptr, dtype=np.int64),
        sub_coef=np.asarray(sub_coef, dtype=np.float64),
        edge_sizes=np.asarray([len(e) for e in H.edges], dtype=np.int64),
        edge_flat=np.asarray(edge_flat, dtype=np.int64),
        edge_ptr=np.asarray(edge_ptr, dtype=np.int64),
        edge_coef=np.asarray(edge_coef, dtype=np.float64),
    )
    for arr in (table.deg, table.sub_idx, table.sub_ptr, table.sub_coef,
                table.edge_sizes, table.edge_flat, table.edge_ptr, table.edge_coef):
        arr.setflags(write=False)
    return table


def laplacian_form(H: Hypergraph, x) -> float:
    """Total order-m Laplacian form at x (m = largest edge size of H)."""
    x = _check_point(x, H.n)
    if not H.edges:
        return 0.0
    t = form_table(H)
    return kernels.active().form_value(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, x)


def laplacian_form_batch(H: Hypergraph, X) -> np.ndarray:
    """Laplacian form evaluated on each row of X (rows must be nonnegative)."""
    X = np.ascontiguousarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != H.n:
        raise DimensionMismatch(f"expected (rows, {H.n}) array, got {X.shape}")
    if (X < 0).any():
        raise NegativeEntry("evaluation points must be nonnegative")
    if not H.edges:
        return np.zeros(X.shape[0])
    t = form_table(H)
    return kernels.active().form_value_batch(t.deg, t.m, t.sub_idx, t.sub_ptr,
                                             t.sub_coef, X)


def laplacian_gradient(H: Hypergraph, x) -> np.ndarray:
    """Analytic gradient of laplacian_form with respect to x."""
    x = _check_point(x, H.n)
    if not H.edges:
        return np.zeros(H.n)
    t = form_table(H)
    _, grad = kernels.active().form_grad(t.deg, t.m, t.sub_idx, t.sub_ptr,
                                         t.sub_coef, x)
    return grad


def dense_contraction_oracle(H: Hypergraph, x) -> float:
    """Independent evaluation of the form by enumerating all n^m tuples of
    the degree-minus-adjacency tensor. Guarded at n^m <= 10^7."""
    x = _check_point(x, H.n)
    if not H.edges:
        return 0.0
    t = form_table(H)
    if float(H.n) ** t.m > 1e7:
        raise InstanceTooLarge(f"n^m = {H.n}^{t.m} exceeds the 1e7 oracle guard")
    return kernels.active().dense_contraction(
        x, t.m, t.deg, t.edge_sizes, t.edge_flat, t.edge_ptr, t.edge_coef
    )
