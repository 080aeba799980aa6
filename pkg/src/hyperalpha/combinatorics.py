"""Exact combinatorial invariants: cuts, clique expansion, diameter, and
2-graph algebraic connectivity."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import (
    ConstantVector,
    InstanceTooLarge,
    NoEdges,
    TooLarge,
    ValidationError,
)
from .hypergraph import Hypergraph

_ISO_MAX_N = 24
_LAMBDA2_MAX_N = 2000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count and sorted unordered pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CutResult:
    """Exact isoperimetric minimum with its witness subset."""

    value: Fraction
    witness_set: tuple[int, ...]
    boundary_size: int


def build_graph(n, pairs) -> Graph:
    seen = set()
    canon = []
    for a, b in pairs:
        if a == b:
            raise ValidationError(f"self-loop at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValidationError(f"edge ({a},{b}) outside [1, {n}]")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValidationError(f"duplicate edge {key}")
        seen.add(key)
        canon.append(key)
    canon.sort()
    return Graph(n=int(n), edges=tuple(canon))


def boundary(H: Hypergraph, S) -> tuple[tuple[int, ...], ...]:
    """Edges with vertices in both S and its complement."""
    S = set(S)
    for v in S:
        if not (1 <= v <= H.n):
            raise ValidationError(f"vertex {v} outside [1, {H.n}]")
    out = []
    for e in H.edges:
        inside = sum(1 for v in e if v in S)
        if 0 < inside < len(e):
            out.append(e)
    return tuple(out)


def isoperimetric_number(H: Hypergraph) -> CutResult:
    """Exact min of |boundary(S)|/|S| over 1 <= |S| <= floor(n/2).

    Exhaustive bitmask sweep; ties broken by smaller |S|, then by
    lexicographically smaller vertex set. Guarded at n <= 24.
    """
    if not H.edges:
        raise NoEdges("isoperimetric number needs at least one edge")
    if H.n > _ISO_MAX_N:
        raise InstanceTooLarge(f"n={H.n} exceeds the exhaustive guard {_ISO_MAX_N}")
    if H.n < 2:
        raise ValidationError("isoperimetric number needs n >= 2")
    edge_masks = np.array(
        [sum(1 << (v - 1) for v in e) for e in H.edges], dtype=np.int64
    )
    b, s, mask = kernels.active().iso_sweep(H.n, H.n // 2, edge_masks)
    witness = tuple(v for v in range(1, H.n + 1) if mask >> (v - 1) & 1)
    return CutResult(value=Fraction(int(b), int(s)), witness_set=witness,
                     boundary_size=int(b))


def clique_expansion(H: Hypergraph) -> Graph:
    """2-graph joining u, v whenever some hyperedge contains both."""
    pairs = set()
    for e in H.edges:
        for i in range(len(e)):
            for j in range(i + 1, len(e)):
                pairs.add((e[i], e[j]))
    return Graph(n=H.n, edges=tuple(sorted(pairs)))


def _adjacency_lists(G: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(G.n + 1)]
    for a, b in G.edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def graph_diameter(G: Graph) -> float:
    """Max BFS distance over all pairs; math.inf when disconnected."""
    if G.n == 1:
        return 0
    adj = _adjacency_lists(G)
    worst = 0
    for src in range(1, G.n + 1):
        dist = [-1] * (G.n + 1)
        dist[src] = 0
        queue = deque([src])
        reached = 1
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                    reached += 1
        if reached < G.n:
            return math.inf
        worst = max(worst, max(dist[1:]))
    return worst


def diameter(H: Hypergraph) -> float:
    """Hypergraph diameter via shortest paths in the clique expansion."""
    return graph_diameter(clique_expansion(H))


def laplacian_matrix(G: Graph) -> np.ndarray:
    L = np.zeros((G.n, G.n))
    for a, b in G.edges:
        L[a - 1, a - 1] += 1.0
        L[b - 1, b - 1] += 1.0
        L[a - 1, b - 1] -= 1.0
        L[b - 1, a - 1] -= 1.0
    return L


def lambda2(G: Graph) -> float:
    """Second-smallest Laplacian eigenvalue by cyclic Jacobi rotations."""
    if G.n < 2:
        raise ValidationError("lambda2 needs at least 2 vertices")
    if G.n > _LAMBDA2_MAX_N:
        raise TooLarge(f"n={G.n} exceeds the dense eigensolver guard {_LAMBDA2_MAX_N}")
    w = kernels.active().jacobi_eigvals(laplacian_matrix(G))
    val = float(w[1])
    if -1e-9 * max(1.0, float(abs(w[-1]))) < val < 0.0:
        val = 0.0
    return val


def fiedler_quotient(G: Graph, x) -> float:
    """2n times the edge-sum/all-pairs-sum quotient of squared differences.

    Lower-bounded by lambda2(G) for every non-constant x.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (G.n,):
        raise ValidationError(f"expected vector of length {G.n}, got {x.shape}")
    if np.all(x == x[0]):
        raise ConstantVector("quotient undefined for constant vectors")
    num = 0.0
    for a, b in G.edges:
        d = x[a - 1] - x[b - 1]
        num += d * d
    n = G.n
    denom = 2.0 * n * float(np.dot(x, x)) - 2.0 * float(np.sum(x)) ** 2
    return 2.0 * n * num / denom
