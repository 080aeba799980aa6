"""Hypergraph representation, validation, text format, and generators.

Vertices are 1-based everywhere in the public API (files, reports, witness
sets); numeric kernels shift to 0-based arrays internally. A Hypergraph is
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeOutOfRange,
    EdgeTooSmall,
    HgrSyntaxError,
    InfeasibleModel,
    ValidationError,
)


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a canonically ordered tuple of edges.

    Each edge is a strictly increasing tuple of vertex indices in [1, n];
    the edge collection is sorted lexicographically and duplicate-free.
    """

    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex edge-membership counts and edge-size extremes.

    degrees[i] is d(v_{i+1}); s_min/m are the smallest/largest edge sizes
    (both 0 when there are no edges).
    """

    degrees: tuple[int, ...]
    max_degree: int
    s_min: int
    m: int


def build(n, edges, allow_singletons: bool = False) -> Hypergraph:
    """Validate and canonicalize a hypergraph.

    Edges are sorted within themselves and the collection is sorted
    lexicographically. Size-1 edges are rejected unless allow_singletons;
    they contribute nothing to the Laplacian form but inflate degrees.
    """
    if n < 1:
        raise ValidationError(f"vertex count must be >= 1, got {n}")
    min_size = 1 if allow_singletons else 2
    canon = []
    seen = set()
    for edge in edges:
        verts = list(edge)
        if len(set(verts)) != len(verts):
            raise DuplicateVertexInEdge(f"repeated vertex in edge {verts}")
        for v in verts:
            if not isinstance(v, (int, np.integer)):
                raise ValidationError(f"vertex index {v!r} is not an integer")
            if v < 1 or v > n:
                raise EdgeOutOfRange(f"vertex {v} outside [1, {n}]")
        if len(verts) < min_size:
            raise EdgeTooSmall(f"edge {verts} has size {len(verts)} < {min_size}")
        if len(verts) > n:
            raise EdgeOutOfRange(f"edge {verts} larger than vertex set")
        key = tuple(sorted(int(v) for v in verts))
        if key in seen:
            raise DuplicateEdge(f"edge {list(key)} appears more than once")
        seen.add(key)
        canon.append(key)
    canon.sort()
    return Hypergraph(n=int(n), edges=tuple(canon))


def degree_profile(H: Hypergraph) -> DegreeProfile:
    """Degrees d(v_i), largest degree, and smallest/largest edge size."""
    deg = [0] * H.n
    for e in H.edges:
        for v in e:
            deg[v - 1] += 1
    sizes = [len(e) for e in H.edges]
    return DegreeProfile(
        degrees=tuple(deg),
        max_degree=max(deg) if deg else 0,
        s_min=min(sizes) if sizes else 0,
        m=max(sizes) if sizes else 0,
    )


def components(H: Hypergraph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples (isolated vertices are
    singleton components)."""
    parent = list(range(H.n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in H.edges:
        r = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r
    groups: dict[int, list[int]] = {}
    for v in range(1, H.n + 1):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(g)) for g in groups.values())


def is_connected(H: Hypergraph) -> bool:
    """True iff every vertex pair is joined by a path through shared edges."""
    return len(components(H)) == 1


def parse(text: str, allow_singletons: bool = False) -> Hypergraph:
    """Parse the .hgr-style text format.

    First non-empty line is n; each later non-empty line is one edge as
    whitespace-separated 1-based indices. '#' starts a comment; LF and CRLF
    both accepted.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        values = []
        for tok in tokens:
            try:
                values.append(int(tok))
            except ValueError:
                raise HgrSyntaxError(f"expected integer, got {tok!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise HgrSyntaxError("header line must contain exactly one integer", lineno)
            n = values[0]
            if n < 1:
                raise HgrSyntaxError(f"vertex count must be >= 1, got {n}", lineno)
        else:
            edges.append(values)
    if n is None:
        raise HgrSyntaxError("missing vertex-count header", 1)
    return build(n, edges, allow_singletons=allow_singletons)


def serialize(H: Hypergraph) -> str:
    """Emit the text format: LF line endings, edges sorted lexicographically."""
    lines = [str(H.n)]
    for e in sorted(H.edges):
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of [1, n]."""
    if k < 2 or k > n:
        raise InfeasibleModel(f"complete model needs 2 <= k <= n, got k={k}, n={n}")
    from itertools import combinations

    return build(n, [list(c) for c in combinations(range(1, n + 1), k)])


def hyperpath(n: int, k: int, overlap: int) -> Hypergraph:
    """Chain of k-edges, consecutive edges sharing `overlap` vertices."""
    if k < 2 or k > n:
        raise InfeasibleModel(f"hyperpath needs 2 <= k <= n, got k={k}, n={n}")
    if n == k:
        return build(n, [list(range(1, k + 1))])
    if overlap < 1 or overlap >= k:
        raise InfeasibleModel(f"overlap must be in [1, k-1], got {overlap}")
    stride = k - overlap
    if (n - k) % stride != 0:
        raise InfeasibleModel(
            f"no hyperpath: n-k={n - k} not a multiple of k-overlap={stride}"
        )
    edges = []
    start = 1
    while start + k - 1 <= n:
        edges.append(list(range(start, start + k)))
        start += stride
    return build(n, edges)


def _sample_subset(rng, n, k):
    return tuple(sorted(int(v) + 1 for v in rng.choice(n, size=k, replace=False)))


def _sample_distinct_edges(rng, n, sizes):
    """Rejection-sample distinct edges with the given (feasible) size sequence.

    Falls back to exact per-size enumeration when rejection stalls near
    saturation; callers guarantee the size sequence never demands more
    distinct k-subsets than exist.
    """
    from collections import Counter
    from itertools import combinations

    chosen: set[tuple[int, ...]] = set()
    order = []
    attempts = 0
    limit = 1000 + 200 * len(sizes)
    i = 0
    while i < len(sizes):
        k = sizes[i]
        edge = _sample_subset(rng, n, k)
        attempts += 1
        if edge not in chosen:
            chosen.add(edge)
            order.append(edge)
            i += 1
        elif attempts > limit:
            need = Counter(sizes[i:])
            for k2 in sorted(need):
                pool = [c for c in combinations(range(1, n + 1), k2)
                        if c not in chosen]
                if len(pool) < need[k2]:
                    raise InfeasibleModel("not enough distinct edges available")
                picks = rng.choice(len(pool), size=need[k2], replace=False)
                for p in sorted(int(q) for q in picks):
                    order.append(pool[p])
                    chosen.add(pool[p])
            break
    return order


def uniform_random(n: int, k: int, edge_count: int, seed: int = 0) -> Hypergraph:
    """edge_count distinct k-edges sampled uniformly; deterministic per seed."""
    if k < 2 or k > n:
        raise InfeasibleModel(f"uniform-random needs 2 <= k <= n, got k={k}, n={n}")
    if edge_count < 1:
        raise InfeasibleModel("edge count must be >= 1")
    if edge_count > math.comb(n, k):
        raise InfeasibleModel(
            f"requested {edge_count} edges but only {math.comb(n, k)} distinct k-subsets exist"
        )
    rng = np.random.default_rng(seed)
    return build(n, _sample_distinct_edges(rng, n, [k] * edge_count))


def nonuniform_random(
    n: int, size_weights: dict[int, float], edge_count: int, seed: int = 0
) -> Hypergraph:
    """Distinct edges whose sizes are drawn from a weighted distribution."""
    sizes_avail = sorted(int(s) for s in size_weights)
    if not sizes_avail:
        raise InfeasibleModel("size_weights is empty")
    for s in sizes_avail:
        if s < 2 or s > n:
            raise InfeasibleModel(f"edge size {s} outside [2, n={n}]")
    weights = np.array([float(size_weights[s]) for s in sizes_avail])
    if (weights < 0).any() or weights.sum() <= 0:
        raise InfeasibleModel("size weights must be nonnegative with positive sum")
    if edge_count < 1:
        raise InfeasibleModel("edge count must be >= 1")
    capacity = sum(math.comb(n, s) for s in sizes_avail if size_weights[s] > 0)
    if edge_count > capacity:
        raise InfeasibleModel(
            f"requested {edge_count} edges but only {capacity} are available"
        )
    rng = np.random.default_rng(seed)
    # draw sizes one at a time against remaining per-size capacity so the
    # sequence is feasible by construction
    caps = {s: math.comb(n, s) for s in sizes_avail}
    sizes = []
    for _ in range(edge_count):
        avail = [i for i, s in enumerate(sizes_avail)
                 if caps[s] > 0 and weights[i] > 0]
        w = weights[avail] / weights[avail].sum()
        pick = int(sizes_avail[avail[int(rng.choice(len(avail), p=w))]])
        caps[pick] -= 1
        sizes.append(pick)
    return build(n, _sample_distinct_edges(rng, n, sizes))


def generate(model: str, *, n: int, seed: int = 0, k: int | None = None,
             edges: int | None = None, overlap: int | None = None,
             size_weights: dict[int, float] | None = None) -> Hypergraph:
    """Dispatch to the named generator model.

    Models: complete (n, k), hyperpath (n, k, overlap), uniform-random
    (n, k, edges, seed), nonuniform-random (n, size_weights, edges, seed).
    """
    if model == "complete":
        if k is None:
            raise InfeasibleModel("complete model requires k")
        return complete_uniform(n, k)
    if model == "hyperpath":
        if k is None or overlap is None:
            raise InfeasibleModel("hyperpath model requires k and overlap")
        return hyperpath(n, k, overlap)
    if model == "uniform-random":
        if k is None or edges is None:
            raise InfeasibleModel("uniform-random model requires k and edges")
        return uniform_random(n, k, edges, seed)
    if model == "nonuniform-random":
        if size_weights is None or edges is None:
            raise InfeasibleModel("nonuniform-random model requires size_weights and edges")
        return nonuniform_random(n, size_weights, edges, seed)
    raise InfeasibleModel(f"unknown model {model!r}")
