"""Vectorized numpy kernels (fallback backend).

Same call surface as the numba backend; selected via HYPERALPHA_BACKEND=numpy
or automatically when numba is unavailable.
"""

import numpy as np

NAME = "numpy"

# lcm(1..24); makes boundary/size ratio comparisons exact in int64
_LCM = 5354228880


def _powm(a, m):
    """Elementwise a**m by repeated squaring (m >= 0 integer; safe at 0)."""
    out = np.ones_like(a)
    base = a.copy()
    e = int(m)
    while e > 0:
        if e & 1:
            out = out * base
        e >>= 1
        if e:
            base = base * base
    return out


def form_value(deg, m, sub_idx, sub_ptr, sub_coef, x):
    val = float(np.dot(deg, _powm(x, m)))
    if sub_coef.size:
        t = np.add.reduceat(x[sub_idx], sub_ptr[:-1])
        val -= float(np.dot(sub_coef, _powm(t, m)))
    return val


def form_value_batch(deg, m, sub_idx, sub_ptr, sub_coef, X):
    out = _powm(X, m) @ deg
    if sub_coef.size:
        step = max(1, 4_000_000 // max(1, sub_idx.size))
        for lo in range(0, X.shape[0], step):
            T = np.add.reduceat(X[lo:lo + step, sub_idx], sub_ptr[:-1], axis=1)
            out[lo:lo + step] -= _powm(T, m) @ sub_coef
    return out


def form_grad(deg, m, sub_idx, sub_ptr, sub_coef, x):
    xm1 = _powm(x, m - 1)
    val = float(np.dot(deg, xm1 * x))
    grad = (float(m) * deg) * xm1
    if sub_coef.size:
        t = np.add.reduceat(x[sub_idx], sub_ptr[:-1])
        tm1 = _powm(t, m - 1)
        val -= float(np.dot(sub_coef, tm1 * t))
        w = (float(m) * sub_coef) * tm1
        grad -= np.bincount(sub_idx, weights=np.repeat(w, np.diff(sub_ptr)),
                            minlength=x.size)
    return val, grad


def descend(deg, m, sub_idx, sub_ptr, sub_coef, x0, j0, max_iter, tol, step0, shrink):
    """Projected gradient descent on the unit m-norm slice with x[j0] pinned to 0.

    Accepts only strictly decreasing steps (backtracking, 40 halvings);
    stops on stationarity, line-search failure, or small relative decrease.
    """
    x = x0.copy()
    f = form_value(deg, m, sub_idx, sub_ptr, sub_coef, x)
    converged = False
    for _ in range(max_iter):
        f_prev = f
        _, g = form_grad(deg, m, sub_idx, sub_ptr, sub_coef, x)
        g = g - (float(m) * f) * _powm(x, m - 1)
        g[j0] = 0.0
        if not np.any(g):
            converged = True
            break
        t = step0
        accepted = False
        for _ in range(41):
            y = x - t * g
            np.maximum(y, 0.0, out=y)
            y[j0] = 0.0
            p = float(np.sum(_powm(y, m)))
            if p > 0.0:
                y /= p ** (1.0 / m)
                fy = form_value(deg, m, sub_idx, sub_ptr, sub_coef, y)
                if fy < f:
                    x = y
                    f = fy
                    accepted = True
                    break
            t *= shrink
        if not accepted:
            converged = True
            break
        if f_prev - f <= tol * f_prev:
            converged = True
            break
    return f, x, converged


def _bitrev(masks, n):
    rev = np.zeros_like(masks)
    for b in range(n):
        rev |= ((masks >> b) & 1) << (n - 1 - b)
    return rev


def _cut_better(b1, s1, m1, b0, s0, m0):
    # exact comparison of b1/s1 vs b0/s0, then smaller set, then lex order
    left = b1 * s0
    right = b0 * s1
    if left != right:
        return left < right
    if s1 != s0:
        return s1 < s0
    d = m1 ^ m0
    return bool(m1 & (d & -d))


def iso_sweep(n, half, edge_masks):
    """Exhaustive min of |boundary(S)| / |S| over 1 <= |S| <= half.

    Returns (boundary, size, mask) of the winner; ties broken by smaller
    size then lexicographically smaller vertex set.
    """
    total = 1 << n
    best_b, best_s, best_m = -1, 1, 0
    chunk = 1 << 20
    for lo in range(1, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        pc = np.bitwise_count(masks).astype(np.int64)
        keep = (pc >= 1) & (pc <= half)
        masks = masks[keep]
        pc = pc[keep]
        if masks.size == 0:
            continue
        b = np.zeros(masks.size, dtype=np.int64)
        for em in edge_masks:
            inter = masks & em
            b += (inter != 0) & (inter != em)
        key = b * (_LCM // pc)
        order = np.lexsort((-_bitrev(masks, n), pc, key))
        i = order[0]
        cb, cs, cm = int(b[i]), int(pc[i]), int(masks[i])
        if best_b < 0 or _cut_better(cb, cs, cm, best_b, best_s, best_m):
            best_b, best_s, best_m = cb, cs, cm
    return best_b, best_s, best_m


def jacobi_eigvals(A):
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm is <= 1e-10 times the
    Frobenius norm of the input. Returns eigenvalues sorted ascending.
    """
    A = np.array(A, dtype=np.float64)
    n = A.shape[0]
    if n < 2:
        return A.diagonal().copy()
    target = 1e-10 * np.sqrt((A * A).sum())
    for _ in range(100):
        off = np.sqrt(2.0 * (np.triu(A, 1) ** 2).sum())
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(1.0 + theta * theta))
                else:
                    t = -1.0 / (-theta + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                new_p = col_p * c - col_q * s
                new_q = col_q * c + col_p * s
                A[:, p] = new_p
                A[p, :] = new_p
                A[:, q] = new_q
                A[q, :] = new_q
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
    return np.sort(A.diagonal().copy())


def dense_contraction(x, m, deg, edge_sizes, edge_flat, edge_ptr, edge_coef):
    """Full sum over all n**m index tuples of the degree-minus-adjacency tensor."""
    n = x.size
    total = n ** int(m)
    edges = [edge_flat[edge_ptr[i]:edge_ptr[i + 1]] for i in range(edge_sizes.size)]
    acc = 0.0
    chunk = 200_000
    for lo in range(0, total, chunk):
        ids = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        tup = np.empty((ids.size, m), dtype=np.int64)
        rem = ids
        for pos in range(m - 1, -1, -1):
            tup[:, pos] = rem % n
            rem = rem // n
        prod = x[tup].prod(axis=1)
        vals = np.zeros(ids.size)
        const = (tup == tup[:, :1]).all(axis=1)
        vals[const] += deg[tup[const, 0]]
        for e, coef in zip(edges, edge_coef):
            hit = np.isin(tup, e).all(axis=1)
            for v in e:
                hit &= (tup == v).any(axis=1)
            vals[hit] -= coef
        acc += float(np.dot(vals, prod))
    return acc
