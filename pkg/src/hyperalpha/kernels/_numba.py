"""Numba-compiled kernels (default backend when numba imports).

Mirrors the numpy backend's call surface; plain loops, no fastmath so
results are reproducible run to run.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _powm(a, m):
    out = 1.0
    base = a
    e = m
    while e > 0:
        if e & 1:
            out *= base
        e >>= 1
        if e:
            base *= base
    return out


@njit(cache=True)
def form_value(deg, m, sub_idx, sub_ptr, sub_coef, x):
    val = 0.0
    for i in range(x.size):
        val += deg[i] * _powm(x[i], m)
    for s in range(sub_coef.size):
        t = 0.0
        for k in range(sub_ptr[s], sub_ptr[s + 1]):
            t += x[sub_idx[k]]
        val -= sub_coef[s] * _powm(t, m)
    return val


@njit(cache=True)
def form_value_batch(deg, m, sub_idx, sub_ptr, sub_coef, X):
    out = np.empty(X.shape[0])
    for r in range(X.shape[0]):
        out[r] = form_value(deg, m, sub_idx, sub_ptr, sub_coef, X[r])
    return out


@njit(cache=True)
def form_grad(deg, m, sub_idx, sub_ptr, sub_coef, x):
    n = x.size
    grad = np.empty(n)
    val = 0.0
    for i in range(n):
        xm1 = _powm(x[i], m - 1)
        val += deg[i] * xm1 * x[i]
        grad[i] = m * deg[i] * xm1
    for s in range(sub_coef.size):
        t = 0.0
        for k in range(sub_ptr[s], sub_ptr[s + 1]):
            t += x[sub_idx[k]]
        tm1 = _powm(t, m - 1)
        val -= sub_coef[s] * tm1 * t
        w = m * sub_coef[s] * tm1
        for k in range(sub_ptr[s], sub_ptr[s + 1]):
            grad[sub_idx[k]] -= w
    return val, grad


@njit(cache=True)
def descend(deg, m, sub_idx, sub_ptr, sub_coef, x0, j0, max_iter, tol, step0, shrink):
    n = x0.size
    x = x0.copy()
    f = form_value(deg, m, sub_idx, sub_ptr, sub_coef, x)
    converged = False
    y = np.empty(n)
    for _ in range(max_iter):
        f_prev = f
        _, g = form_grad(deg, m, sub_idx, sub_ptr, sub_coef, x)
        nonzero = False
        for i in range(n):
            g[i] = g[i] - m * f * _powm(x[i], m - 1)
        g[j0] = 0.0
        for i in range(n):
            if g[i] != 0.0:
                nonzero = True
                break
        if not nonzero:
            converged = True
            break
        t = step0
        accepted = False
        for _ in range(41):
            p = 0.0
            for i in range(n):
                yi = x[i] - t * g[i]
                if yi < 0.0:
                    yi = 0.0
                y[i] = yi
            y[j0] = 0.0
            for i in range(n):
                p += _powm(y[i], m)
            if p > 0.0:
                c = p ** (1.0 / m)
                for i in range(n):
                    y[i] /= c
                fy = form_value(deg, m, sub_idx, sub_ptr, sub_coef, y)
                if fy < f:
                    for i in range(n):
                        x[i] = y[i]
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


@njit(cache=True)
def _cut_better(b1, s1, m1, b0, s0, m0):
    left = b1 * s0
    right = b0 * s1
    if left != right:
        return left < right
    if s1 != s0:
        return s1 < s0
    d = m1 ^ m0
    return (m1 & (d & (-d))) != 0


@njit(cache=True)
def iso_sweep(n, half, edge_masks):
    best_b = np.int64(-1)
    best_s = np.int64(1)
    best_m = np.int64(0)
    for mask in range(1, 1 << n):
        pc = 0
        t = mask
        while t:
            t &= t - 1
            pc += 1
        if pc > half:
            continue
        b = 0
        for e in range(edge_masks.size):
            inter = mask & edge_masks[e]
            if inter != 0 and inter != edge_masks[e]:
                b += 1
        if best_b < 0 or _cut_better(np.int64(b), np.int64(pc), np.int64(mask),
                                     best_b, best_s, best_m):
            best_b = np.int64(b)
            best_s = np.int64(pc)
            best_m = np.int64(mask)
    return best_b, best_s, best_m


@njit(cache=True)
def jacobi_eigvals(A):
    A = A.copy()
    n = A.shape[0]
    if n < 2:
        return np.diag(A).copy()
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += A[i, j] * A[i, j]
    target = 1e-10 * np.sqrt(total)
    for _ in range(100):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += A[i, j] * A[i, j]
        off = np.sqrt(2.0 * off)
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
                for i in range(n):
                    if i != p and i != q:
                        aip = A[i, p]
                        aiq = A[i, q]
                        A[i, p] = aip * c - aiq * s
                        A[p, i] = A[i, p]
                        A[i, q] = aiq * c + aip * s
                        A[q, i] = A[i, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    return np.sort(w)


@njit(cache=True)
def dense_contraction(x, m, deg, edge_sizes, edge_flat, edge_ptr, edge_coef):
    n = x.size
    idx = np.zeros(m, dtype=np.int64)
    support = np.empty(m, dtype=np.int64)
    acc = 0.0
    n_edges = edge_sizes.size
    while True:
        prod = 1.0
        for pos in range(m):
            prod *= x[idx[pos]]
        if prod != 0.0:
            # sorted distinct support of the tuple
            k = 0
            for pos in range(m):
                v = idx[pos]
                found = False
                for t in range(k):
                    if support[t] == v:
                        found = True
                        break
                if not found:
                    t = k
                    while t > 0 and support[t - 1] > v:
                        support[t] = support[t - 1]
                        t -= 1
                    support[t] = v
                    k += 1
            val = 0.0
            if k == 1:
                val += deg[idx[0]]
            for e in range(n_edges):
                if edge_sizes[e] == k:
                    lo = edge_ptr[e]
                    match = True
                    for t in range(k):
                        if edge_flat[lo + t] != support[t]:
                            match = False
                            break
                    if match:
                        val -= edge_coef[e]
                        break
            acc += val * prod
        pos = m - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < n:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            break
    return acc
