"""Numba and numpy kernel backends must agree on every kernel."""

import numpy as np
import pytest

import hyperalpha as ha
from hyperalpha import kernels
from hyperalpha.forms import form_table

import oracles


@pytest.fixture(scope="module")
def backends():
    return kernels.get("numpy"), kernels.get("numba")


@pytest.fixture(scope="module")
def instance():
    rng = np.random.default_rng(211)
    H = ha.build(7, oracles.random_hypergraph(rng, 7, 2, 4, 6))
    t = form_table(H)
    X = rng.uniform(0.0, 1.0, size=(25, 7))
    return H, t, X


def test_form_value_and_batch(backends, instance):
    np_k, nb_k = backends
    _, t, X = instance
    a = np_k.form_value_batch(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
                              np.ascontiguousarray(X))
    b = nb_k.form_value_batch(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
                              np.ascontiguousarray(X))
    assert np.allclose(a, b, rtol=1e-12, atol=1e-13)
    for row in X[:5]:
        va = np_k.form_value(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, row)
        vb = nb_k.form_value(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, row)
        assert va == pytest.approx(vb, rel=1e-12, abs=1e-13)


def test_form_grad(backends, instance):
    np_k, nb_k = backends
    _, t, X = instance
    for row in X[:5]:
        va, ga = np_k.form_grad(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, row)
        vb, gb = nb_k.form_grad(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef, row)
        assert va == pytest.approx(vb, rel=1e-12, abs=1e-13)
        assert np.allclose(ga, gb, rtol=1e-12, atol=1e-12)


def test_descend(backends, instance):
    np_k, nb_k = backends
    _, t, X = instance
    x0 = X[0] / np.sum(X[0] ** t.m) ** (1.0 / t.m)
    x0[2] = 0.0
    for j0 in (0, 2, 5):
        y0 = x0.copy()
        y0[j0] = 0.0
        y0 = y0 / np.sum(y0 ** t.m) ** (1.0 / t.m)
        fa, xa, ca = np_k.descend(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
                                  y0, j0, 2000, 1e-10, 1.0, 0.5)
        fb, xb, cb = nb_k.descend(t.deg, t.m, t.sub_idx, t.sub_ptr, t.sub_coef,
                                  y0, j0, 2000, 1e-10, 1.0, 0.5)
        assert fa == pytest.approx(fb, abs=1e-8)


def test_iso_sweep(backends):
    np_k, nb_k = backends
    rng = np.random.default_rng(223)
    for _ in range(15):
        n = int(rng.integers(3, 13))
        edges = oracles.random_hypergraph(rng, n, 2, min(4, n), 4)
        masks = np.array([sum(1 << (v - 1) for v in e) for e in edges],
                         dtype=np.int64)
        assert tuple(np_k.iso_sweep(n, n // 2, masks)) == \
            tuple(int(v) for v in nb_k.iso_sweep(n, n // 2, masks))


def test_jacobi(backends):
    np_k, nb_k = backends
    rng = np.random.default_rng(227)
    for n in (2, 5, 12, 30):
        B = rng.normal(size=(n, n))
        A = (B + B.T) / 2
        wa = np_k.jacobi_eigvals(A.copy())
        wb = nb_k.jacobi_eigvals(A.copy())
        ref = np.linalg.eigvalsh(A)
        assert np.allclose(wa, ref, atol=1e-8)
        assert np.allclose(wb, ref, atol=1e-8)


def test_dense_contraction(backends, instance):
    np_k, nb_k = backends
    H, t, X = instance
    x = X[3]
    a = np_k.dense_contraction(x, t.m, t.deg, t.edge_sizes, t.edge_flat,
                               t.edge_ptr, t.edge_coef)
    b = nb_k.dense_contraction(x, t.m, t.deg, t.edge_sizes, t.edge_flat,
                               t.edge_ptr, t.edge_coef)
    assert a == pytest.approx(b, rel=1e-11)
    assert a == pytest.approx(ha.laplacian_form(H, x), rel=1e-10)


def test_backend_selection_env():
    assert kernels.get("numpy").NAME == "numpy"
    assert kernels.get("numba").NAME == "numba"
    assert kernels.backend_name() in ("numpy", "numba")
