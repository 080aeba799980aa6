"""Tests for the tensor form machinery: covering counts, edge terms, the
total form, its gradient, and the dense contraction oracle."""

import math

import numpy as np
import pytest

import hyperalpha as ha
from hyperalpha.errors import (
    DimensionMismatch,
    EdgeLargerThanOrder,
    InvalidOrder,
    NegativeEntry,
)

import oracles


class TestOmega:
    @pytest.mark.parametrize("m,s,expected", [(2, 2, 2), (3, 2, 6), (1, 1, 1), (4, 3, 36)])
    def test_known_values(self, m, s, expected):
        assert ha.omega(m, s) == expected

    def test_invalid_order(self):
        with pytest.raises(InvalidOrder):
            ha.omega(2, 3)
        with pytest.raises(InvalidOrder):
            ha.omega(3, 0)

    def test_three_way_agreement(self):
        for m in range(1, 13):
            for s in range(1, m + 1):
                value = ha.omega(m, s)
                assert value == oracles.covering_count_by_compositions(m, s)
                assert value == math.factorial(s) * oracles.stirling2(m, s)
                assert value > 0

    def test_exact_beyond_64_bits(self):
        # the covering count peaks at intermediate s and overflows int64
        # from order 19 on; exact integers keep it correct regardless
        worst18 = max(ha.omega(18, s) for s in range(1, 19))
        assert worst18 < 2 ** 63 - 1
        assert ha.omega(19, 12) > 2 ** 63 - 1
        assert ha.omega(20, 15) == (math.factorial(15) * oracles.stirling2(20, 15))


class TestEdgePowerSum:
    def test_pair_order_two(self):
        assert ha.edge_power_sum((1, 2), [1.0, 1.0], 2) == pytest.approx(2.0, abs=1e-14)

    def test_triple_order_three(self):
        assert ha.edge_power_sum((1, 2, 3), [1.0, 1.0, 1.0], 3) == pytest.approx(6.0, abs=1e-13)

    def test_zero_coordinate_kills_sum(self):
        assert ha.edge_power_sum((1, 2), [0.7, 0.0, 0.3], 3) == 0.0

    def test_edge_larger_than_order(self):
        with pytest.raises(EdgeLargerThanOrder):
            ha.edge_power_sum((1, 2, 3), [1.0, 1.0, 1.0], 2)

    def test_matches_surjective_enumeration(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            s = int(rng.integers(2, 5))
            m = int(rng.integers(s, 7))
            x = rng.uniform(0.0, 1.5, size=s + 1)
            e = tuple(range(1, s + 1))
            fast = ha.edge_power_sum(e, x, m)
            brute = oracles.covering_power_sum_brute(e, x, m)
            assert fast == pytest.approx(brute, rel=1e-11, abs=1e-11)


class TestEdgeLaplacianForm:
    def test_constant_gives_zero(self):
        for t in (0.0, 0.3, 1.0, 2.0):
            x = np.full(4, t)
            assert abs(ha.edge_laplacian_form((1, 2, 3), x, 3)) < 1e-12

    def test_pair_indicator(self):
        assert ha.edge_laplacian_form((1, 2), [1.0, 0.0], 2) == pytest.approx(1.0)

    def test_triple_with_zero(self):
        assert ha.edge_laplacian_form((1, 2, 3), [1.0, 1.0, 0.0], 3) == pytest.approx(2.0)

    def test_nonnegative_random(self):
        rng = np.random.default_rng(17)
        for _ in range(500):
            s = int(rng.integers(2, 5))
            m = int(rng.integers(s, 8))
            x = rng.uniform(0.0, 1.0, size=s)
            val = ha.edge_laplacian_form(tuple(range(1, s + 1)), x, m)
            assert val > -1e-12

    def test_equality_iff_constant(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            s = int(rng.integers(2, 5))
            m = int(rng.integers(s, 8))
            e = tuple(range(1, s + 1))
            t = rng.uniform(0.1, 1.0)
            x = np.full(s, t)
            assert abs(ha.edge_laplacian_form(e, x, m)) < 1e-12
            x[int(rng.integers(s))] += 1e-2
            assert ha.edge_laplacian_form(e, x, m) > 1e-9


class TestLaplacianForm:
    def test_constant_vector_vanishes(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            n = int(rng.integers(3, 8))
            H = ha.build(n, oracles.random_hypergraph(rng, n, 2, min(4, n), 3))
            c = rng.uniform(0.0, 2.0)
            assert abs(ha.laplacian_form(H, np.full(n, c))) < 1e-10

    def test_single_graph_edge(self):
        H = ha.build(2, [[1, 2]])
        assert ha.laplacian_form(H, [1.0, 0.0]) == pytest.approx(1.0)

    def test_two_edge_indicator(self):
        H = ha.build(5, [[1, 2, 3], [3, 4, 5]])
        x = np.zeros(5)
        x[:3] = 3.0 ** (-1.0 / 3.0)
        value = ha.laplacian_form(H, x)
        assert value == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert value == pytest.approx(ha.dense_contraction_oracle(H, x), rel=1e-10)

    def test_homogeneity(self):
        rng = np.random.default_rng(41)
        for _ in range(30):
            n = int(rng.integers(3, 7))
            H = ha.build(n, oracles.random_hypergraph(rng, n, 2, min(4, n), 3))
            m = ha.degree_profile(H).m
            x = rng.uniform(0.0, 1.0, size=n)
            c = rng.uniform(0.0, 2.0)
            lhs = ha.laplacian_form(H, c * x)
            rhs = c ** m * ha.laplacian_form(H, x)
            assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)

    def test_m2_reduction_exact(self):
        rng = np.random.default_rng(53)
        for _ in range(30):
            n = int(rng.integers(3, 9))
            edges = oracles.random_hypergraph(rng, n, 2, 2, int(rng.integers(1, 2 + n)))
            H = ha.build(n, edges)
            x = rng.uniform(0.0, 1.0, size=n)
            assert abs(ha.laplacian_form(H, x) -
                       oracles.quadratic_form_2graph(H.edges, x)) < 1e-12

    def test_rejects_negative_and_mismatch(self):
        H = ha.build(3, [[1, 2, 3]])
        with pytest.raises(NegativeEntry):
            ha.laplacian_form(H, [1.0, -0.1, 0.0])
        with pytest.raises(DimensionMismatch):
            ha.laplacian_form(H, [1.0, 0.0])

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(61)
        H = ha.build(5, [[1, 2, 3], [2, 4, 5], [1, 5]])
        X = rng.uniform(0.0, 1.0, size=(40, 5))
        vals = ha.laplacian_form_batch(H, X)
        for row, val in zip(X, vals):
            assert val == pytest.approx(ha.laplacian_form(H, row), rel=1e-12, abs=1e-14)


class TestGradient:
    def test_zero_at_constant(self):
        H = ha.build(4, [[1, 2, 3], [2, 3, 4]])
        g = ha.laplacian_gradient(H, np.full(4, 0.8))
        assert np.allclose(g, 0.0, atol=1e-10)

    def test_single_graph_edge(self):
        H = ha.build(2, [[1, 2]])
        g = ha.laplacian_gradient(H, [1.0, 0.0])
        assert g == pytest.approx([2.0, -2.0])

    def test_matches_finite_differences(self):
        rng = np.random.default_rng(71)
        for _ in range(30):
            n = int(rng.integers(3, 7))
            H = ha.build(n, oracles.random_hypergraph(rng, n, 2, min(4, n), 3))
            x = rng.uniform(0.1, 1.5, size=n)
            analytic = ha.laplacian_gradient(H, x)
            fd = oracles.finite_difference_gradient(lambda y: ha.laplacian_form(H, y), x)
            err = np.linalg.norm(analytic - fd) / max(np.linalg.norm(analytic), 1e-12)
            assert err <= 1e-6


class TestDenseOracle:
    def test_single_edge_values(self):
        H = ha.build(3, [[1, 2, 3]])
        x = np.array([1.0, 2.0, 3.0])
        assert ha.dense_contraction_oracle(H, x) == pytest.approx(
            ha.laplacian_form(H, x), rel=1e-12)

    def test_graph_equals_quadratic_form(self):
        rng = np.random.default_rng(83)
        edges = oracles.random_hypergraph(rng, 6, 2, 2, 7)
        H = ha.build(6, edges)
        x = rng.uniform(0.0, 1.0, size=6)
        assert ha.dense_contraction_oracle(H, x) == pytest.approx(
            oracles.quadratic_form_2graph(H.edges, x), rel=1e-12)

    def test_ones_vanishes(self):
        H = ha.build(4, [[1, 2, 3], [2, 3, 4]])
        assert abs(ha.dense_contraction_oracle(H, np.ones(4))) < 1e-12

    def test_random_equivalence(self):
        rng = np.random.default_rng(97)
        for _ in range(40):
            n = int(rng.integers(3, 9))
            H = ha.build(n, oracles.random_hypergraph(rng, n, 2, min(4, n), 3))
            if float(n) ** ha.degree_profile(H).m > 1e5:
                continue
            x = rng.uniform(0.0, 1.5, size=n)
            a = ha.laplacian_form(H, x)
            b = ha.dense_contraction_oracle(H, x)
            assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-30)

    def test_guard(self):
        H = ha.build(30, [list(range(1, 7))])
        with pytest.raises(ha.errors.InstanceTooLarge):
            ha.dense_contraction_oracle(H, np.ones(30) / 30)
