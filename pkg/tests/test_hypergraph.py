"""Tests for hypergraph construction, parsing, and generators."""

import numpy as np
import pytest

import hyperalpha as ha
from hyperalpha.errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeOutOfRange,
    EdgeTooSmall,
    HgrSyntaxError,
    InfeasibleModel,
)

import oracles


class TestBuild:
    def test_single_edge(self):
        H = ha.build(3, [[1, 2, 3]])
        prof = ha.degree_profile(H)
        assert prof.m == 3
        assert prof.s_min == 3

    def test_two_edges_degrees(self):
        H = ha.build(5, [[1, 2, 3], [3, 4, 5]])
        prof = ha.degree_profile(H)
        assert prof.m == 3
        assert prof.s_min == 3
        assert prof.max_degree == 2
        assert prof.degrees[2] == 2

    def test_duplicate_edge_as_set(self):
        with pytest.raises(DuplicateEdge):
            ha.build(2, [[1, 2], [2, 1]])

    def test_edge_out_of_range(self):
        with pytest.raises(EdgeOutOfRange):
            ha.build(3, [[1, 2, 9]])

    def test_edge_too_small(self):
        with pytest.raises(EdgeTooSmall):
            ha.build(3, [[1]])
        H = ha.build(3, [[1]], allow_singletons=True)
        assert H.edges == ((1,),)

    def test_duplicate_vertex_in_edge(self):
        with pytest.raises(DuplicateVertexInEdge):
            ha.build(3, [[1, 1, 2]])

    def test_canonical_order(self):
        H = ha.build(4, [[3, 4], [2, 1]])
        assert H.edges == ((1, 2), (3, 4))


class TestDegreeProfile:
    def test_single_edge(self):
        prof = ha.degree_profile(ha.build(3, [[1, 2, 3]]))
        assert prof.degrees == (1, 1, 1)
        assert prof.max_degree == 1

    def test_two_edges(self):
        prof = ha.degree_profile(ha.build(5, [[1, 2, 3], [3, 4, 5]]))
        assert prof.degrees == (1, 1, 2, 1, 1)
        assert prof.max_degree == 2

    def test_mixed_sizes(self):
        prof = ha.degree_profile(ha.build(4, [[1, 2], [1, 3], [1, 2, 3, 4]]))
        assert prof.s_min == 2
        assert prof.m == 4

    def test_degree_sum_identity_random(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(3, 9))
            edges = oracles.random_hypergraph(rng, n, 2, min(4, n), int(rng.integers(1, 5)))
            H = ha.build(n, edges)
            prof = ha.degree_profile(H)
            assert sum(prof.degrees) == sum(len(e) for e in H.edges)


class TestConnectivity:
    def test_connected_chain(self):
        assert ha.is_connected(ha.build(5, [[1, 2, 3], [3, 4, 5]]))

    def test_disconnected(self):
        assert not ha.is_connected(ha.build(4, [[1, 2], [3, 4]]))

    def test_isolated_vertex(self):
        assert not ha.is_connected(ha.build(3, [[1, 2]]))

    def test_components(self):
        comps = ha.components(ha.build(5, [[1, 2], [4, 5]]))
        assert comps == [(1, 2), (3,), (4, 5)]


class TestParseSerialize:
    def test_single_edge(self):
        H = ha.parse("3\n1 2 3\n")
        assert H == ha.build(3, [[1, 2, 3]])

    def test_two_edges(self):
        H = ha.parse("5\n1 2 3\n3 4 5\n")
        assert H.edge_count == 2

    def test_out_of_range(self):
        with pytest.raises(EdgeOutOfRange):
            ha.parse("3\n1 2 9\n")

    def test_comments_and_crlf(self):
        H = ha.parse("# header\r\n3  # n\r\n\r\n1 2 3\r\n")
        assert H == ha.build(3, [[1, 2, 3]])

    def test_syntax_error_line_number(self):
        with pytest.raises(HgrSyntaxError) as err:
            ha.parse("3\n1 2 3\n1 two\n")
        assert err.value.line == 3

    def test_missing_header(self):
        with pytest.raises(HgrSyntaxError):
            ha.parse("# nothing here\n")

    def test_serializer_layout(self):
        H = ha.build(5, [[3, 4, 5], [1, 2, 3]])
        assert ha.serialize(H) == "5\n1 2 3\n3 4 5\n"

    def test_round_trip_random(self):
        rng = np.random.default_rng(23)
        for _ in range(50):
            n = int(rng.integers(2, 10))
            edges = oracles.random_hypergraph(rng, n, 2, min(5, n), int(rng.integers(1, 5)))
            H = ha.build(n, edges)
            assert ha.parse(ha.serialize(H)) == H


class TestGenerate:
    def test_complete_3_uniform(self):
        H = ha.complete_uniform(4, 3)
        assert H.edge_count == 4
        assert all(len(e) == 3 for e in H.edges)

    def test_hyperpath(self):
        H = ha.hyperpath(5, 3, overlap=1)
        assert H.edges == ((1, 2, 3), (3, 4, 5))

    def test_hyperpath_longer(self):
        H = ha.hyperpath(7, 3, overlap=1)
        assert H.edges == ((1, 2, 3), (3, 4, 5), (5, 6, 7))

    def test_hyperpath_infeasible(self):
        with pytest.raises(InfeasibleModel):
            ha.hyperpath(6, 3, overlap=1)

    def test_uniform_random_deterministic(self):
        a = ha.uniform_random(6, 3, 4, seed=7)
        b = ha.uniform_random(6, 3, 4, seed=7)
        assert a == b
        assert a.edge_count == 4

    def test_uniform_random_infeasible(self):
        with pytest.raises(InfeasibleModel):
            ha.uniform_random(3, 3, 2)

    def test_nonuniform_random_deterministic(self):
        a = ha.nonuniform_random(6, {2: 1.0, 3: 2.0}, 5, seed=3)
        b = ha.nonuniform_random(6, {2: 1.0, 3: 2.0}, 5, seed=3)
        assert a == b
        assert a.edge_count == 5

    def test_nonuniform_random_saturation(self):
        # every distinct edge of the allowed sizes must be used
        H = ha.nonuniform_random(4, {3: 1.0, 4: 1.0}, 5, seed=0)
        assert H.edge_count == 5

    def test_nonuniform_random_infeasible(self):
        with pytest.raises(InfeasibleModel):
            ha.nonuniform_random(4, {3: 1.0, 4: 1.0}, 6)

    def test_generate_dispatch(self):
        H = ha.generate("complete", n=4, k=3)
        assert H.edge_count == 4
        with pytest.raises(InfeasibleModel):
            ha.generate("no-such-model", n=4)

    def test_generated_instances_valid(self):
        rng = np.random.default_rng(5)
        for seed in range(20):
            H = ha.nonuniform_random(int(rng.integers(4, 8)), {2: 1, 3: 1}, 3, seed=seed)
            for e in H.edges:
                assert len(set(e)) == len(e)
                assert all(1 <= v <= H.n for v in e)
