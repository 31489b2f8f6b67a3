import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperind.errors import InfeasibleDegrees, InfeasibleOrder, RetryBudgetExceeded
from hyperind.exact import independence_number
from hyperind.generators import (
    GenSpec,
    gen_bipartite_regular_graph,
    gen_empty,
    gen_loose_path,
    gen_random_linear,
    gen_random_regular,
    gen_single_edge,
    gen_star,
    gen_steiner_triple,
    generate,
    steiner_audit,
)
from hyperind.hypergraph import build


class TestLoosePath:
    def test_one_edge(self):
        assert gen_loose_path(2, 1) == gen_single_edge(2)

    def test_two_edges(self):
        assert gen_loose_path(2, 2).edges == ((0, 1, 2), (2, 3, 4))

    def test_r3_len3(self):
        H = gen_loose_path(3, 3)
        assert (H.n, H.m) == (10, 3) and H.sparsity.uncrowded

    def test_bad(self):
        with pytest.raises(ValueError):
            gen_loose_path(2, 0)


class TestRandomRegular:
    def test_matching(self):
        for seed in range(5):
            H = gen_random_regular(6, 2, 1, seed)
            assert H.m == 2 and H.degrees == (1,) * 6

    def test_n12_d3(self):
        H = gen_random_regular(12, 2, 3, 4)
        assert H.m == 12 and H.degrees == (3,) * 12

    def test_infeasible(self):
        with pytest.raises(InfeasibleDegrees):
            gen_random_regular(5, 2, 1)

    def test_budget(self):
        # only four triples exist on 4 vertices, so a simple 6-regular one cannot
        with pytest.raises(RetryBudgetExceeded):
            gen_random_regular(4, 2, 6, 0, local_budget=50, global_budget=3)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 5), st.integers(1, 3), st.integers(0, 1000))
    def test_regular_and_simple(self, half, d, seed):
        n = 3 * half
        H = gen_random_regular(n, 2, d, seed)
        assert H.degrees == (d,) * n and len(set(H.edges)) == H.m


class TestRandomLinear:
    def test_single(self):
        H = gen_random_linear(6, 2, 1, 3)
        assert H.m == 1 and H.sparsity.linear

    def test_n12_m8(self):
        assert gen_random_linear(12, 2, 8, 0).sparsity.linear

    def test_n4_m3_exhausts(self):
        with pytest.raises(RetryBudgetExceeded):
            gen_random_linear(4, 2, 3, 0)


class TestSteiner:
    @pytest.mark.parametrize("n", [7, 9, 13, 15, 19, 21, 25, 27])
    def test_audit(self, n):
        H = gen_steiner_triple(n)
        assert steiner_audit(H)
        assert H.m == n * (n - 1) // 6
        assert H.degrees == ((n - 1) // 2,) * n
        assert H.sparsity.linear

    def test_n7_fano(self, fano_plane):
        H = gen_steiner_triple(7)
        assert H.m == 7 and H.max_degree == 3
        assert independence_number(H)[0] == independence_number(fano_plane)[0] == 4

    def test_n9(self):
        H = gen_steiner_triple(9)
        assert H.m == 12 and H.max_degree == 4

    @pytest.mark.parametrize("n", [8, 3, 1, 11])
    def test_infeasible(self, n):
        with pytest.raises(InfeasibleOrder):
            gen_steiner_triple(n)

    def test_audit_rejects_partial(self, fano_plane):
        assert not steiner_audit(build(7, 2, fano_plane.edges[:-1]))


class TestBipartite:
    def test_matching(self):
        H = gen_bipartite_regular_graph(4, 1, 0)
        assert H.m == 2 and H.r == 1

    def test_n12_d3(self):
        H = gen_bipartite_regular_graph(12, 3, 5)
        assert H.m == 18 and H.degrees == (3,) * 12 and not H.sparsity.has_3cycle

    def test_infeasible(self):
        with pytest.raises(InfeasibleDegrees):
            gen_bipartite_regular_graph(4, 3)
        with pytest.raises(InfeasibleDegrees):
            gen_bipartite_regular_graph(5, 1)


def test_star():
    H = gen_star(3, 2)
    assert H.edges == ((0, 1, 2, 3), (0, 4, 5, 6)) and gen_star(2, 0).n == 1


def test_empty():
    H = gen_empty(5, 3)
    assert (H.n, H.r, H.m) == (5, 3, 0)


class TestSpec:
    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            GenSpec("lattice", {})

    def test_missing_params(self):
        with pytest.raises(ValueError, match="n, d"):
            GenSpec("random_regular", {"r": 2})

    @pytest.mark.parametrize(
        "spec",
        [
            GenSpec("random_regular", {"n": 9, "r": 2, "d": 2, "seed": 5}),
            GenSpec("random_linear", {"n": 12, "r": 2, "m": 6, "seed": 5}),
            GenSpec("bipartite_graph", {"n": 10, "d": 2, "seed": 5}),
        ],
    )
    def test_seed_determinism(self, spec):
        assert generate(spec) == generate(spec)
        other = GenSpec(spec.kind, {**spec.params, "seed": 6})
        assert generate(other) != generate(spec)

    def test_dispatch(self):
        assert generate(GenSpec("steiner_triple", {"n": 9})).m == 12
        assert generate(GenSpec("loose_path", {"r": 2, "length": 3})).m == 3
        assert generate(GenSpec("single_edge", {"r": 4})).n == 5
        assert generate(GenSpec("empty", {"n": 3, "r": 2})).m == 0
        assert generate(GenSpec("star", {"r": 2, "length": 3})).max_degree == 3
