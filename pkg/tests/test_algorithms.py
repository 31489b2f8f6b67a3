import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from hyperind.algorithms import (
    C2_SHARP,
    average_degree_reduce,
    akpss_constant,
    bounds_table,
    dlr_probability,
    dlr_reduce,
    greedy_in_order,
    kappa,
    randomized_greedy,
)
from hyperind.exact import independence_number
from hyperind.generators import gen_empty, gen_random_regular, gen_steiner_triple
from hyperind.hypergraph import build, is_independent
from test_hypergraph import hypergraphs


class TestGreedy:
    def test_no_edges(self):
        assert randomized_greedy(gen_empty(6), 3).size == 6

    @pytest.mark.parametrize("seed", range(10))
    def test_single_edge(self, edge3, seed):
        trace = randomized_greedy(edge3, seed)
        assert trace.size == 2
        (blocked,) = trace.rejected_at
        assert blocked == trace.order[-1] and trace.rejected_at[blocked] == 0

    def test_fano_many_seeds(self, fano_plane):
        sizes = np.array([randomized_greedy(fano_plane, s).size for s in range(10_000)])
        assert 3 <= sizes.mean() <= 4
        assert sizes.max() <= 4

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(), st.integers(0, 2**32))
    def test_independent_and_replayable(self, H, seed):
        trace = randomized_greedy(H, seed)
        assert is_independent(H, trace.accepted)
        assert greedy_in_order(H, trace.order) == trace
        assert randomized_greedy(H, seed) == trace
        assert trace.size <= independence_number(H)[0]
        assert sorted(trace.order) == list(range(H.n))


class TestDLR:
    def test_p_one_is_identity(self, fano_plane):
        red = dlr_reduce(fano_plane, 1.0, 0)
        assert red.sub == fano_plane and red.vertex_map == tuple(range(7)) and red.removed == 0

    def test_auto_probability(self):
        mpmath.mp.dps = 30
        assert dlr_probability(2, 100) == pytest.approx(float(mpmath.mpf(600) ** mpmath.mpf(-0.4)), abs=1e-12)
        assert dlr_probability(2, 100) == pytest.approx(0.0774, abs=5e-5)

    def test_auto_uses_max_degree(self):
        H = gen_steiner_triple(9)
        red = dlr_reduce(H, "auto", 0)
        assert red.p == pytest.approx(dlr_probability(2, 4)) and not red.degenerate_p

    def test_degenerate_auto(self):
        red = dlr_reduce(gen_empty(4), "auto", 0)
        assert red.p == 1.0 and red.degenerate_p and red.sub.n == 4

    def test_half_keeps_about_half(self):
        red = dlr_reduce(gen_empty(1000), 0.5, 9)
        assert abs(red.kept.size - 500) <= 3 * math.sqrt(1000 * 0.25)

    def test_bad_p(self, edge3):
        for p in (0, -0.1, 1.5):
            with pytest.raises(ValueError):
                dlr_reduce(edge3, p, 0)

    def test_induced_edges_only(self):
        H = gen_steiner_triple(13)
        red = dlr_reduce(H, 0.6, 4)
        kept = set(red.kept)
        expected = {e for e in H.edges if set(e) <= kept}
        assert {tuple(red.vertex_map[v] for v in e) for e in red.sub.edges} == expected

    def test_keep_indicators_are_bernoulli(self):
        # per-vertex keep counts over 10^4 seeds against Binomial(10^4, p)
        n, p, trials = 20, 0.3, 10_000
        H = gen_empty(n)
        counts = np.zeros(n)
        for seed in range(trials):
            counts += np.array([v in dlr_reduce(H, p, seed).kept for v in range(n)])
        observed = np.stack([counts, trials - counts], axis=1).ravel()
        expected = np.tile([trials * p, trials * (1 - p)], n)
        chi2 = float(((observed - expected) ** 2 / expected).sum())
        assert stats.chi2.sf(chi2, df=n) > 1e-3


class TestAverageDegree:
    def test_regular_removes_nothing(self):
        H = gen_random_regular(12, 2, 3, 0)
        assert average_degree_reduce(H, 1.5).removed == 0

    def test_star_heavy(self):
        # vertex 0 in 10 edges, every other vertex in exactly one
        edges = [(0, 2 * i + 1, 2 * i + 2) for i in range(10)]
        H = build(21, 2, edges)
        red = average_degree_reduce(H, 2)
        assert red.removed == 1 and 0 not in red.kept and red.sub.m == 0

    def test_no_edges(self):
        assert average_degree_reduce(gen_empty(5), 3).removed == 0

    def test_factor_must_exceed_one(self, edge3):
        with pytest.raises(ValueError):
            average_degree_reduce(edge3, 1)

    @settings(max_examples=60, deadline=None)
    @given(hypergraphs(), st.floats(1.01, 10))
    def test_markov_bound(self, H, factor):
        assert average_degree_reduce(H, factor).removed <= H.n / factor


class TestBounds:
    def test_kappa2(self):
        assert kappa(2) == 3 / 32
        assert C2_SHARP == 1 / 8

    def test_kappa_general(self):
        mpmath.mp.dps = 30
        for r in range(2, 7):
            exact = (r - 1) ** (1 - mpmath.mpf(1) / r) * (2**r - 1) / (r ** (2 + mpmath.mpf(2) / r) * 2**r)
            assert kappa(r) == pytest.approx(float(exact), rel=1e-14)

    def test_akpss(self):
        assert akpss_constant(2) == pytest.approx(0.00114007, abs=1e-8)
        assert bounds_table(1, 2, math.e).akpss == pytest.approx(akpss_constant(2) * math.exp(-0.5), rel=1e-14)

    def test_shearer(self):
        t = bounds_table(1, 1, 2)
        assert t.shearer_graph == pytest.approx(2 * math.log(2) - 1, abs=1e-12)
        assert bounds_table(1, 2, 2).shearer_graph is None
        assert bounds_table(1, 1, 1.5).shearer_graph is None

    def test_basic_sampling(self):
        assert bounds_table(32, 2, 16).basic_sampling == pytest.approx(4.0, rel=1e-15)
        assert bounds_table(10, 1, 4).basic_sampling is None

    def test_main_theorem_and_rr(self):
        t = bounds_table(100, 3, 50)
        rate = (math.log(50) / 50) ** (1 / 3)
        assert t.main_theorem == pytest.approx(kappa(3) * rate * 100)
        assert t.random_regular_ref == pytest.approx((4 / 3) ** (1 / 3) * rate * 100)
        assert bounds_table(100, 1, 50).main_theorem is None

    def test_nv_interval(self):
        t = bounds_table(1000, 2, 1e6, g=1)
        lo, hi = t.nv_interval
        assert lo <= hi
        assert bounds_table(10, 2, 10).nv_interval is None

    @given(st.integers(1, 10**6), st.integers(1, 6), st.floats(2, 1e6))
    def test_values_nonnegative(self, n, r, d):
        t = bounds_table(n, r, d)
        for name in ("basic_sampling", "akpss", "main_theorem", "shearer_graph", "random_regular_ref"):
            value = getattr(t, name)
            assert value is None or value >= 0
        assert (t.shearer_graph is not None) == (r == 1)

    def test_ratios_and_text(self, fano_plane):
        t = bounds_table(7, 2, 3, exact_alpha=4)
        assert t.ratios()["basic_sampling"] == pytest.approx(4 / (0.5 * 7 / math.sqrt(3)))
        text = t.to_text()
        assert "main_theorem" in text and "leading term" in text and "alpha=4" in text
        assert "c2_sharp" in t.to_dict() and t.to_dict()["ratios"]["shearer_graph"] is None
