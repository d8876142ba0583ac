from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from absorbsets import families, gf2
from absorbsets.decoder import (
    Outcome,
    Status,
    classify_outcome,
    compute_syndrome,
    convergence_report,
    gallager_b_decode,
)
from absorbsets.tanner import TannerGraph
from oracles import naive_gallager_b
from strategies import tanner_graphs


def bits(text: str) -> np.ndarray:
    return np.array([int(c) for c in text if c in "01"], dtype=np.uint8)


def err(n: int, *labels: int) -> np.ndarray:
    return gf2.indicator([i - 1 for i in labels], n)


@pytest.fixture(scope="module")
def fig2a():
    return families.fixture("fig2a").graph


class TestSyndrome:
    def test_zero_error(self, fig2a):
        assert not compute_syndrome(fig2a, np.zeros(5, dtype=np.uint8)).any()

    def test_example_values(self, fig2a):
        assert compute_syndrome(fig2a, err(5, 2, 4, 5)).tolist() == [1] * 9
        assert compute_syndrome(fig2a, err(5, 1, 2, 3, 4)).tolist() == bits("000011011").tolist()

    def test_length_mismatch(self, fig2a):
        with pytest.raises(ValueError):
            compute_syndrome(fig2a, np.zeros(4, dtype=np.uint8))

    @given(tanner_graphs(), hst.data())
    def test_linearity(self, G, data):
        n = G.num_variables
        e = np.array(data.draw(hst.lists(hst.integers(0, 1), min_size=n, max_size=n)), dtype=np.uint8)
        f = np.array(data.draw(hst.lists(hst.integers(0, 1), min_size=n, max_size=n)), dtype=np.uint8)
        assert np.array_equal(compute_syndrome(G, e ^ f), compute_syndrome(G, e) ^ compute_syndrome(G, f))


class TestDecode:
    def test_zero_syndrome_matches_immediately(self, fig2a):
        t = gallager_b_decode(fig2a, np.zeros(9, dtype=np.uint8))
        assert t.status is Status.MATCHED and t.matched_at == 0
        assert not t.final_estimate.any()

    def test_table_row_two_converges_to_v4(self, fig2a):
        t = gallager_b_decode(fig2a, compute_syndrome(fig2a, err(5, 1, 2, 3, 5)))
        last = t.iterations[-1]
        assert last.estimated_syndrome.tolist() == bits("000000001").tolist()
        assert gf2.support(last.estimated_error) == (3,)
        assert t.status is Status.OSCILLATING and t.period == 1 and t.converged

    def test_table_row_four_cycle(self, fig2a):
        sigma = compute_syndrome(fig2a, err(5, 1, 2, 4, 5))
        assert sigma.tolist() == bits("011001111").tolist()
        t = gallager_b_decode(fig2a, sigma)
        assert t.status is Status.OSCILLATING and t.period == 4
        window = [(r.estimated_syndrome.tolist(), gf2.support(r.estimated_error)) for r in t.terminal_window]
        X, Z = bits("111111000").tolist(), [0] * 9
        assert window == [(X, (1, 2, 3, 4)), (X, (0, 2)), (Z, (1, 2, 3, 4)), (Z, ())]

    def test_rejects_bad_inputs(self, fig2a):
        with pytest.raises(ValueError):
            gallager_b_decode(fig2a, np.zeros(8, dtype=np.uint8))
        with pytest.raises(ValueError):
            gallager_b_decode(fig2a, np.zeros(9, dtype=np.uint8), max_iters=0)

    def test_degree_zero_variable_estimates_zero(self):
        G = TannerGraph(3, ((0, 1),))
        t = gallager_b_decode(G, np.array([1], dtype=np.uint8))
        assert all(r.estimated_error[2] == 0 for r in t.iterations)

    def test_max_iters_cutoff(self):
        G = families.cycle(10)
        t = gallager_b_decode(G, compute_syndrome(G, err(10, 1)), max_iters=3)
        assert t.status is Status.UNMATCHED_AT_MAX_ITERS and len(t.iterations) == 4

    @settings(max_examples=150)
    @given(tanner_graphs(), hst.data())
    def test_matches_node_level_oracle(self, G, data):
        k = G.num_checks
        sigma = data.draw(hst.lists(hst.integers(0, 1), min_size=k, max_size=k))
        t = gallager_b_decode(G, np.array(sigma, dtype=np.uint8), max_iters=30)
        ref = naive_gallager_b([list(c) for c in G.check_nbrs], G.num_variables, sigma, len(t.iterations) - 1)
        for rec, (s_hat, e_hat) in zip(t.iterations[1:], ref):
            assert rec.estimated_syndrome.tolist() == s_hat
            assert rec.estimated_error.tolist() == e_hat

    @given(tanner_graphs(), hst.data())
    def test_trace_invariants_and_determinism(self, G, data):
        k = G.num_checks
        sigma = np.array(data.draw(hst.lists(hst.integers(0, 1), min_size=k, max_size=k)), dtype=np.uint8)
        t = gallager_b_decode(G, sigma)
        again = gallager_b_decode(G, sigma)
        assert t.status is again.status and len(t.iterations) == len(again.iterations)
        for a, b in zip(t.iterations, again.iterations):
            assert np.array_equal(a.var_to_check, b.var_to_check)
            assert np.array_equal(a.check_to_var, b.check_to_var)
        assert t.status is not Status.UNMATCHED_AT_MAX_ITERS
        if t.status is Status.MATCHED:
            assert np.array_equal(t.iterations[t.matched_at].estimated_syndrome, sigma)
        else:
            start, end = t.iterations[t.cycle_start], t.iterations[t.cycle_start + t.period]
            assert t.period >= 1
            assert np.array_equal(start.var_to_check, end.var_to_check)
            assert np.array_equal(start.check_to_var, end.check_to_var)
            assert not any(np.array_equal(r.estimated_syndrome, sigma) for r in t.iterations[1:])


class TestClassify:
    def test_exact(self, fig2a):
        e = np.zeros(5, dtype=np.uint8)
        t = gallager_b_decode(fig2a, compute_syndrome(fig2a, e))
        assert classify_outcome(e, t, fig2a.to_biadjacency()) is Outcome.EXACT_RECOVERY

    @pytest.mark.parametrize("a", [5, 7, 9])
    def test_odd_cycle_triple_is_logical(self, a):
        G = families.cycle(a)
        e = err(a, 1, 2, (a + 3) // 2)
        t = gallager_b_decode(G, compute_syndrome(G, e))
        assert t.status is Status.MATCHED and not t.final_estimate.any()
        assert classify_outcome(e, t, G.to_biadjacency()) is Outcome.LOGICAL_ERROR

    @pytest.mark.parametrize("a", [2, 4, 6])
    def test_all_ones_degenerate_when_in_rowspace(self, a):
        G = families.path(a)
        e = np.ones(a, dtype=np.uint8)
        t = gallager_b_decode(G, compute_syndrome(G, e))
        assert gf2.rowspace_contains(G.to_biadjacency(), e)
        assert classify_outcome(e, t, G.to_biadjacency()) is Outcome.DEGENERATE_RECOVERY

    def test_mismatched_outcomes(self, fig2a):
        H = fig2a.to_biadjacency()
        e = err(5, 1, 2, 3, 4)
        assert classify_outcome(e, gallager_b_decode(fig2a, compute_syndrome(fig2a, e)), H) is Outcome.SYNDROME_MISMATCH_CONVERGED
        e = err(5, 2, 4, 5)
        assert classify_outcome(e, gallager_b_decode(fig2a, compute_syndrome(fig2a, e)), H) is Outcome.SYNDROME_MISMATCH_OSCILLATING

    def test_dimension_mismatch(self, fig2a):
        e = np.zeros(5, dtype=np.uint8)
        t = gallager_b_decode(fig2a, compute_syndrome(fig2a, e))
        with pytest.raises(ValueError):
            classify_outcome(e, t, gf2.identity(4))


class TestConvergenceReport:
    def test_fig1_rows(self):
        G = families.fixture("fig1").graph
        r = convergence_report(gallager_b_decode(G, compute_syndrome(G, err(4, 1, 2, 3, 4))))
        assert r.vars_not_converged == set() and r.checks_not_matched == {4, 6}
        r = convergence_report(gallager_b_decode(G, compute_syndrome(G, err(4, 1, 2, 4))))
        assert r.vars_not_converged == {0, 1, 3} and r.checks_not_matched == set(range(7))

    def test_matched_is_empty(self, fig2a):
        r = convergence_report(gallager_b_decode(fig2a, compute_syndrome(fig2a, err(5, 1))))
        assert not r.vars_not_converged and not r.checks_not_matched


class TestStructuralBehaviour:
    @given(hst.integers(3, 9), hst.data())
    def test_odd_checks_keep_syndrome_zero(self, a, data):
        pendants = data.draw(hst.sets(hst.integers(0, a - 1), min_size=1))
        G = families.cycle_with_pendants(a, pendants)
        t = gallager_b_decode(G, compute_syndrome(G, np.ones(a, dtype=np.uint8)))
        assert all(not r.estimated_syndrome.any() for r in t.iterations)
        assert t.status is Status.OSCILLATING

    @pytest.mark.parametrize("a", range(3, 9))
    def test_path_singleton_front_advances(self, a):
        # ones sit on c2..c(l+1), capped at the last check, then freeze
        G = families.path(a)
        t = gallager_b_decode(G, compute_syndrome(G, err(a, 1)), max_iters=3 * a)
        assert t.status is Status.OSCILLATING and t.period == 1
        for r in t.iterations[1:]:
            expected = set(range(1, min(r.index + 1, a - 1)))
            assert set(gf2.support(r.estimated_syndrome)) == expected

    @pytest.mark.parametrize("a", [4, 6, 8, 10])
    def test_even_cycle_singletons_oscillate(self, a):
        G = families.cycle(a)
        for v in range(a):
            e = gf2.indicator([v], a)
            t = gallager_b_decode(G, compute_syndrome(G, e))
            assert t.status is Status.OSCILLATING
            assert classify_outcome(e, t, G.to_biadjacency()) is Outcome.SYNDROME_MISMATCH_OSCILLATING
