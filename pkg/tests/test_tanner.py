from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as hst

from absorbsets import families, gf2
from absorbsets.tanner import (
    TannerGraph,
    closure_condition,
    from_biadjacency,
    induced_profile,
    is_absorbing,
    structure_summary,
    subgraph,
)
from oracles import brute_absorbing
from strategies import tanner_graphs


def vs(*labels: int) -> set[int]:
    """1-based labels to 0-based indices."""
    return {i - 1 for i in labels}


@pytest.fixture(scope="module")
def fig1():
    return families.fixture("fig1").graph


class TestConstruction:
    def test_zero_matrix_is_edgeless(self):
        G = from_biadjacency(gf2.zeros(3, 4))
        assert G.num_variables == 4 and G.num_checks == 3 and G.edges == ()

    def test_identity_gives_disjoint_edges(self):
        G = from_biadjacency(gf2.identity(2))
        assert G.edges == ((0, 0), (1, 1))

    def test_ex7_degree_sequence(self):
        G = from_biadjacency(families.ex7_matrix())
        assert all(G.check_degree(c) == 2 for c in range(G.num_checks))
        deg3 = {v for v in range(G.num_variables) if G.var_degree(v) == 3}
        assert deg3 == vs(2, 3, 6, 7, 9, 10)
        assert all(G.var_degree(v) == 2 for v in set(range(11)) - deg3)

    def test_rejects_duplicates_and_range(self):
        with pytest.raises(ValueError):
            TannerGraph(2, ((0, 0),))
        with pytest.raises(ValueError):
            TannerGraph(2, ((0, 2),))
        with pytest.raises(ValueError):
            TannerGraph.from_edges(2, 1, [(0, 0), (0, 0)])

    @pytest.mark.parametrize("name", families.FIXTURE_NAMES)
    def test_biadjacency_round_trip(self, name):
        G = families.fixture(name).graph
        assert from_biadjacency(G.to_biadjacency()) == G

    @given(tanner_graphs())
    def test_round_trip_random(self, G):
        assert from_biadjacency(G.to_biadjacency()) == G


class TestProfiles:
    def test_fig1_whole_set(self, fig1):
        p = induced_profile(fig1, vs(1, 2, 3, 4))
        assert (p.a, p.b) == (4, 2)
        assert p.odd_checks == vs(5, 7)

    def test_fig1_triple(self, fig1):
        p = induced_profile(fig1, vs(1, 2, 3))
        assert (p.a, p.b) == (3, 3)
        assert p.odd_checks == vs(3, 4, 5)

    def test_fig2a_whole_set(self):
        p = induced_profile(families.fixture("fig2a").graph, range(5))
        assert (p.a, p.b) == (5, 3)
        assert p.odd_checks == vs(7, 8, 9)

    def test_empty_subset_rejected(self, fig1):
        with pytest.raises(ValueError):
            induced_profile(fig1, [])
        with pytest.raises(ValueError):
            is_absorbing(fig1, set())

    @given(tanner_graphs(), hst.data())
    def test_profile_invariants(self, G, data):
        S = data.draw(hst.sets(hst.integers(0, G.num_variables - 1), min_size=1))
        p = induced_profile(G, S)
        assert p.odd_checks | p.even_checks == G.neighborhood(S)
        assert not p.odd_checks & p.even_checks
        assert all(d >= 1 for d in p.check_degrees.values())
        # b from the column-restricted submatrix
        H = G.to_biadjacency()
        cols = sorted(S)
        sub = H[sorted(G.neighborhood(S))][:, cols] if G.neighborhood(S) else np.zeros((0, len(cols)))
        assert p.b == int((sub.sum(axis=1) % 2).sum())
        if p.absorbing:
            assert all(e > o for e, o in p.tallies.values())


class TestAbsorbing:
    def test_fig1_examples(self, fig1):
        assert is_absorbing(fig1, vs(1, 2, 3, 4)) == (4, 2)
        assert is_absorbing(fig1, vs(1, 2, 3)) == (3, 3)
        assert is_absorbing(fig1, vs(1, 3, 4)) == (3, 3)
        assert is_absorbing(fig1, vs(1, 2, 4)) is None
        assert is_absorbing(fig1, vs(2, 3, 4)) is None

    def test_fig5_six_subsets(self):
        G = families.fixture("fig5").graph
        found = [is_absorbing(G, S) for S in itertools.combinations(range(10), 6)]
        assert {ab for ab in found if ab is not None} == {(6, 12)}

    @given(tanner_graphs(max_vars=6), hst.data())
    def test_matches_brute_force(self, G, data):
        S = frozenset(data.draw(hst.sets(hst.integers(0, G.num_variables - 1), min_size=1)))
        brute = brute_absorbing([list(c) for c in G.check_nbrs], G.num_variables, len(S))
        assert is_absorbing(G, S) == brute.get(S)

    def test_union_of_disjoint_neighbourhoods(self):
        # two copies of a 4-cycle side by side
        c4 = families.cycle(4)
        G = TannerGraph(8, c4.check_nbrs + tuple(tuple(v + 4 for v in nb) for nb in c4.check_nbrs))
        assert is_absorbing(G, range(4)) == (4, 0)
        assert is_absorbing(G, range(4, 8)) == (4, 0)
        assert is_absorbing(G, range(8)) == (8, 0)


class TestClosureAndStructure:
    def test_fig6_closure(self):
        fx = families.fixture("fig6")
        assert closure_condition(fx.graph, fx.subsets["A1"], vs(1, 4, 5, 8))

    def test_vacuous(self, fig1):
        assert closure_condition(fig1, vs(1), [])

    def test_external_neighbour_breaks_closure(self, fig1):
        # host graph: fig1 plus a fifth variable hanging on c1
        host = TannerGraph(5, ((0, 1, 4),) + fig1.check_nbrs[1:])
        assert not closure_condition(host, vs(1, 2, 3, 4), vs(1))
        assert closure_condition(fig1, vs(1, 2, 3, 4), vs(1))

    def test_path_summary(self):
        s = structure_summary(families.path(5), range(5))
        assert s.connected and s.acyclic
        assert s.leaves == {("v", 0), ("v", 4)}

    def test_cycle_summary(self):
        s = structure_summary(families.cycle(5), range(5))
        assert s.connected and not s.acyclic and not s.leaves

    def test_two_disjoint_cycles(self):
        c4 = families.cycle(4)
        G = TannerGraph(8, c4.check_nbrs + tuple(tuple(v + 4 for v in nb) for nb in c4.check_nbrs))
        assert not structure_summary(G, range(8)).connected

    def test_subgraph_relabels(self, fig1):
        sub, vmap, cmap = subgraph(fig1, vs(1, 3))
        assert vmap == [0, 2]
        assert cmap == sorted(fig1.neighborhood(vs(1, 3)))
        assert sub.num_variables == 2 and sub.num_checks == len(cmap)
