import networkx as nx
import pytest

from brute import nx_cycle_lengths, to_nx
from oddcycles.generators import (
    BadParameterError,
    BlowupSpec,
    blowup,
    complete,
    complete_bipartite,
    cut_vertex_odd_family,
    cycle,
    gnp,
    path,
    petersen,
    theta,
)
from oddcycles.graph import Graph
from oddcycles.invariants import (
    articulation_points,
    bipartite_check,
    chromatic_number,
    is_two_connected,
    odd_girth,
)
from oddcycles.oracle import enumerate_cycles


class TestFamilies:
    def test_complete(self):
        assert (complete(4).n, complete(4).m) == (4, 6)

    def test_kbip(self):
        g = complete_bipartite(4, 4)
        assert (g.n, g.m) == (8, 16)
        assert bipartite_check(g).is_bipartite

    def test_theta(self):
        g = theta(1, 2, 3)
        assert g.n == 5
        assert sorted(nx_cycle_lengths(g)) == [3, 4, 5]

    def test_petersen(self):
        assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())

    @pytest.mark.parametrize(
        "call",
        [lambda: complete(0), lambda: complete_bipartite(0, 3), lambda: cycle(2), lambda: path(0), lambda: theta(1, 1, 2), lambda: gnp(5, 1.5, 0)],
    )
    def test_bad_parameters(self, call):
        with pytest.raises(BadParameterError):
            call()


class TestBlowup:
    def test_c7_by_3(self):
        g = blowup(BlowupSpec(cycle(7), 3))
        assert g.n == 21
        assert g.min_degree() == 6 == 3 * cycle(7).min_degree()
        assert odd_girth(g) == 7
        assert chromatic_number(g) == 3 == chromatic_number(cycle(7))

    def test_identity(self):
        for base in (petersen(), cycle(5), complete(4)):
            assert blowup(base, 1) == base

    def test_k2(self):
        assert nx.is_isomorphic(to_nx(blowup(complete(2), 4)), to_nx(complete_bipartite(4, 4)))

    def test_odd_girth_preserved(self):
        g = blowup(cycle(5), 2)
        assert odd_girth(g) == 5
        assert min(x for x in nx_cycle_lengths(g) if x % 2) == 5

    def test_bad_t(self):
        with pytest.raises(BadParameterError):
            BlowupSpec(cycle(5), 0)


class TestCutFamily:
    def test_m3_l5(self):
        g = cut_vertex_odd_family(3, 5)
        assert g.n == 10
        assert 0 in articulation_points(g)
        assert not is_two_connected(g).ok
        assert odd_girth(g) == 5
        assert {x for x in enumerate_cycles(g).counts if x % 2} == {5}

    def test_m2_l3(self):
        g = cut_vertex_odd_family(2, 3)
        assert {x for x in nx_cycle_lengths(g) if x % 2} == {3}

    @pytest.mark.parametrize("m,l", [(1, 5), (3, 4), (3, 1)])
    def test_bad(self, m, l):
        with pytest.raises(BadParameterError):
            cut_vertex_odd_family(m, l)


class TestGnp:
    def test_empty(self):
        assert gnp(10, 0, 3).m == 0

    def test_full(self):
        assert gnp(10, 1, 3) == complete(10)

    def test_deterministic(self):
        assert list(gnp(50, 0.5, 7).edges()) == list(gnp(50, 0.5, 7).edges())

    def test_seed_matters(self):
        assert gnp(50, 0.5, 7) != gnp(50, 0.5, 8)

    def test_simple(self):
        g = gnp(40, 0.3, 1)
        assert isinstance(g, Graph)
        assert all(v not in g.neighbor_set(v) for v in g.vertices())
