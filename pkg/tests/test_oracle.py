import json
from math import comb, factorial

import pytest
from hypothesis import given, settings

from brute import nx_cycle_lengths
from conftest import graphs
from oddcycles.generators import complete, complete_bipartite, cycle, gnp, petersen, theta
from oddcycles.graph import Graph, GraphError
from oddcycles.oracle import (
    BadModulusError,
    Spectrum,
    check_all_residues,
    count_cycles_by_length,
    cycle_space_bound,
    enumerate_cycles,
    iter_cycles,
    longest_consecutive_odd_run,
    residue_coverage,
)


def kn_closed_form(n):
    return sum(comb(n, k) * factorial(k - 1) // 2 for k in range(3, n + 1))


class TestGolden:
    def test_k4(self):
        s = enumerate_cycles(complete(4))
        assert (s.total, s.counts) == (7, {3: 4, 4: 3})

    def test_c5(self):
        assert enumerate_cycles(cycle(5)).total == 1

    def test_k33(self):
        s = enumerate_cycles(complete_bipartite(3, 3))
        assert (s.total, s.counts) == (15, {4: 9, 6: 6})

    @pytest.mark.parametrize("n", range(3, 8))
    def test_kn_closed_form(self, n):
        assert enumerate_cycles(complete(n)).total == kn_closed_form(n)
        assert count_cycles_by_length(complete(n)).total == kn_closed_form(n)

    def test_theta(self):
        assert enumerate_cycles(theta(1, 2, 3)).counts == {3: 1, 4: 1, 5: 1}

    def test_petersen_against_networkx(self):
        lengths = nx_cycle_lengths(petersen())
        s = enumerate_cycles(petersen())
        assert s.total == len(lengths)
        assert s.counts == {x: lengths.count(x) for x in set(lengths)}


class TestEnumeration:
    def test_canonical_form(self):
        for cyc in iter_cycles(complete(5)):
            assert cyc[0] == min(cyc) and cyc[1] < cyc[-1]

    def test_cap_truncates(self):
        s = enumerate_cycles(complete(6), cap=10)
        assert s.truncated and s.total == 10

    def test_keep(self):
        s = enumerate_cycles(complete(4), keep=True)
        assert len(s.cycles) == 7 and len(set(s.cycles)) == 7

    def test_bound(self):
        g = gnp(12, 0.4, 3)
        assert enumerate_cycles(g).total <= cycle_space_bound(g)
        assert cycle_space_bound(cycle(5)) == 1

    def test_dp_too_large(self):
        with pytest.raises(GraphError):
            count_cycles_by_length(complete(5), max_n=4)

    @pytest.mark.parametrize("seed", range(20))
    def test_dp_matches_enumeration(self, seed):
        g = gnp(11, 0.45, seed)
        assert count_cycles_by_length(g).counts == enumerate_cycles(g).counts


class TestResidues:
    def test_k6(self):
        s = enumerate_cycles(complete(6))
        assert residue_coverage(s, 5) == {0, 1, 3, 4}
        assert check_all_residues(s, 5).missing == {2}

    def test_k7(self):
        assert check_all_residues(enumerate_cycles(complete(7)), 5).complete

    def test_k44(self):
        s = enumerate_cycles(complete_bipartite(4, 4))
        assert s.lengths == [4, 6, 8]
        assert residue_coverage(s, 5) == {1, 3, 4}
        assert check_all_residues(s, 5).missing == {0, 2}

    def test_empty(self):
        assert residue_coverage(Spectrum(), 3) == frozenset()

    @pytest.mark.parametrize("k", [0, 1, -3])
    def test_bad_modulus(self, k):
        with pytest.raises(BadModulusError):
            residue_coverage([3, 5], k)
        with pytest.raises(BadModulusError):
            check_all_residues([3, 5], k)

    def test_truncated_flag(self):
        rep = check_all_residues(enumerate_cycles(complete(6), cap=3), 3)
        assert rep.truncated


class TestRuns:
    @pytest.mark.parametrize("lengths,run", [({3, 5, 7}, 3), ({4, 6, 8}, 0), ({3, 7, 9, 11}, 3), (set(), 0), ({9}, 1)])
    def test_examples(self, lengths, run):
        assert longest_consecutive_odd_run(lengths) == run

    def test_spectrum_input(self):
        assert longest_consecutive_odd_run(enumerate_cycles(complete(7))) == 3


class TestJson:
    def test_layout(self):
        s = enumerate_cycles(complete(4))
        assert json.loads(s.to_json()) == {"lengths": {"3": 4, "4": 3}, "total": 7, "truncated": False}

    def test_round_trip(self):
        s = enumerate_cycles(gnp(10, 0.5, 1))
        back = Spectrum.from_dict(json.loads(s.to_json()))
        assert (back.counts, back.total, back.truncated) == (s.counts, s.total, s.truncated)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_against_networkx(g: Graph):
    lengths = nx_cycle_lengths(g)
    s = enumerate_cycles(g)
    assert s.total == len(lengths)
    assert s.counts == {x: lengths.count(x) for x in set(lengths)}
    assert count_cycles_by_length(g).counts == s.counts
