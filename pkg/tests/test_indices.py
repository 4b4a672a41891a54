import math
import random

import pytest
from hypothesis import given, strategies as st

from ggindex.families import complete, complete_bipartite, cycle, path, star
from ggindex.graphs import build_graph, relabel
from ggindex.indices import (
    abc_index,
    all_indices,
    check_bipartite_relation,
    edge_splits,
    gg_index,
    ngg_index,
)

from conftest import connected_graphs


def splits_by_edge(g):
    return {s.edge: (s.n_u, s.n_v) for s in edge_splits(g)}


def test_path4_splits():
    d = splits_by_edge(path(4))
    assert d[(0, 1)] == (1, 3)
    assert d[(1, 2)] == (2, 2)
    assert d[(2, 3)] == (3, 1)


def test_cycle5_splits_leave_equidistant_out():
    # odd cycle: for each edge, one vertex is equidistant and counts for neither
    assert all(s.n_u == 2 and s.n_v == 2 for s in edge_splits(cycle(5)))


def test_complete_graph_splits_are_all_ones():
    assert all(s.n_u == 1 and s.n_v == 1 for s in edge_splits(complete(4)))


def test_gg_of_complete_is_exactly_zero():
    for n in range(2, 13):
        assert gg_index(complete(n)) == 0.0


def test_known_values():
    assert ngg_index(path(4)) == pytest.approx(1.6547, abs=1e-4)
    assert gg_index(cycle(6)) == pytest.approx(4.0, abs=1e-12)
    assert gg_index(star(5)) == pytest.approx(math.sqrt(12), abs=1e-12)
    assert gg_index(complete_bipartite(2, 2)) == pytest.approx(math.sqrt(8), abs=1e-12)
    assert ngg_index(complete_bipartite(3, 3)) == pytest.approx(3.0, abs=1e-12)


def test_abc_values():
    # ABC depends on degrees only
    assert abc_index(path(3)) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert abc_index(star(4)) == pytest.approx(3 * math.sqrt(2 / 3), abs=1e-12)
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert abc_index(g) == pytest.approx(3 * math.sqrt(2) / 2, abs=1e-12)


def test_all_indices_consistent():
    g = cycle(8)
    vals = all_indices(g)
    assert vals.gg == gg_index(g)
    assert vals.ngg == ngg_index(g)
    assert vals.abc == abc_index(g)


@given(connected_graphs())
def test_splits_never_exceed_order(g):
    for s in edge_splits(g):
        assert 1 <= s.n_u and 1 <= s.n_v
        assert s.n_u + s.n_v <= g.n


@given(connected_graphs())
def test_indices_are_relabeling_invariant(g):
    perm = list(range(g.n))
    random.Random(g.m).shuffle(perm)
    h = relabel(g, perm)
    # fsum is exactly rounded, so these are equal as floats, not merely close
    assert gg_index(h) == gg_index(g)
    assert ngg_index(h) == ngg_index(g)
    assert abc_index(h) == abc_index(g)


@given(connected_graphs())
def test_bipartite_relation_check(g):
    assert check_bipartite_relation(g)


def test_bipartite_splits_cover_everything():
    for g in (path(7), cycle(8), complete_bipartite(3, 4), star(9)):
        assert all(s.n_u + s.n_v == g.n for s in edge_splits(g))


def test_gg_matches_ngg_scaling_on_bipartite():
    for g in (path(9), cycle(10), complete_bipartite(2, 5)):
        assert gg_index(g) == pytest.approx(
            ngg_index(g) * math.sqrt(g.n - 2), rel=1e-12
        )


def test_relation_check_catches_a_lie():
    # a non-bipartite graph whose splits all summed to n would be flagged;
    # conversely the check must hold on the triangle via the deficit branch
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert check_bipartite_relation(tri)
    assert all(s.n_u + s.n_v < 3 for s in edge_splits(tri))
