"""Perfect matchings with the exhaustive-search oracle."""

import random

from equiarbor.graphs import Graph, generate
from equiarbor.matching import has_perfect_matching, maximum_matching

import oracles


def test_complete_graph():
    result = has_perfect_matching(generate("complete", (4,)))
    assert result.has_perfect
    assert len(result.matching) == 2


def test_petersen():
    result = has_perfect_matching(generate("petersen"))
    assert result.has_perfect
    covered = sorted(v for e in result.matching for v in e)
    assert covered == list(range(10))
    assert oracles.exhaustive_max_matching_size(generate("petersen")) == 5


def test_odd_order_is_immediate():
    result = has_perfect_matching(generate("cycle", (5,)))
    assert not result.has_perfect
    assert result.matching is None


def test_even_order_without_perfect_matching():
    # A star on 6 vertices has maximum matching size 1.
    result = has_perfect_matching(generate("star", (6,)))
    assert not result.has_perfect


def test_matching_edges_are_graph_edges():
    for family, params in [("petersen", ()), ("hypercube", (3,)),
                           ("complete_bipartite", (3, 3))]:
        g = generate(family, params)
        for (u, v) in maximum_matching(g):
            assert g.has_edge(u, v)


def test_maximum_matching_size_against_exhaustive_oracle():
    rng = random.Random(41)
    for _ in range(30):
        g = oracles.random_connected_graph(rng, rng.randint(2, 10))
        assert len(maximum_matching(g)) == oracles.exhaustive_max_matching_size(g)
    # Also a couple of disconnected graphs.
    g = Graph(6, [(0, 1), (2, 3)])
    assert len(maximum_matching(g)) == 2 == oracles.exhaustive_max_matching_size(g)
