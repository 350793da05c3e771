import math

import pytest
from hypothesis import given

from spaf.bottleneck import network_bottleneck, network_bottleneck_oracle, strongly_connected_at
from spaf.graph import Graph, distinct_capacities, generate_random, rank_matrix
from strategies import graphs


def test_two_cycle(two_cycle):
    res = network_bottleneck(two_cycle)
    assert res.value == 3
    assert not res.degenerate


def test_directed_cycle():
    g = Graph.from_edges(3, [(1, 2, 4), (2, 3, 6), (3, 1, 2)])
    assert network_bottleneck_oracle(g).value == 2
    assert network_bottleneck(g).value == 2


def test_not_strongly_connected(single_edge):
    assert network_bottleneck(single_edge).value is None
    assert network_bottleneck_oracle(single_edge).value is None


def test_edgeless_graph_has_no_bottleneck():
    res = network_bottleneck(Graph.from_edges(3, []))
    assert res.value is None and res.probe_count == 0 and not res.degenerate


def test_single_vertex_is_degenerate():
    res = network_bottleneck(Graph.from_edges(1, []))
    assert res.value is None and res.degenerate


@pytest.mark.parametrize("seed", range(40))
def test_random_strongly_connected(seed):
    # A Hamiltonian cycle guarantees strong connectivity.
    extra = generate_random(8, 20, [1, 2, 4, 8, 9], seed)
    cycle = [(k, k % 8 + 1, 9 if seed % 2 else 2) for k in range(1, 9)]
    g = Graph.from_edges(8, list(extra.edges) + cycle)
    fast, slow = network_bottleneck(g), network_bottleneck_oracle(g)
    assert fast.value is not None
    assert fast.value == slow.value


@given(graphs(max_n=7))
def test_agrees_with_oracle_and_probe_budget(g):
    fast = network_bottleneck(g)
    assert fast.value == network_bottleneck_oracle(g).value
    d = distinct_capacities(g).d
    if d:
        assert fast.probe_count <= math.ceil(math.log2(d)) + 1


@given(graphs(min_n=2, max_n=7))
def test_probe_is_monotone(g):
    fr = distinct_capacities(g)
    ranks = rank_matrix(g, fr)
    outcomes = [strongly_connected_at(ranks, t) for t in range(1, fr.d + 1)]
    # once a threshold fails, every larger one fails too
    assert outcomes == sorted(outcomes, reverse=True)
