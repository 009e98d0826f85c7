"""Graph and hypergraph embeddings plus the predicted cost gaps."""

import json
import math

import pytest

from medcover.graphs import graph_from_edges
from medcover.reduction import (
    HypergraphInstance,
    auto_no_regime,
    instance_from_json,
    instance_to_json,
    pairwise_squared_distance_check,
    parse_hyperedges,
    predict_gap_graph,
    predict_gap_hypergraph,
    reduce_graph,
    reduce_hypergraph,
)

C5 = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


def sq(a, b):
    return sum((x - y) ** 2 for x, y in zip(a, b))


def test_points_are_edge_indicator_sums():
    g = graph_from_edges([(0, 2), (1, 3)])
    inst = reduce_graph(g, k=1, objective="median")
    assert inst.dimension == 4
    assert inst.points == ((1.0, 0.0, 1.0, 0.0), (0.0, 1.0, 0.0, 1.0))
    assert inst.candidate_centers is None


def test_squared_distances_are_two_or_four():
    g = graph_from_edges(C5)
    inst = reduce_graph(g, k=2, objective="median")
    assert pairwise_squared_distance_check(inst, g)
    # directly: adjacent edges at 2, disjoint edges at 4
    pts = inst.points
    assert sq(pts[0], pts[1]) == 2.0  # (0,1) vs (0,4)
    assert sq(pts[0], pts[3]) == 4.0  # (0,1) vs (2,3)


@pytest.mark.parametrize(
    "objective,yes,no",
    [("median", 10 - 1.5, 10 - 1.5 + 0.03), ("means", 10 - 3, 10 - 3 + 0.03)],
)
def test_graph_gap_thresholds(objective, yes, no):
    pred = predict_gap_graph(10, 3, objective, delta=0.01)
    assert pred.yes_cost == pytest.approx(yes, abs=0)
    assert pred.no_cost_lower == pytest.approx(no, abs=1e-15)


def test_auto_no_regime_boundary():
    three_p2 = graph_from_edges([(0, 1), (2, 3), (4, 5)])  # m=3, max degree 1
    assert auto_no_regime(three_p2, 1)       # 1 < 3/2
    assert not auto_no_regime(three_p2, 2)   # 2 >= 3/2
    p4 = graph_from_edges([(0, 1), (1, 2), (2, 3)])  # m=3, max degree 2
    assert not auto_no_regime(p4, 1)         # 1 >= 3/4


def test_instance_json_round_trip():
    g = graph_from_edges(C5)
    inst = reduce_graph(g, k=2, objective="means")
    there_and_back = instance_from_json(instance_to_json(inst))
    assert there_and_back == inst
    # serialization is canonical: a second pass is byte-identical
    assert instance_to_json(there_and_back) == instance_to_json(inst)


# ---------------------------------------------------------------------------
# Hypergraphs
# ---------------------------------------------------------------------------

TRI_COVER = HypergraphInstance(
    d=3,
    num_vertices=5,
    hyperedges=((0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)),
    k=2,
)


def test_hypergraph_point_center_distances():
    inst = reduce_hypergraph(TRI_COVER)
    assert inst.candidate_centers is not None
    assert len(inst.candidate_centers) == 5
    for fi, f in enumerate(TRI_COVER.hyperedges):
        for v in range(5):
            want = TRI_COVER.d - 1 if v in f else TRI_COVER.d + 1
            assert sq(inst.points[fi], inst.candidate_centers[v]) == want


def test_hypergraph_gap_thresholds():
    pred = predict_gap_hypergraph(3, 4, p=0.25)
    assert pred.yes_cost == 8.0           # (d-1) * N
    assert pred.no_cost_lower == 10.0     # + 2 p N


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        HypergraphInstance(d=3, num_vertices=4, hyperedges=((0, 1, 1),), k=1)
    with pytest.raises(ValueError):
        HypergraphInstance(d=3, num_vertices=3, hyperedges=((0, 1, 5),), k=1)
    with pytest.raises(ValueError):
        HypergraphInstance(d=1, num_vertices=3, hyperedges=((0,),), k=1)


def test_parse_hyperedges_infers_uniformity():
    h = parse_hyperedges("0 1 2\n1 2 3\n", k=2)
    assert h.d == 3
    assert h.num_vertices == 4
    assert h.hyperedges == ((0, 1, 2), (1, 2, 3))


def test_parse_hyperedges_rejects_ragged_lines():
    with pytest.raises(Exception):
        parse_hyperedges("0 1 2\n3 4\n")


def test_graph_case_is_the_two_uniform_case():
    # a 2-uniform hypergraph produces the same point set as the graph
    # reduction; only the candidate-center restriction differs
    g = graph_from_edges([(0, 1), (1, 2)])
    h = HypergraphInstance(d=2, num_vertices=3, hyperedges=((0, 1), (1, 2)), k=1)
    gi = reduce_graph(g, k=1, objective="median")
    hi = reduce_hypergraph(h)
    assert gi.points == hi.points
