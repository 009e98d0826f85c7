"""Constructive cover extraction: per-cluster cases, the single-edge
procedures, and report assembly.

Frozen covers below were cross-checked against the exact vertex-cover oracle;
the case constants in bound_kind name which construction fired.
"""

import math
import random
from fractions import Fraction

import pytest

from medcover.covers import (
    SQRT2P1,
    cover_case_dispatch,
    cover_general,
    cover_matching_two,
    cover_nonstar_means,
    cover_single_edge_clusters,
    soundness_assemble,
)
from medcover.errors import InvalidPartition, PreconditionViolated
from medcover.graphs import (
    graph_from_edges,
    is_vertex_cover,
    maximum_matching,
    second_maximum_matching,
)
from medcover.oracle import min_vertex_cover, random_triangle_free

C5 = [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
P4 = [(0, 1), (1, 2), (2, 3)]


# ---------------------------------------------------------------------------
# Matching number two
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "edges,expected",
    [
        (P4, [0, 2]),
        ([(0, 1), (2, 3)], [0, 2]),
        (C5, [0, 2, 4]),
        ([(0, 1), (1, 2), (2, 3), (3, 4)], [1, 3]),
    ],
)
def test_matching_two_frozen_covers(edges, expected):
    g = graph_from_edges(edges)
    r = cover_matching_two(g)
    assert sorted(r.cover) == expected
    assert is_vertex_cover(g, r.cover)
    assert r.bound_kind == "1.62+(sqrt2+1)delta"


def test_matching_two_is_minimum():
    # for matching number 2 the construction is not just valid but optimal
    for edges in (P4, [(0, 1), (2, 3)], C5, [(0, 1), (1, 2), (2, 3), (3, 4)]):
        g = graph_from_edges(edges)
        assert cover_matching_two(g).size == len(min_vertex_cover(g))


def test_matching_two_rejects_wrong_matching_number():
    with pytest.raises(PreconditionViolated):
        cover_matching_two(graph_from_edges([(0, 1), (0, 2)]))  # nu = 1
    big = graph_from_edges([(0, 1), (2, 3), (4, 5)])  # nu = 3
    with pytest.raises(PreconditionViolated):
        cover_matching_two(big)


# ---------------------------------------------------------------------------
# General construction and the case dispatch
# ---------------------------------------------------------------------------

def test_general_construction_bound_and_validity():
    g = graph_from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 4)])
    m = maximum_matching(g)
    l = second_maximum_matching(g, m)
    r = cover_general(g, m, l)
    assert is_vertex_cover(g, r.cover)
    assert r.size <= len(m) + len(l) - 1


DISPATCH_CASES = [
    # |L| = 0: disjoint edges, one endpoint each
    ([(0, 1), (2, 3), (4, 5)], "0.551+(sqrt2+1)delta", [0, 2, 4]),
    # |L| = 1: general construction at size |M|
    ([(0, 1), (1, 2), (2, 3), (4, 5)], "1.8+(sqrt2+1)delta", [1, 2, 4]),
    # |L| = 2 with a bridge residual: endpoint recursion
    ([(0, 5), (1, 3), (2, 3), (2, 4), (3, 5), (3, 6), (4, 6)],
     "1.53+(sqrt2+1)delta", [0, 3, 4]),
    ([(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (4, 6)],
     "1.53+(sqrt2+1)delta", [0, 2, 4]),
    # |L| = 2 without one: general construction, one above |M|
    ([(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)], "1.68+(sqrt2+1)delta", [0, 1, 2, 3]),
    # |L| >= 3, third matching empty: the graph is bipartite, Koenig cover
    ([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)], "1.6+(sqrt2+1)delta", [1, 3, 5]),
    # |L| >= 3, third matching a star: its center plus Koenig on the rest
    ([(0, 1), (1, 2), (1, 7), (1, 8), (2, 3), (3, 4), (4, 5), (5, 6)],
     "1.68+(sqrt2+1)delta", [1, 3, 5]),
    # |L| >= 3, third matching a bridge graph: both bridge endpoints
    ([(0, 3), (0, 4), (0, 6), (0, 7), (1, 3), (1, 6), (1, 7), (2, 4), (2, 5), (2, 7)],
     "1.4+(sqrt2+1)delta", [0, 1, 2, 7]),
    # |L| >= 3, anything else: general construction
    ([(0, 5), (0, 8), (1, 2), (1, 4), (2, 5), (3, 5), (3, 8), (4, 7), (6, 8), (7, 8)],
     "1.6+(sqrt2+1)delta", [0, 1, 4, 5, 8]),
]


@pytest.mark.parametrize("edges,kind,cover", DISPATCH_CASES)
def test_dispatch_frozen_cases(edges, kind, cover):
    g = graph_from_edges(edges)
    r = cover_case_dispatch(g)
    assert r.bound_kind == kind
    assert sorted(r.cover) == cover
    assert is_vertex_cover(g, r.cover)


def test_dispatch_bound_value_composition():
    g = graph_from_edges([(0, 1), (2, 3), (4, 5)])
    r = cover_case_dispatch(g)
    assert r.bound_value == pytest.approx(0.551 + SQRT2P1 * r.delta_used)


def test_dispatch_requires_matching_three():
    with pytest.raises(PreconditionViolated):
        cover_case_dispatch(graph_from_edges(C5))  # nu = 2


def test_dispatch_requires_triangle_free():
    with pytest.raises(PreconditionViolated):
        cover_case_dispatch(
            graph_from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (5, 6), (7, 8)])
        )


def test_dispatch_random_battery():
    # subsample edges from maximal graphs so the battery reaches sparse
    # shapes too, not just the Koenig-heavy dense case
    kinds = set()
    hit = 0
    for seed in range(60):
        rng = random.Random(seed)
        base = random_triangle_free(9, 3, seed=seed)
        edges = [e for e in base.edges if rng.random() < 0.75]
        if len(edges) < 3:
            continue
        g = graph_from_edges(edges)
        m = maximum_matching(g)
        if len(m) < 3:
            continue
        r = cover_case_dispatch(g)
        kinds.add(r.bound_kind)
        hit += 1
        assert is_vertex_cover(g, r.cover)
        l = second_maximum_matching(g, m)
        assert r.size <= len(m) + max(len(l) - 1, 1)
    assert hit >= 20
    assert len(kinds) >= 3  # the battery should not be stuck in one case


# ---------------------------------------------------------------------------
# Single-edge clusters: Procedures 1-4
# ---------------------------------------------------------------------------

def test_single_edges_case_one_covers_just_the_singles():
    g = graph_from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])  # P6
    out = cover_single_edge_clusters(g, singles=[0], vc_prime=[2, 4], k=30, delta=0.01)
    assert out.scope == "singles_only"
    assert sorted(out.cover) == [0, 1]
    assert out.matching_size == 1
    assert out.subcase is None
    assert len(out.cover) <= out.bound_value


def test_single_edges_case_two_on_three_disjoint_edges():
    g = graph_from_edges([(0, 1), (2, 3), (4, 5)])
    out = cover_single_edge_clusters(g, singles=[0, 1, 2], vc_prime=[], k=3, delta=0.01)
    assert out.scope == "full_graph"
    assert out.subcase == "few_planks"
    assert sorted(out.cover) == [0, 2, 4]
    assert is_vertex_cover(g, out.cover)
    # the whole-graph guarantee: 2k(1 - delta) when the matching fits in k
    assert len(out.cover) <= 2 * 3 - 2 * 0.01 * 3


def test_single_edges_many_planks():
    # three disjoint singles; the edge (4,5) gets claimed for touching two
    # live edges, the leftover singles become planks, and the cover takes
    # both endpoints of each
    g = graph_from_edges([(0, 1), (2, 3), (4, 5), (4, 6), (5, 7)])
    out = cover_single_edge_clusters(g, singles=[0, 1, 2], vc_prime=[6, 7], k=4, delta=0.01)
    assert out.scope == "full_graph"
    assert out.subcase == "many_planks"
    assert sorted(out.cover) == [0, 1, 2, 3, 4, 5]
    assert is_vertex_cover(g, out.cover)
    assert out.matching_size == 4
    assert len(out.cover) <= 2 * 4 - 2 * 0.01 * 4  # matching fits in k = 4


def test_single_edges_rejects_uncovered_nonsingles():
    g = graph_from_edges([(0, 1), (1, 2), (2, 3)])
    with pytest.raises(PreconditionViolated):
        cover_single_edge_clusters(g, singles=[0], vc_prime=[], k=5, delta=0.01)


def test_single_edges_random_battery():
    scopes = set()
    for seed in range(80):
        rng = random.Random(seed)
        base = random_triangle_free(9, 3, seed=seed)
        edges = [e for e in base.edges if rng.random() < 0.6]
        if len(edges) < 2:
            continue
        g = graph_from_edges(edges)
        m = g.num_edges
        sampled = set(rng.sample(range(m), rng.randint(1, max(1, m // 2))))
        rest = graph_from_edges([g.edges[i] for i in range(m) if i not in sampled]) \
            if len(sampled) < m else None
        vc_prime = min_vertex_cover(rest) if rest is not None else set()
        # the procedure takes exactly the singles that vc_prime misses
        singles = [i for i in sorted(sampled) if not set(g.edges[i]) & set(vc_prime)]
        if not singles:
            continue
        k = len(min_vertex_cover(g))
        out = cover_single_edge_clusters(g, singles, vc_prime, k=k, delta=0.01)
        scopes.add(out.scope)
        if out.scope == "full_graph":
            assert is_vertex_cover(g, out.cover)
            if out.matching_size <= k:
                assert len(out.cover) <= 2 * k - 2 * 0.01 * k + 1e-9
        else:
            # singles_only: whatever vc_prime missed must now be covered
            for i in singles:
                u, v = g.edges[i]
                if u not in vc_prime and v not in vc_prime:
                    assert u in out.cover or v in out.cover
    assert scopes == {"singles_only", "full_graph"}


# ---------------------------------------------------------------------------
# Means-side construction
# ---------------------------------------------------------------------------

def test_nonstar_means_frozen_cases():
    r = cover_nonstar_means(graph_from_edges([(0, 1), (2, 3)]))
    assert sorted(r.cover) == [0, 1, 2]
    assert r.bound_value == Fraction(7, 2)
    r = cover_nonstar_means(graph_from_edges(P4))
    assert sorted(r.cover) == [1, 2]
    assert r.bound_value == Fraction(8, 3)
    assert r.size <= r.bound_value


def test_nonstar_means_requires_triangle_free():
    with pytest.raises(PreconditionViolated):
        cover_nonstar_means(graph_from_edges([(0, 1), (1, 2), (0, 2)]))


def test_nonstar_means_battery():
    for seed in range(30):
        g = random_triangle_free(7, 3, seed=seed)
        r = cover_nonstar_means(g)
        assert is_vertex_cover(g, r.cover)
        assert r.size <= r.bound_value


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

def test_assemble_c5_frozen():
    g = graph_from_edges(C5)
    rep = soundness_assemble(g, [[0, 1, 2], [3, 4]], k=2, objective="median")
    assert (rep.t1, rep.t2, rep.t3, rep.t4) == (0, 1, 1, 0)
    assert sorted(rep.cover) == [0, 1, 3]
    assert rep.total_cover_size == 3
    assert rep.procedures_path == "direct"
    assert rep.predicted_ceiling == pytest.approx(3.462163, abs=1e-5)
    assert rep.epsilon_delta[0] == pytest.approx(2.0 - rep.predicted_ceiling / 2, abs=1e-12)
    assert is_vertex_cover(g, rep.cover)


def test_assemble_prunes_to_the_minimum_on_p4():
    g = graph_from_edges(P4)
    rep = soundness_assemble(g, [[0, 1], [2]], k=2, objective="median")
    assert (rep.t1, rep.t2) == (1, 1)
    assert sorted(rep.cover) == [1, 2]
    assert rep.total_cover_size == 2
    assert rep.procedures_path == "procedures_fallback"


def test_assemble_means_objective():
    g = graph_from_edges([(0, 1), (2, 3)])
    rep = soundness_assemble(g, [[0], [1]], k=2, objective="means")
    assert sorted(rep.cover) == [0, 2]
    assert rep.predicted_ceiling == pytest.approx(2.0)


def test_assemble_accepts_mapping_clusterings():
    g = graph_from_edges(C5)
    by_name = {"b": [3, 4], "a": [0, 1, 2]}
    rep = soundness_assemble(g, by_name, k=2, objective="median")
    assert rep.total_cover_size == 3


@pytest.mark.parametrize(
    "blocks",
    [
        [[0, 1, 2, 3, 4]],            # wrong block count for k=2
        [[0, 1], [2, 3]],             # edge 4 missing
        [[0, 1, 2], [3, 4, 4]],       # duplicate
        [[0, 1, 2], [3, 4, 9]],       # out of range
        [[0, 1, 2, 3, 4], []],        # empty block
    ],
)
def test_assemble_rejects_bad_partitions(blocks):
    g = graph_from_edges(C5)
    with pytest.raises(InvalidPartition):
        soundness_assemble(g, blocks, k=2, objective="median")


def test_assemble_random_battery():
    for seed in range(25):
        rng = random.Random(seed)
        g = random_triangle_free(8, 3, seed=seed)
        m = g.num_edges
        k = rng.randint(1, max(1, m // 2))
        idx = list(range(m))
        rng.shuffle(idx)
        cuts = sorted(rng.sample(range(1, m), k - 1)) if k > 1 else []
        blocks = [idx[a:b] for a, b in zip([0] + cuts, cuts + [m])]
        rep = soundness_assemble(g, blocks, k=k, objective="median")
        assert is_vertex_cover(g, rep.cover)
        assert rep.total_cover_size == len(rep.cover)
        assert rep.t1 + rep.t2 + rep.t3 + rep.t4 == k
