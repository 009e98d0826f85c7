"""Constructive vertex-cover extraction from clusterings.

Each cluster of edges gets a cover whose size is charged against the
cluster's extra cost over the star baseline: a star cluster costs one vertex
(its center), a non-star cluster with matching number two costs two vertices
(three for the 5-cycle), and larger non-star clusters go through a case
analysis on the second maximum matching L (the maximum matching of the graph
after the first matching's edges are deleted). Single-edge clusters that no
other cluster's cover happens to touch are handled collectively: either a
matching of their union is small and its endpoints suffice, or a four-stage
pruning construction (Procedures 1-4 below) produces a cover of the *whole*
graph of size 2k - 2*delta*k directly.

``soundness_assemble`` stitches the per-cluster covers into a whole-graph
cover and reports the bookkeeping ledger: per-category counts, the realized
cover size, and the predicted ceiling for the supplied (beta, delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .costs import extra_cost, one_means_cost
from .errors import (
    Case2Reached,
    InvalidPartition,
    PreconditionViolated,
    Stuck,
)
from .graphs import (
    ClassTag,
    Edge,
    Graph,
    Matching,
    bridge_structure,
    classify,
    common_vertex,
    is_star,
    is_triangle_free,
    is_vertex_cover,
    konig_cover,
    maximal_matching_greedy,
    maximum_matching,
    second_maximum_matching,
    subgraph,
)

SQRT2P1 = math.sqrt(2.0) + 1.0

Number = Union[float, Fraction]


@dataclass(frozen=True)
class CoverResult:
    """A vertex cover of one cluster plus the ledger entry justifying it:
    which bound was applied and the extra-cost budget it was charged to."""

    cover: frozenset[int]
    size: int
    bound_kind: str
    bound_value: Number
    delta_used: Number


@dataclass(frozen=True)
class SingleEdgeCoverOutcome:
    """Result of the collective single-edge-cluster step.

    scope "singles_only": ``cover`` covers just the uncovered single-edge
    clusters (size <= 2*t1'/3 + 8*delta*k). scope "full_graph": the
    procedures fallback fired and ``cover`` covers the entire graph (size
    <= 2k - 2*delta*k whenever the graph's matching number is <= k;
    ``matching_size`` reports the witness matching |M_G|)."""

    scope: str
    cover: frozenset[int]
    bound_value: float
    matching_size: int
    subcase: Optional[str]


@dataclass(frozen=True)
class SoundnessReport:
    """Whole-graph cover ledger for one clustering.

    t1/t2 count single-edge and larger star clusters; t3/t4 count non-star
    clusters with matching number exactly two / at least three. The
    ``predicted_ceiling`` is the category-weighted bound for the supplied
    (delta, beta); epsilon_delta reports (2 - ceiling/k, delta), i.e. the
    soundness slack this clustering actually certifies."""

    t1: int
    t2: int
    t3: int
    t4: int
    total_cover_size: int
    per_cluster: tuple[CoverResult, ...]
    procedures_path: str
    epsilon_delta: tuple[float, float]
    beta: float
    cover: frozenset[int]
    predicted_ceiling: float


def _require_triangle_free(g: Graph) -> None:
    if not is_triangle_free(g):
        raise PreconditionViolated("cover constructions assume a triangle-free graph")


def _numeric_delta(g: Graph) -> float:
    return float(extra_cost(g, "median").value)


def _touches(e: Edge, f: Edge) -> bool:
    return bool(set(e) & set(f))


# ---------------------------------------------------------------------------
# Matching-number-two clusters
# ---------------------------------------------------------------------------

def cover_matching_two(g: Graph) -> CoverResult:
    """Cover of size two for any triangle-free cluster with matching number
    exactly two, except the 5-cycle which genuinely needs three.

    A two-vertex cover must take one endpoint from each matching edge, so the
    case analysis reduces to scanning those four candidate pairs; when none
    works the graph must be the 5-cycle and three alternating cycle vertices
    do it.
    """
    _require_triangle_free(g)
    m = maximum_matching(g)
    if len(m) != 2:
        raise PreconditionViolated(f"matching number is {len(m)}, need exactly 2")
    (a1, b1), (a2, b2) = m.edges
    for cover in ((a1, a2), (a1, b2), (b1, a2), (b1, b2)):
        if is_vertex_cover(g, cover):
            return _matching_two_result(g, frozenset(cover))
    cls = classify(g)
    if cls.tag is ClassTag.C5:
        cyc = cls.witness["cycle"]
        cover3 = frozenset((cyc[0], cyc[2], cyc[4]))
        assert is_vertex_cover(g, cover3)
        return _matching_two_result(g, cover3)
    raise Stuck("triangle-free matching-2 graph with no 2-cover that is not a 5-cycle")


def _matching_two_result(g: Graph, cover: frozenset[int]) -> CoverResult:
    delta = _numeric_delta(g)
    return CoverResult(
        cover=cover,
        size=len(cover),
        bound_kind="1.62+(sqrt2+1)delta",
        bound_value=1.62 + SQRT2P1 * delta,
        delta_used=delta,
    )


# ---------------------------------------------------------------------------
# General |M| + |L| - 1 construction
# ---------------------------------------------------------------------------

def _validate_matchings(g: Graph, m: Matching, l: Matching) -> None:
    for idx, e in zip(m.indices, m.edges):
        if g.edges[idx] != e:
            raise PreconditionViolated("matching m does not belong to the graph")
    for idx, e in zip(l.indices, l.edges):
        if g.edges[idx] != e:
            raise PreconditionViolated("matching l does not belong to the graph")
    if set(m.indices) & set(l.indices):
        raise PreconditionViolated("m and l share edges")
    if len(maximum_matching(g)) != len(m):
        raise PreconditionViolated("m is not a maximum matching")
    if len(second_maximum_matching(g, m)) != len(l):
        raise PreconditionViolated("l is not a second maximum matching")


def cover_general(g: Graph, m: Matching, l: Matching) -> CoverResult:
    """Cover of size at most |M| + |L| - 1.

    Take both endpoints of every L-edge but the last, delete what they cover,
    and look at the residue: its non-M edges must form a star (else L was not
    maximum in the M-deleted graph). With R the surviving M-edges, either
    |R| <= |M| - |L| (cover the star by its center, one vertex per R-edge) or
    |R| = |M| - |L| + 1 (each star edge leans on a distinct R-edge; pick the
    shared endpoints). |R| >= |M| - |L| + 2 would contradict M's maximality,
    so reaching it raises instead of covering.
    """
    _require_triangle_free(g)
    if is_star(g) or g.num_edges < 2:
        raise PreconditionViolated("general cover construction needs a non-star graph")
    if len(l) < 1:
        raise PreconditionViolated("needs a second matching with at least one edge")
    _validate_matchings(g, m, l)

    s: set[int] = {v for e in l.edges[:-1] for v in e}
    live = [e for e in g.edges if e[0] not in s and e[1] not in s]
    m_set = set(m.edges)
    red = [e for e in live if e in m_set]
    non_red = [e for e in live if e not in m_set]
    u = common_vertex(non_red)
    if not non_red or u is None:
        raise Stuck("residue's non-matching edges should form a nonempty star")

    slack = len(m) - len(l)
    if len(red) <= slack:
        cover = s | {u} | {min(e) for e in red}
    elif len(red) == slack + 1:
        cover = set(s)
        for e in red:
            shared = [v for v in e if any(v in f for f in non_red)]
            cover.add(shared[0] if shared else min(e))
    else:
        raise Case2Reached(
            f"{len(red)} surviving matching edges alongside {len(l) - 1} removed "
            "second-matching edges would exceed the maximum matching"
        )
    if not is_vertex_cover(g, cover):
        raise Stuck("general construction produced a non-cover")
    assert len(cover) <= len(m) + len(l) - 1
    delta = _numeric_delta(g)
    return CoverResult(
        cover=frozenset(cover),
        size=len(cover),
        bound_kind="M+L-1",
        bound_value=float(len(m) + len(l) - 1),
        delta_used=delta,
    )


# ---------------------------------------------------------------------------
# Case dispatch for matching number >= 3
# ---------------------------------------------------------------------------

def _edges_minus(g: Graph, drop: Iterable[Edge]) -> Graph:
    gone = set(drop)
    return Graph(g.num_vertices, tuple(e for e in g.edges if e not in gone))


def _konig_on(g: Graph, edges: Sequence[Edge]) -> set[int]:
    sub = Graph(g.num_vertices, tuple(edges))
    return konig_cover(sub)


def _cover_via_bridge_residual(g: Graph, m: Matching, f_prime: Graph) -> set[int]:
    """|L| = 2 with the M-deleted graph a bridge: cover of size |M|.

    One bridge endpoint u must meet a matching edge; taking u, the rest of
    the graph has maximum matching M minus that edge and a star residue, so
    the general construction finishes with |M| - 1 more vertices.
    """
    bridge = bridge_structure(f_prime)
    assert bridge is not None
    b, _p, _q = bridge
    e_star = None
    u = None
    for e in m.edges:
        shared = set(e) & set(b)
        if shared:
            e_star, u = e, min(shared)
            break
    if e_star is None or u is None:
        raise Stuck("bridge edge not incident on the maximum matching")
    g_rest = Graph(g.num_vertices, tuple(e for e in g.edges if u not in e))
    rest_m_edges = [e for e in m.edges if e != e_star]
    idx = {e: i for i, e in enumerate(g_rest.edges)}
    m_rest = Matching(tuple(sorted(idx[e] for e in rest_m_edges)), tuple(sorted(rest_m_edges, key=lambda e: idx[e])))
    l_rest = second_maximum_matching(g_rest, m_rest)
    if len(l_rest) == 0:
        sub_cover = {min(e) for e in rest_m_edges}
    else:
        if len(l_rest) != 1:
            raise Stuck("bridge-case residue should have second matching of size one")
        sub = cover_general(g_rest, m_rest, l_rest)
        sub_cover = set(sub.cover)
    return {u} | sub_cover


def cover_case_dispatch(g: Graph) -> CoverResult:
    """Constructive cover for a non-star triangle-free cluster with matching
    number at least three, with the ledger constant recording which case
    fired. Writing F' for the graph minus the maximum matching's edges and
    F'' for F' additionally minus the second matching's edges:

      |L| = 0                      -> the graph is |M| disjoint edges; one
                                      endpoint each (constant 0.551)
      |L| = 1                      -> general construction, size |M| (1.8)
      |L| = 2, F' bridge           -> bridge-endpoint recursion, size |M| (1.53)
      |L| = 2, F' non-bridge       -> general construction, |M| + 1 (1.68)
      |L| >= 3, F'' empty          -> the graph is two matchings: bipartite,
                                      Koenig cover of size |M| (1.6)
      |L| >= 3, F'' a star         -> star center + Koenig on the surviving
                                      two-matching remainder, <= |M| + 1 (1.68)
      |L| >= 3, F'' bridge         -> both bridge endpoints + Koenig, <= |M| + 1 (1.4)
      |L| >= 3, F'' non-star,
                non-bridge         -> general construction, <= |M| + |L| - 1 (1.6)

    Every path stays within 1.8 + (sqrt(2)+1) * delta(F).
    """
    _require_triangle_free(g)
    if is_star(g) or g.num_edges < 2:
        raise PreconditionViolated("dispatch needs a non-star graph")
    m = maximum_matching(g)
    if len(m) < 3:
        raise PreconditionViolated(f"matching number is {len(m)}, need >= 3")
    l = second_maximum_matching(g, m)
    delta = _numeric_delta(g)

    def result(cover: set[int], kind: str, const: float, ceiling: int) -> CoverResult:
        if not is_vertex_cover(g, cover):
            raise Stuck(f"case {kind} produced a non-cover")
        assert len(cover) <= ceiling, (kind, len(cover), ceiling)
        return CoverResult(
            cover=frozenset(cover),
            size=len(cover),
            bound_kind=f"{kind}+(sqrt2+1)delta",
            bound_value=const + SQRT2P1 * delta,
            delta_used=delta,
        )

    if len(l) == 0:
        return result({min(e) for e in m.edges}, "0.551", 0.551, len(m))
    if len(l) == 1:
        general = cover_general(g, m, l)
        return result(set(general.cover), "1.8", 1.8, len(m))
    if len(l) == 2:
        f_prime = _edges_minus(g, m.edges)
        if bridge_structure(f_prime) is not None:
            return result(_cover_via_bridge_residual(g, m, f_prime), "1.53", 1.53, len(m))
        general = cover_general(g, m, l)
        return result(set(general.cover), "1.68", 1.68, len(m) + 1)

    f_pp = _edges_minus(g, tuple(m.edges) + tuple(l.edges))
    ml_edges = tuple(m.edges) + tuple(l.edges)
    if f_pp.num_edges == 0:
        return result(konig_cover(g), "1.6", 1.6, len(m))
    if is_star(f_pp):
        c = common_vertex(f_pp.edges)
        assert c is not None
        survivors = [e for e in ml_edges if c not in e]
        return result({c} | _konig_on(g, survivors), "1.68", 1.68, len(m) + 1)
    bridge = bridge_structure(f_pp)
    if bridge is not None:
        (u, v), _p, _q = bridge
        survivors = [e for e in ml_edges if u not in e and v not in e]
        return result({u, v} | _konig_on(g, survivors), "1.4", 1.4, len(m) + 1)
    general = cover_general(g, m, l)
    return result(set(general.cover), "1.6", 1.6, len(m) + len(l) - 1)


# ---------------------------------------------------------------------------
# Single-edge clusters: Procedures 1-4
# ---------------------------------------------------------------------------

def cover_single_edge_clusters(
    g: Graph,
    singles: Iterable[int],
    vc_prime: Iterable[int],
    k: int,
    delta: float,
) -> SingleEdgeCoverOutcome:
    """Cover the single-edge clusters that vc_prime misses.

    G_P is their union. With M_P a greedy maximal matching of G_P:

    Case I (|M_P| <= t1'/3 + 4*delta*k): both endpoints of M_P cover G_P.

    Case II: a cover of the WHOLE graph is built instead. A matching M_G of
    g is grown in four stages — (1) a maximal matching of the part of the
    graph away from M_P, both endpoints; (2) matched G_P edges leaning on
    two unmatched G_P edges, both endpoints; (3) unmatched G_P edges leaning
    on two matched ones, both endpoints of one; (4) remaining M_P edges with
    fresh disjoint neighbours on both sides ("plank" edges) route those two
    neighbours into M_G instead. Every edge of M_G then contributes both
    endpoints except: either each plank edge saves its two neighbours'
    double-count, or each surviving non-plank edge contributes only the
    endpoint its leftover neighbours lean on. Both ledgers give
    2|M_G| - (savings), which is at most 2k - 2*delta*k when the graph's
    matching number is at most k.
    """
    _require_triangle_free(g)
    single_set = set(singles)
    vcp = set(vc_prime)
    for i, e in enumerate(g.edges):
        covered = e[0] in vcp or e[1] in vcp
        if i in single_set and covered:
            raise PreconditionViolated(f"single-edge cluster {i} is already covered")
        if i not in single_set and not covered:
            raise PreconditionViolated(f"edge {i} outside the singles is uncovered")

    edges = g.edges
    t1p = len(single_set)
    mp_matching = maximal_matching_greedy(
        Graph(g.num_vertices, tuple(edges[i] for i in sorted(single_set)))
    )
    order = sorted(single_set)
    mp = {order[j] for j in mp_matching.indices}

    if len(mp) <= t1p / 3 + 4 * delta * k:
        cover = frozenset(v for i in mp for v in edges[i])
        target = Graph(g.num_vertices, tuple(edges[i] for i in sorted(single_set)))
        assert is_vertex_cover(target, cover)
        return SingleEdgeCoverOutcome(
            scope="singles_only",
            cover=cover,
            bound_value=2 * t1p / 3 + 8 * delta * k,
            matching_size=len(mp),
            subcase=None,
        )

    # --- Case II -----------------------------------------------------------
    mp_verts = {v for i in mp for v in edges[i]}
    e_i = {
        i
        for i in range(g.num_edges)
        if i not in single_set and (edges[i][0] in mp_verts or edges[i][1] in mp_verts)
    }
    live = single_set | e_i
    g_prime_idx = [i for i in range(g.num_edges) if i not in live]
    up = single_set - mp
    mp_live = set(mp)

    m_g: list[int] = []
    vc_g: set[int] = set()
    mg_verts: set[int] = set()

    def claim(i: int) -> None:
        """Move edge i into M_G taking both endpoints, and prune the live graph."""
        u, v = edges[i]
        m_g.append(i)
        mg_verts.update((u, v))
        vc_g.update((u, v))
        for j in list(live):
            if u in edges[j] or v in edges[j]:
                live.discard(j)
                up.discard(j)
                mp_live.discard(j)

    # Procedure 1: clear everything not touching M_P.
    sub = Graph(g.num_vertices, tuple(edges[i] for i in g_prime_idx))
    for j in maximal_matching_greedy(sub).indices:
        claim(g_prime_idx[j])
    assert mp_live == mp, "far matching must not touch the singles matching"

    # Procedure 2: matched single edges leaning on two unmatched ones.
    while True:
        pick = next(
            (
                i
                for i in sorted(mp_live)
                if sum(_touches(edges[i], edges[j]) for j in up) >= 2
            ),
            None,
        )
        if pick is None:
            break
        claim(pick)

    # Procedure 3: unmatched single edges leaning on two matched ones.
    while True:
        pick = None
        for j in sorted(up):
            incident = [i for i in sorted(mp_live) if _touches(edges[i], edges[j])]
            if len(incident) >= 2:
                pick = incident[0]
                break
        if pick is None:
            break
        claim(pick)

    # Procedure 4: plank edges hand their two fresh neighbours to M_G.
    blue = lambda: (j for j in sorted(live) if j not in mp_live)  # noqa: E731

    def fresh_neighbour(vertex: int) -> Optional[int]:
        for j in blue():
            e = edges[j]
            if vertex in e and not (set(e) & mg_verts):
                return j
        return None

    m_y: list[int] = []
    t_edges: list[int] = []
    m_n = sorted(mp_live)
    while True:
        plank = None
        for i in m_n:
            u, v = edges[i]
            eu = fresh_neighbour(u)
            ev = fresh_neighbour(v)
            if eu is not None and ev is not None:
                plank = (i, eu, ev)
                break
        if plank is None:
            break
        i, eu, ev = plank
        assert not (set(edges[eu]) & set(edges[ev])), "triangle-free guarantee broken"
        m_y.append(i)
        m_n.remove(i)
        for j in (eu, ev):
            t_edges.append(j)
            m_g.append(j)
            mg_verts.update(edges[j])
    m_g.extend(m_n)
    mg_verts.update(v for i in m_n for v in edges[i])

    if len(m_y) >= delta * k:
        cover = set(vc_g)
        for i in list(m_y) + m_n:
            cover.update(edges[i])
        subcase = "many_planks"
        assert len(cover) == 2 * len(m_g) - len(t_edges)
    else:
        cover = set(vc_g)
        for j in t_edges:
            cover.update(edges[j])
        t_verts = {v for j in t_edges for v in edges[j]}
        for i in m_n:
            a, b = edges[i]
            leaning_a = leaning_b = False
            for j in blue():
                e = edges[j]
                if set(e) & t_verts:
                    continue  # already covered
                if a in e:
                    leaning_a = True
                if b in e:
                    leaning_b = True
            if leaning_a and leaning_b:
                raise Stuck("plank edge escaped Procedure 4")
            cover.add(a if leaning_a else (b if leaning_b else min(a, b)))
        subcase = "few_planks"
        assert len(cover) == 2 * len(m_g) - len(m_n)

    if not is_vertex_cover(g, cover):
        raise Stuck("procedures produced a non-cover of the full graph")
    return SingleEdgeCoverOutcome(
        scope="full_graph",
        cover=frozenset(cover),
        bound_value=2 * k - 2 * delta * k,
        matching_size=len(m_g),
        subcase=subcase,
    )


# ---------------------------------------------------------------------------
# Means-side cover
# ---------------------------------------------------------------------------

def cover_nonstar_means(g: Graph) -> CoverResult:
    """Cover charged against the exact 1-means extra cost.

    The edge maximizing deg(u) + deg(v) misses at most delta(F) edges, so
    both its endpoints plus one vertex per missed edge give size
    <= 2 + delta(F) <= 1 + (5/2) delta(F), all checked in exact rationals.
    (The second inequality needs delta >= 2/3, which fails on graphs with
    triangles — a triangle has delta = 0 — hence the triangle-free gate.)
    """
    _require_triangle_free(g)
    if is_star(g) or g.num_edges < 2:
        raise PreconditionViolated("means cover construction needs a non-star graph")
    r = g.num_edges
    delta = one_means_cost(g) - (r - 1)
    deg = g.degrees()
    best = max(g.edges, key=lambda e: deg[e[0]] + deg[e[1]])
    cover = {best[0], best[1]}
    for e in g.edges:
        if e[0] not in cover and e[1] not in cover:
            cover.add(min(e))
    assert is_vertex_cover(g, cover)
    assert Fraction(len(cover)) <= 2 + delta, (len(cover), delta)
    bound = 1 + Fraction(5, 2) * delta
    assert Fraction(len(cover)) <= bound
    return CoverResult(
        cover=frozenset(cover),
        size=len(cover),
        bound_kind="1+(5/2)delta_means",
        bound_value=bound,
        delta_used=delta,
    )


# ---------------------------------------------------------------------------
# Whole-graph assembly
# ---------------------------------------------------------------------------

def _normalize_clustering(
    g: Graph, clustering: Union[Mapping[object, Sequence[int]], Sequence[Sequence[int]]]
) -> list[tuple[int, ...]]:
    if isinstance(clustering, Mapping):
        keys = sorted(clustering.keys(), key=str)
        raw = [clustering[key] for key in keys]
    else:
        raw = list(clustering)
    blocks = [tuple(sorted(int(i) for i in block)) for block in raw]
    seen: set[int] = set()
    for block in blocks:
        if not block:
            raise InvalidPartition("empty cluster")
        for i in block:
            if not 0 <= i < g.num_edges:
                raise InvalidPartition(f"edge index {i} out of range")
            if i in seen:
                raise InvalidPartition(f"edge index {i} in two clusters")
            seen.add(i)
    if len(seen) != g.num_edges:
        raise InvalidPartition("clustering does not cover every edge")
    return blocks


def _prune_cover(g: Graph, cover: set[int]) -> set[int]:
    """Drop redundant vertices in ascending id order (keeps covers honest:
    per-cluster unions routinely double-cover shared edges)."""
    pruned = set(cover)
    for v in sorted(cover):
        if is_vertex_cover(g, pruned - {v}):
            pruned.discard(v)
    return pruned


def soundness_assemble(
    g: Graph,
    clustering: Union[Mapping[object, Sequence[int]], Sequence[Sequence[int]]],
    k: int,
    beta: float = 1.0,
    objective: str = "median",
    delta: float = 0.01,
) -> SoundnessReport:
    """Extract a whole-graph vertex cover from an edge clustering and report
    the category ledger.

    Blocks are classified as single edges (t1), stars (t2), and non-star
    clusters with matching number two (t3) or more (t4). Stars contribute
    their center; non-star blocks run the per-cluster constructions (the
    means objective charges everything to exact rational extra costs
    instead). Single-edge blocks the union misses go through
    cover_single_edge_clusters; if its full-graph fallback fires, that cover
    replaces the union. Finally redundant vertices are pruned in ascending
    order and the (delta, beta)-ceiling is reported next to the realized
    size.
    """
    _require_triangle_free(g)
    if objective not in ("median", "means"):
        raise ValueError("objective must be 'median' or 'means'")
    blocks = _normalize_clustering(g, clustering)
    expected = math.ceil(beta * k)
    if len(blocks) != expected:
        raise InvalidPartition(f"expected {expected} clusters, got {len(blocks)}")

    t1 = t2 = t3 = t4 = 0
    singles: list[int] = []
    vc_prime: set[int] = set()
    per_cluster: list[CoverResult] = []
    delta_sum = Fraction(0) if objective == "means" else 0.0

    for block in blocks:
        sub = subgraph(g, block)
        if sub.num_edges == 1:
            t1 += 1
            singles.append(block[0])
            continue
        if is_star(sub):
            t2 += 1
            center = common_vertex(sub.edges)
            assert center is not None
            vc_prime.add(center)
            per_cluster.append(
                CoverResult(frozenset({center}), 1, "star_center", 1.0, 0.0)
            )
            continue
        nu = len(maximum_matching(sub))
        if nu == 2:
            t3 += 1
        else:
            t4 += 1
        if objective == "means":
            res = cover_nonstar_means(sub)
        elif nu == 2:
            res = cover_matching_two(sub)
        else:
            res = cover_case_dispatch(sub)
        vc_prime |= res.cover
        per_cluster.append(res)
        delta_sum += res.delta_used

    uncovered = [
        i for i in singles if g.edges[i][0] not in vc_prime and g.edges[i][1] not in vc_prime
    ]
    procedures_path = "direct"
    if uncovered:
        outcome = cover_single_edge_clusters(g, uncovered, vc_prime, k, delta)
        per_cluster.append(
            CoverResult(
                outcome.cover,
                len(outcome.cover),
                f"single_edge_{outcome.scope}",
                outcome.bound_value,
                float(delta),
            )
        )
        if outcome.scope == "full_graph":
            procedures_path = "procedures_fallback"
            full_cover = set(outcome.cover)
        else:
            full_cover = vc_prime | set(outcome.cover)
    else:
        full_cover = set(vc_prime)

    pruned = _prune_cover(g, full_cover)
    if not is_vertex_cover(g, pruned):
        raise Stuck("assembled cover is invalid")

    if objective == "median":
        ceiling = (
            0.67 * t1
            + 8 * delta * k
            + t2
            + 1.62 * t3
            + 1.8 * t4
            + SQRT2P1 * float(delta_sum)
        )
    else:
        ceiling = beta * k + 2.5 * float(delta_sum)
    epsilon = 2.0 - ceiling / k
    return SoundnessReport(
        t1=t1,
        t2=t2,
        t3=t3,
        t4=t4,
        total_cover_size=len(pruned),
        per_cluster=tuple(per_cluster),
        procedures_path=procedures_path,
        epsilon_delta=(epsilon, delta),
        beta=beta,
        cover=frozenset(pruned),
        predicted_ceiling=ceiling,
    )
