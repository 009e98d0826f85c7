"""Exhaustive desk-scale oracles.

Everything here is deliberately brute force: exact optimal clusterings by
dynamic programming over point subsets, exact minimum vertex covers by
branch and bound, and a canonical-form enumerator for small connected
triangle-free graphs. These are the independent referees the constructive
machinery is tested against, so they share no code with it beyond the basic
Graph container and the 1-median solver.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .costs import weiszfeld
from .errors import InstanceTooLarge, PreconditionViolated
from .graphs import Graph, is_triangle_free, is_vertex_cover
from .reduction import ClusteringInstance

MAX_CONTINUOUS_POINTS = 12
MAX_DISCRETE_SUBSETS = 10**6
MAX_VC_EDGES = 24
MAX_ENUM_EDGES = 8


@dataclass(frozen=True)
class OracleReport:
    """An exactly-optimal clustering: total cost, the partition of point
    indices, one center per block, and which search produced it (so
    consumers know whether cost carries Weiszfeld tolerance or is exact)."""

    optimal_cost: float
    partition: tuple[tuple[int, ...], ...]
    centers: tuple[tuple[float, ...], ...]
    method: str


def _centroid_cost_exact(points: Sequence[Sequence[float]]) -> tuple[float, tuple[float, ...]]:
    """Sum of squared distances to the centroid. Integer coordinates (the
    only kind our reductions emit) are folded in exact rationals."""
    n = len(points)
    dim = len(points[0])
    if all(float(c).is_integer() for p in points for c in p):
        mean = [Fraction(sum(int(p[d]) for p in points), n) for d in range(dim)]
        sse = sum(
            (Fraction(int(p[d])) - mean[d]) ** 2 for p in points for d in range(dim)
        )
        return float(sse), tuple(float(c) for c in mean)
    mean = [sum(p[d] for p in points) / n for d in range(dim)]
    sse = sum((p[d] - mean[d]) ** 2 for p in points for d in range(dim))
    return sse, tuple(mean)


def opt_continuous(inst: ClusteringInstance, tolerance: float = 1e-12) -> OracleReport:
    """Exact optimum of the instance over all partitions into at most k
    blocks, each block served by its own optimal center.

    Optimal k-clusterings are partition-induced, and splitting a block never
    raises cost, so searching partitions into <= k blocks is exhaustive. The
    search runs as a subset DP (best cost of covering a point subset with j
    blocks); per-subset block costs come from the 1-median solver (median)
    or the exact centroid formula (means).
    """
    n = len(inst.points)
    if n > MAX_CONTINUOUS_POINTS:
        raise InstanceTooLarge(f"{n} points exceeds the {MAX_CONTINUOUS_POINTS}-point oracle limit")
    if inst.k > n:
        raise PreconditionViolated("k exceeds the number of points")
    points = inst.points
    k = inst.k
    median = inst.objective == "median"

    @lru_cache(maxsize=None)
    def block_cost(mask: int) -> tuple[float, tuple[float, ...]]:
        block = [points[i] for i in range(n) if mask >> i & 1]
        if median:
            sol = weiszfeld(block, tolerance=tolerance)
            return sol.cost, sol.center
        return _centroid_cost_exact(block)

    full = (1 << n) - 1
    kmax = min(k, n)
    inf = math.inf
    # best[j][mask]: cheapest way to serve `mask` with exactly j blocks
    best = [dict() for _ in range(kmax + 1)]
    best[0][0] = 0.0
    choice: dict[tuple[int, int], int] = {}
    for j in range(1, kmax + 1):
        prev = best[j - 1]
        cur = best[j]
        for mask, base in prev.items():
            rest = full & ~mask
            if rest == 0:
                continue
            low = rest & -rest
            sub = rest
            while sub:
                if sub & low:
                    cost = base + block_cost(sub)[0]
                    nxt = mask | sub
                    if cost < cur.get(nxt, inf) - 1e-15:
                        cur[nxt] = cost
                        choice[(j, nxt)] = sub
                sub = (sub - 1) & rest
    best_j = min(
        (j for j in range(1, kmax + 1) if full in best[j]),
        key=lambda j: best[j][full],
    )
    blocks: list[tuple[int, ...]] = []
    mask = full
    for j in range(best_j, 0, -1):
        sub = choice[(j, mask)]
        blocks.append(tuple(i for i in range(n) if sub >> i & 1))
        mask &= ~sub
    blocks.sort()
    centers = tuple(tuple(map(float, block_cost(sum(1 << i for i in b))[1])) for b in blocks)
    method = "partition_enum_weiszfeld" if median else "partition_enum_centroid"
    return OracleReport(
        optimal_cost=best[best_j][full],
        partition=tuple(blocks),
        centers=centers,
        method=method,
    )


def opt_discrete(inst: ClusteringInstance) -> OracleReport:
    """Exact optimum when centers must come from the candidate list: try
    every k-subset, assign each point to its nearest chosen center."""
    if inst.candidate_centers is None:
        raise PreconditionViolated("instance has no candidate centers")
    centers = inst.candidate_centers
    if math.comb(len(centers), inst.k) > MAX_DISCRETE_SUBSETS:
        raise InstanceTooLarge(
            f"C({len(centers)}, {inst.k}) subsets exceed the {MAX_DISCRETE_SUBSETS} limit"
        )
    squared = inst.objective == "means"

    def dist(p: Sequence[float], c: Sequence[float]) -> float:
        s = sum((a - b) ** 2 for a, b in zip(p, c))
        return s if squared else math.sqrt(s)

    d = [[dist(p, c) for c in centers] for p in inst.points]
    best_cost = math.inf
    best_subset: Optional[tuple[int, ...]] = None
    for subset in itertools.combinations(range(len(centers)), inst.k):
        cost = sum(min(row[c] for c in subset) for row in d)
        if cost < best_cost - 1e-15:
            best_cost = cost
            best_subset = subset
    assert best_subset is not None
    assignment: dict[int, list[int]] = {c: [] for c in best_subset}
    for i, row in enumerate(d):
        home = min(best_subset, key=lambda c: (row[c], c))
        assignment[home].append(i)
    pairs = [(tuple(pts), centers[c]) for c, pts in assignment.items() if pts]
    pairs.sort()
    return OracleReport(
        optimal_cost=best_cost,
        partition=tuple(p for p, _ in pairs),
        centers=tuple(tuple(map(float, c)) for _, c in pairs),
        method="center_subset_enum",
    )


def min_vertex_cover(g: Graph, ceiling: int = MAX_VC_EDGES) -> set[int]:
    """Exact minimum vertex cover by branch and bound on an uncovered edge
    (take one endpoint or the other). Deterministic: among minimum covers
    the lexicographically smallest is returned."""
    if g.num_edges > ceiling:
        raise InstanceTooLarge(f"{g.num_edges} edges exceeds the {ceiling}-edge limit")
    best: list[tuple[int, ...]] = [tuple(sorted(v for e in g.edges for v in e))]

    def search(cover: set[int], start: int) -> None:
        if len(cover) >= len(best[0]):
            return
        for i in range(start, g.num_edges):
            u, v = g.edges[i]
            if u not in cover and v not in cover:
                for pick in (u, v):
                    search(cover | {pick}, i + 1)
                return
        cand = tuple(sorted(cover))
        if (len(cand), cand) < (len(best[0]), best[0]):
            best[0] = cand

    search(set(), 0)
    assert is_vertex_cover(g, best[0])
    return set(best[0])


# ---------------------------------------------------------------------------
# Triangle-free graph generation
# ---------------------------------------------------------------------------

def _refine_classes(g: Graph) -> list[list[int]]:
    """Stable equitable partition of the vertices (iterated degree
    refinement). Distinct cells always end up with distinct keys because
    the full refinement history is folded into each key."""
    n = g.num_vertices
    adj = g.adjacency()
    keys: list[object] = [len(adj[v]) for v in range(n)]
    while True:
        new = [(keys[v], tuple(sorted(keys[u] for u in adj[v]))) for v in range(n)]
        if len(set(new)) == len(set(keys)):
            break
        keys = new  # type: ignore[assignment]
    cells: dict[object, list[int]] = {}
    for v in range(n):
        cells.setdefault(repr(keys[v]), []).append(v)
    return [cells[key] for key in sorted(cells)]


def canonical_form(g: Graph) -> str:
    """Canonical certificate: minimum adjacency bitstring over all vertex
    orders consistent with the equitable partition. Isomorphic graphs get
    equal strings; feasible because cells stay small at enumeration scale.
    Cells of pairwise twins (identical neighbourhoods — star leaves and the
    like) are order-insensitive, so only one order is tried for them."""
    cells = _refine_classes(g)
    adj = [set(nb) for nb in g.adjacency()]
    edge_set = set(g.edges)

    def cell_orders(cell: list[int]):
        if len(cell) == 1 or all(adj[v] == adj[cell[0]] for v in cell[1:]):
            return (tuple(cell),)
        return itertools.permutations(cell)

    best: Optional[str] = None
    for perms in itertools.product(*(cell_orders(c) for c in cells)):
        order = [v for cell in perms for v in cell]
        pos = {v: i for i, v in enumerate(order)}
        bits = []
        for i in range(g.num_vertices):
            for j in range(i + 1, g.num_vertices):
                a, b = order[i], order[j]
                bits.append("1" if (min(a, b), max(a, b)) in edge_set else "0")
        s = "".join(bits)
        if best is None or s < best:
            best = s
    assert best is not None
    return f"{g.num_vertices}:{best}"


def _strip_isolated(g: Graph) -> Graph:
    used = sorted({v for e in g.edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    return Graph(len(used), tuple(sorted((relabel[u], relabel[v]) for u, v in g.edges)))


def _single_edge_extensions(g: Graph) -> Iterator[Graph]:
    adj = [set(nb) for nb in g.adjacency()]
    n = g.num_vertices
    for u in range(n):
        for v in range(u + 1, n):
            if v in adj[u] or (adj[u] & adj[v]):
                continue
            yield Graph(n, tuple(sorted(g.edges + ((u, v),))))
    for u in range(n):
        yield Graph(n + 1, tuple(sorted(g.edges + ((u, n),))))


def enumerate_triangle_free(
    max_edges: int, include_disconnected: bool = False
) -> Iterator[Graph]:
    """All triangle-free graphs with 1..max_edges edges and no isolated
    vertices, up to isomorphism — connected by default, optionally also the
    disconnected ones (disjoint unions of the connected catalogue).

    Built level by level: every connected graph with m edges arises from one
    with m-1 edges by adding an edge (between existing vertices or to a
    fresh leaf), so extending and deduplicating by canonical form is
    exhaustive. Deterministic output order: edge count, then vertex count,
    then certificate.
    """
    if max_edges > MAX_ENUM_EDGES:
        raise InstanceTooLarge(f"enumeration capped at {MAX_ENUM_EDGES} edges")
    if max_edges < 1:
        return
    levels: list[list[Graph]] = [[Graph(2, ((0, 1),))]]
    yield levels[0][0]
    by_edges: dict[int, list[Graph]] = {1: list(levels[0])}
    for m in range(2, max_edges + 1):
        seen: dict[str, Graph] = {}
        for g in levels[-1]:
            for h in _single_edge_extensions(g):
                if not is_triangle_free(h):
                    continue
                cert = canonical_form(h)
                if cert not in seen:
                    seen[cert] = h
        level = [seen[c] for c in sorted(seen, key=lambda c: (int(c.split(":")[0]), c))]
        levels.append(level)
        by_edges[m] = level
        for g in level:
            yield g
    if not include_disconnected:
        return
    # Disjoint unions: multisets of >= 2 connected pieces, non-decreasing by
    # (edge count, certificate) so each multiset appears once.
    catalogue = [
        (m, canonical_form(g), g) for m in sorted(by_edges) for g in by_edges[m]
    ]

    def unions(start: int, budget: int, parts: list[Graph]) -> Iterator[tuple[Graph, ...]]:
        if len(parts) >= 2:
            yield tuple(parts)
        for idx in range(start, len(catalogue)):
            m, _cert, g = catalogue[idx]
            if m > budget:
                continue
            yield from unions(idx, budget - m, parts + [g])

    combos = []
    for parts in unions(0, max_edges, []):
        offset = 0
        edges: list[tuple[int, int]] = []
        for part in parts:
            edges.extend((u + offset, v + offset) for u, v in part.edges)
            offset += part.num_vertices
        combos.append(Graph(offset, tuple(sorted(edges))))
    combos.sort(key=lambda g: (g.num_edges, g.num_vertices, canonical_form(g)))
    for g in combos:
        yield g


def random_triangle_free(n: int, target_degree: int, seed: int) -> Graph:
    """Seeded rejection sampler: shuffle all vertex pairs, insert an edge
    whenever it keeps the graph triangle-free with max degree <=
    target_degree. The result is maximal for the visit order, deterministic
    per seed. target_degree=1 yields a matching."""
    if target_degree < 1:
        raise PreconditionViolated("target degree must be at least 1")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if len(adj[u]) >= target_degree or len(adj[v]) >= target_degree:
            continue
        if adj[u] & adj[v]:
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    g = Graph(n, tuple(sorted(edges)))
    assert is_triangle_free(g)
    return g


def oracle_report_to_dict(report: OracleReport) -> dict:
    return {
        "optimal_cost": report.optimal_cost,
        "partition": [list(b) for b in report.partition],
        "centers": [list(c) for c in report.centers],
        "method": report.method,
    }
