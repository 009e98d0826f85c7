"""Constructions from covering problems to Euclidean clustering instances.

A graph with m edges becomes m points in R^n: edge (i, j) maps to the 0/1
vector with ones exactly at coordinates i and j. Squared distances then live
in {2, 4} — 2 when two edges share an endpoint, 4 when they are disjoint —
which is what the cost-threshold arithmetic rides on.

The hypergraph variant targets discrete k-means: a d-uniform hyperedge maps to
the sum of its d vertex indicators, and the candidate centers are the vertex
indicators themselves, giving center-to-point squared distances d-1 (vertex in
the hyperedge) or d+1 (not).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import EmptyGraph
from .graphs import Graph, is_triangle_free, max_degree

Vector = tuple[float, ...]

OBJECTIVES = ("median", "means")


@dataclass(frozen=True)
class ClusteringInstance:
    """Point set in R^dimension with target k; centers are free (continuous
    case, ``candidate_centers`` is None) or restricted to a finite set."""

    dimension: int
    points: tuple[Vector, ...]
    k: int
    objective: str
    candidate_centers: Optional[tuple[Vector, ...]] = None

    def __post_init__(self) -> None:
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        for x in self.points:
            if len(x) != self.dimension:
                raise ValueError("point dimension mismatch")
        if self.candidate_centers is not None:
            for c in self.candidate_centers:
                if len(c) != self.dimension:
                    raise ValueError("center dimension mismatch")


@dataclass(frozen=True)
class HypergraphInstance:
    """d-uniform hypergraph on vertices 0..num_vertices-1 plus a target k."""

    d: int
    num_vertices: int
    hyperedges: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("uniformity d must be >= 2")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        for f in self.hyperedges:
            if len(set(f)) != self.d:
                raise ValueError(f"hyperedge {f} does not have {self.d} distinct vertices")
            if any(not 0 <= u < self.num_vertices for u in f):
                raise ValueError(f"hyperedge {f} out of range")

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)


@dataclass(frozen=True)
class GapPrediction:
    """Cost thresholds a reduction promises: any cover of target size keeps the
    clustering cost at yes_cost, and absence of such a cover forces at least
    no_cost_lower."""

    yes_cost: float
    no_cost_lower: float
    parameters: dict = field(default_factory=dict)


def _indicator(dimension: int, ones: Sequence[int]) -> Vector:
    x = [0.0] * dimension
    for i in ones:
        x[i] = 1.0
    return tuple(x)


def reduce_graph(g: Graph, k: int, objective: str) -> ClusteringInstance:
    """Map each edge (i, j) to the point e_i + e_j in R^num_vertices.

    Triangle-freeness is what the downstream cost analysis assumes; a graph
    with triangles still reduces, with a warning, because the construction
    itself does not care.
    """
    if g.num_edges == 0:
        raise EmptyGraph("graph reduction needs at least one edge")
    if not is_triangle_free(g):
        warnings.warn("graph has triangles; cost thresholds are not guaranteed", stacklevel=2)
    points = tuple(_indicator(g.num_vertices, e) for e in g.edges)
    return ClusteringInstance(g.num_vertices, points, k, objective)


def auto_no_regime(g: Graph, k: int) -> bool:
    """True when k < m / (2 * max_degree): every k-clustering then has some
    cluster of more than 2*max_degree edges, which no single vertex can touch,
    so the instance is a forced "no" regardless of cover structure."""
    delta = max_degree(g)
    return delta > 0 and k < g.num_edges / (2 * delta)


def pairwise_squared_distance_check(inst: ClusteringInstance, g: Graph) -> bool:
    """Verify the {2, 4} squared-distance pattern of a graph reduction:
    2 exactly when the two underlying edges share an endpoint, else 4."""
    if len(inst.points) != g.num_edges:
        return False
    for a in range(len(inst.points)):
        for b in range(a + 1, len(inst.points)):
            sq = sum((xa - xb) ** 2 for xa, xb in zip(inst.points[a], inst.points[b]))
            shares = bool(set(g.edges[a]) & set(g.edges[b]))
            if sq != (2.0 if shares else 4.0):
                return False
    return True


def reduce_hypergraph(h: HypergraphInstance) -> ClusteringInstance:
    """Discrete k-means instance: one point per hyperedge (sum of vertex
    indicators), candidate centers = all vertex indicators."""
    points = tuple(_indicator(h.num_vertices, f) for f in h.hyperedges)
    centers = tuple(_indicator(h.num_vertices, (u,)) for u in range(h.num_vertices))
    return ClusteringInstance(h.num_vertices, points, h.k, "means", centers)


def predict_gap_graph(m: int, k: int, objective: str, delta: float) -> GapPrediction:
    """Cost thresholds of the graph reduction.

    median: yes m - k/2 vs no-lower m - k/2 + delta*k
    means:  yes m - k   vs no-lower m - k   + delta*k
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}")
    if m < 1 or k < 1:
        raise ValueError("m and k must be >= 1")
    if delta < 0:
        raise ValueError("delta must be >= 0")
    yes = m - k / 2 if objective == "median" else m - float(k)
    return GapPrediction(
        yes_cost=yes,
        no_cost_lower=yes + delta * k,
        parameters={"m": m, "k": k, "objective": objective, "delta": delta},
    )


def predict_gap_hypergraph(d: int, n_hyperedges: int, p: float) -> GapPrediction:
    """Discrete k-means thresholds: full cover costs (d-1)N; leaving a
    p-fraction of hyperedges uncovered costs (d-1)(1-p)N + (d+1)pN = (d-1)N + 2pN."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    yes = (d - 1) * float(n_hyperedges)
    return GapPrediction(
        yes_cost=yes,
        no_cost_lower=yes + 2 * p * n_hyperedges,
        parameters={"d": d, "N": n_hyperedges, "p": p},
    )


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def parse_hyperedges(text: str, d: Optional[int] = None, k: int = 1) -> HypergraphInstance:
    """One space-separated vertex list per line; # starts a comment.

    Uniformity is inferred from the first hyperedge unless given explicitly.
    """
    hyperedges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        f = tuple(sorted(int(tok) for tok in line.split()))
        if d is None:
            d = len(f)
        if len(f) != d:
            raise ValueError(f"line {lineno}: expected {d} vertices, got {len(f)}")
        hyperedges.append(f)
    if d is None:
        raise ValueError("no hyperedges found")
    num_vertices = 1 + max((u for f in hyperedges for u in f), default=-1)
    return HypergraphInstance(d, num_vertices, tuple(hyperedges), k)


def instance_to_dict(inst: ClusteringInstance) -> dict:
    return {
        "dimension": inst.dimension,
        "k": inst.k,
        "objective": inst.objective,
        "points": [list(x) for x in inst.points],
        "candidate_centers": (
            None if inst.candidate_centers is None else [list(c) for c in inst.candidate_centers]
        ),
    }


def instance_from_dict(obj: dict) -> ClusteringInstance:
    missing = {"dimension", "points", "k", "objective"} - obj.keys()
    if missing:
        raise ValueError(f"instance JSON is missing fields: {sorted(missing)}")
    centers = obj.get("candidate_centers")
    return ClusteringInstance(
        dimension=obj["dimension"],
        points=tuple(tuple(float(v) for v in x) for x in obj["points"]),
        k=obj["k"],
        objective=obj["objective"],
        candidate_centers=(
            None if centers is None else tuple(tuple(float(v) for v in c) for c in centers)
        ),
    )


def instance_to_json(inst: ClusteringInstance) -> str:
    return json.dumps(instance_to_dict(inst), sort_keys=True, indent=2) + "\n"


def instance_from_json(text: str) -> ClusteringInstance:
    return instance_from_dict(json.loads(text))
