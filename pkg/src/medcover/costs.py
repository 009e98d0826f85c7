"""Single-cluster cost machinery.

For a cluster of edge-points (the image of a graph under the indicator
reduction) the 1-median cost of several special shapes has an exact closed
form: regular simplices (stars and disjoint-edge packings are both simplices
after the reduction), the star-plus-lone-edge family A_n, and the 3-edge path.
Everything else is solved numerically with Weiszfeld's fixed-point iteration,
hardened at data points via the standard subgradient test.

1-means costs need no solver at all: the optimal center is the centroid and
the cost collapses to sum_v deg(v) * (1 - deg(v)/r), evaluated here in exact
rational arithmetic.

``extra_cost`` measures how far a cluster's 1-center cost sits above the best
possible (star) cost of the same size — the quantity the soundness bounds
charge per non-star cluster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DomainError
from .graphs import ClassTag, Graph, GraphClass, classify

Number = Union[float, Fraction]

BASIS_CLOSED = "exact_closed_form"
BASIS_UPPER = "numerical_upper"
BASIS_LOWER = "certified_lower"

_SNAP = 1e-12  # distance under which an iterate is treated as sitting on a data point


@dataclass(frozen=True)
class MedianSolution:
    """Result of a 1-median solve. ``cost`` is recomputed from (points, center)
    at construction time by the solver, never trusted from the iteration."""

    center: tuple[float, ...]
    cost: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class ExtraCost:
    """Cost of a cluster above the same-size star baseline.

    basis says how the figure was obtained: an exact closed form, a numerical
    upper estimate (Weiszfeld), or a certified lower bound.
    """

    value: Number
    basis: str


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def sqrt_bound(m: float, t: float) -> tuple[float, float]:
    """Two-sided bracket for sqrt(m(m-1)) valid for m >= t > 1:

        m - (t - sqrt(t(t-1)))  <=  sqrt(m(m-1))  <=  m - 1/2

    The lower bound tightens as t grows and is exact at m = t.
    """
    if t <= 1 or m < t:
        raise DomainError(f"need m >= t > 1, got m={m}, t={t}")
    return m - (t - math.sqrt(t * (t - 1))), m - 0.5


def simplex_median_cost(r: int, s: float) -> float:
    """1-median cost of r vertices of a regular simplex with side s: the
    optimum sits at the centroid and costs s * sqrt(r(r-1)/2)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if s <= 0:
        raise ValueError("side length must be positive")
    return s * math.sqrt(r * (r - 1) / 2)


def star_median_cost(r: int) -> float:
    """Star with r edges: its edge-points form a simplex of side sqrt(2),
    giving cost sqrt(r(r-1)) — the minimum over all r-edge clusters.

    Written directly (not via simplex_median_cost) so it is bit-identical to
    the sqrt(r(r-1)) baseline used by extra_cost.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return math.sqrt(r * (r - 1))


def disjoint_edges_median_cost(r: int) -> float:
    """r pairwise vertex-disjoint edges: simplex of side 2, cost sqrt(2)*sqrt(r(r-1)).

    Evaluated as sqrt(2r(r-1)) so that r=2 yields exactly 2.0.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return math.sqrt(2.0 * r * (r - 1))


def a_n_median_cost(n: int) -> float:
    """Star with n edges plus one vertex-disjoint edge (r = n+1 edges total):

        sqrt(r(r-1)) + sqrt(3 + 1/(r-1)) - sqrt(r/(r-1))

    For n = 1 this degenerates to 2, matching two disjoint edges.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r = n + 1
    return math.sqrt(r * (r - 1)) + math.sqrt(3 + 1 / (r - 1)) - math.sqrt(r / (r - 1))


def l1_median_cost() -> float:
    """3-edge path (two stars of one edge each joined by a bridge): 1 + sqrt(3)."""
    return 1.0 + math.sqrt(3.0)


# ---------------------------------------------------------------------------
# Numerical 1-median (Weiszfeld with subgradient handling at data points)
# ---------------------------------------------------------------------------

def weiszfeld(
    points: Sequence[Sequence[float]],
    tolerance: float = 1e-12,
    max_iter: int = 100_000,
) -> MedianSolution:
    """Geometric median by Weiszfeld iteration from the centroid.

    When an iterate lands on (within 1e-12 of) a data point, the classical
    update is undefined; we apply the subgradient optimality test there —
    the point is optimal iff the summed unit vectors toward the other points
    have norm <= 1 — and otherwise step away along the descent direction with
    the (||R|| - 1)/L step that guarantees progress.

    Stops when the relative cost change or the center displacement drops
    below ``tolerance``. On hitting ``max_iter`` the best iterate is returned
    with converged=False rather than raising.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("need a non-empty sequence of equal-length vectors")

    def total_cost(y: np.ndarray) -> float:
        return float(np.linalg.norm(pts - y, axis=1).sum())

    y = pts.mean(axis=0)
    if pts.shape[0] == 1:
        return MedianSolution(tuple(float(v) for v in y), 0.0, 0, True)

    prev_cost = total_cost(y)
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        dist = np.linalg.norm(pts - y, axis=1)
        on_point = dist < _SNAP
        if on_point.any():
            away = pts[~on_point]
            if away.shape[0] == 0:  # all points coincide
                converged = True
                break
            d_away = np.linalg.norm(away - y, axis=1)
            r_vec = ((away - y) / d_away[:, None]).sum(axis=0)
            r_norm = float(np.linalg.norm(r_vec))
            multiplicity = int(on_point.sum())
            if r_norm <= multiplicity:  # subgradient contains 0: optimal here
                converged = True
                break
            lipschitz = float((1.0 / d_away).sum())
            y_next = y + (r_norm - multiplicity) / lipschitz * (r_vec / r_norm)
        else:
            w = 1.0 / dist
            y_next = (pts * w[:, None]).sum(axis=0) / w.sum()
        cost = total_cost(y_next)
        step = float(np.linalg.norm(y_next - y))
        y = y_next
        if abs(prev_cost - cost) <= tolerance * max(1.0, cost) or step <= tolerance:
            prev_cost = cost
            converged = True
            break
        prev_cost = cost
    return MedianSolution(tuple(float(v) for v in y), total_cost(y), iterations, converged)


# ---------------------------------------------------------------------------
# Graph clusters
# ---------------------------------------------------------------------------

def cluster_points(g: Graph) -> np.ndarray:
    """Edge-indicator embedding of a cluster: one {0,1}^n point per edge."""
    pts = np.zeros((g.num_edges, g.num_vertices))
    for row, (u, v) in enumerate(g.edges):
        pts[row, u] = 1.0
        pts[row, v] = 1.0
    return pts


def closed_form_median_cost(g: Graph, cls: Optional[GraphClass] = None) -> Optional[float]:
    """Exact 1-median cost of the embedded cluster when its class has one."""
    if cls is None:
        cls = classify(g)
    r = g.num_edges
    if cls.tag is ClassTag.SINGLE_EDGE:
        return 0.0
    if cls.tag is ClassTag.STAR:
        return star_median_cost(r)
    if cls.tag is ClassTag.THREE_P2:
        return disjoint_edges_median_cost(3)
    if cls.tag is ClassTag.A_N:
        return a_n_median_cost(cls.n)
    if cls.tag is ClassTag.L_N and cls.n == 1:
        return l1_median_cost()
    return None


def median_cost(g: Graph, tolerance: float = 1e-12, max_iter: int = 100_000) -> tuple[float, str]:
    """1-median cost of a cluster: closed form if recognized, else Weiszfeld.

    Returns (cost, basis).
    """
    exact = closed_form_median_cost(g)
    if exact is not None:
        return exact, BASIS_CLOSED
    sol = weiszfeld(cluster_points(g), tolerance=tolerance, max_iter=max_iter)
    return sol.cost, BASIS_UPPER


def one_means_cost(g: Graph) -> Fraction:
    """Optimal 1-means cost of a cluster with r edges, exactly:

        sum_v deg(v) * (1 - deg(v)/r)

    The optimal center is the centroid, and for indicator points the sum of
    squared distances to it reduces to this degree expression. A star with r
    edges gives r - 1, the minimum over all r-edge clusters.
    """
    r = g.num_edges
    if r < 1:
        raise ValueError("cluster must have at least one edge")
    return sum(
        (Fraction(d) * (1 - Fraction(d, r)) for d in g.degrees() if d),
        start=Fraction(0),
    )


def extra_cost(
    g: Graph,
    objective: str,
    tolerance: float = 1e-12,
    max_iter: int = 100_000,
) -> ExtraCost:
    """Cluster cost above the same-size star baseline.

    median: 1-median cost minus sqrt(r(r-1)); exact when the class has a
    closed form, otherwise a numerical upper estimate.
    means:  1-means cost minus (r-1), always exact (rational arithmetic).
    """
    r = g.num_edges
    if objective == "means":
        return ExtraCost(one_means_cost(g) - (r - 1), BASIS_CLOSED)
    if objective != "median":
        raise ValueError("objective must be 'median' or 'means'")
    cost, basis = median_cost(g, tolerance=tolerance, max_iter=max_iter)
    return ExtraCost(cost - math.sqrt(r * (r - 1)), basis)
