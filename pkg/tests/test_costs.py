"""Closed-form costs, the Weiszfeld solver, and exact means arithmetic.

The closed forms and the iterative solver are independent implementations of
the same quantity, so agreement between them is a real check, not a tautology.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from medcover.costs import (
    a_n_median_cost,
    closed_form_median_cost,
    cluster_points,
    disjoint_edges_median_cost,
    extra_cost,
    l1_median_cost,
    median_cost,
    one_means_cost,
    simplex_median_cost,
    sqrt_bound,
    star_median_cost,
    weiszfeld,
)
from medcover.errors import DomainError
from medcover.graphs import graph_from_edges

C5 = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


def star(r):
    return graph_from_edges([(0, i) for i in range(1, r + 1)])


def disjoint(r):
    return graph_from_edges([(2 * i, 2 * i + 1) for i in range(r)])


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def test_star_cost_literals():
    assert star_median_cost(2) == pytest.approx(math.sqrt(2), abs=1e-15)
    assert star_median_cost(5) == pytest.approx(math.sqrt(20), abs=1e-15)
    # a star's points form a regular simplex of side sqrt(2)
    for r in range(2, 9):
        assert star_median_cost(r) == pytest.approx(
            simplex_median_cost(r, math.sqrt(2)), abs=1e-12
        )


def test_disjoint_edges_literals():
    assert disjoint_edges_median_cost(2) == pytest.approx(2.0, abs=1e-15)
    assert disjoint_edges_median_cost(3) == pytest.approx(math.sqrt(12), abs=1e-15)


def test_a_n_literals():
    # one lone edge plus an n-star: n=1 degenerates to two disjoint edges
    assert a_n_median_cost(1) == pytest.approx(2.0, abs=1e-12)
    assert a_n_median_cost(2) == pytest.approx(3.0955735647785594, abs=1e-12)


def test_l1_literal():
    assert l1_median_cost() == pytest.approx(1 + math.sqrt(3), abs=1e-15)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_closed_forms_match_weiszfeld_on_stars(r):
    sol = weiszfeld(cluster_points(star(r)))
    assert sol.converged
    assert sol.cost == pytest.approx(star_median_cost(r), abs=1e-6)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_closed_forms_match_weiszfeld_on_disjoint_edges(r):
    sol = weiszfeld(cluster_points(disjoint(r)))
    assert sol.cost == pytest.approx(disjoint_edges_median_cost(r), abs=1e-6)


def test_closed_form_dispatcher():
    assert closed_form_median_cost(star(4)) == pytest.approx(math.sqrt(12))
    assert closed_form_median_cost(graph_from_edges(C5)) is None
    p4 = graph_from_edges([(0, 1), (1, 2), (2, 3)])
    assert closed_form_median_cost(p4) == pytest.approx(1 + math.sqrt(3))


def test_median_cost_reports_its_basis():
    cost, basis = median_cost(star(3))
    assert basis == "exact_closed_form"
    assert cost == pytest.approx(math.sqrt(6))
    cost, basis = median_cost(graph_from_edges(C5))
    assert basis == "numerical_upper"
    assert cost == pytest.approx(math.sqrt(30), abs=1e-9)


# ---------------------------------------------------------------------------
# Weiszfeld edge cases
# ---------------------------------------------------------------------------

def test_weiszfeld_median_on_a_data_point():
    # for collinear points the median is the middle point itself; the solver
    # must survive landing on it
    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]
    sol = weiszfeld(pts)
    assert sol.converged
    assert sol.cost == pytest.approx(2.0, abs=1e-9)
    assert sol.center[0] == pytest.approx(1.0, abs=1e-6)


def test_weiszfeld_single_and_pair():
    sol = weiszfeld([(3.0, 4.0)])
    assert sol.cost == 0.0
    sol = weiszfeld([(0.0, 0.0), (2.0, 0.0)])
    assert sol.cost == pytest.approx(2.0, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_weiszfeld_beats_every_data_point(seed):
    rng = random.Random(seed)
    pts = [(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(rng.randint(3, 7))]
    sol = weiszfeld(pts)
    arr = np.asarray(pts)
    for p in arr:
        at_p = float(np.linalg.norm(arr - p, axis=1).sum())
        assert sol.cost <= at_p + 1e-9


# ---------------------------------------------------------------------------
# Means costs are exact rationals
# ---------------------------------------------------------------------------

def test_one_means_star_is_r_minus_one():
    for r in range(1, 8):
        assert one_means_cost(star(r)) == Fraction(r - 1)


def test_one_means_disjoint_pair():
    assert one_means_cost(disjoint(2)) == Fraction(2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_one_means_matches_numpy_centroid(seed):
    rng = random.Random(seed)
    edges = {tuple(sorted(rng.sample(range(7), 2))) for _ in range(rng.randint(1, 8))}
    g = graph_from_edges(sorted(edges))
    pts = np.asarray(cluster_points(g))
    sse = float(((pts - pts.mean(axis=0)) ** 2).sum())
    assert float(one_means_cost(g)) == pytest.approx(sse, abs=1e-9)


# ---------------------------------------------------------------------------
# Extra cost above the star baseline
# ---------------------------------------------------------------------------

def test_extra_cost_median_known_classes():
    p4 = graph_from_edges([(0, 1), (1, 2), (2, 3)])
    e = extra_cost(p4, "median")
    assert e.value == pytest.approx(1 + math.sqrt(3) - math.sqrt(6), abs=1e-9)
    e5 = extra_cost(graph_from_edges(C5), "median")
    assert e5.value == pytest.approx(math.sqrt(30) - math.sqrt(20), abs=1e-6)
    assert e5.value >= 0.158


def test_extra_cost_means_is_exact():
    p4 = graph_from_edges([(0, 1), (1, 2), (2, 3)])
    e = extra_cost(p4, "means")
    assert e.value == Fraction(2, 3)
    e2 = extra_cost(disjoint(2), "means")
    assert e2.value == Fraction(1)


# ---------------------------------------------------------------------------
# sqrt bracket
# ---------------------------------------------------------------------------

def test_sqrt_bound_literals():
    lo, hi = sqrt_bound(5.0, 2.0)
    assert lo == pytest.approx(5 - (2 - math.sqrt(2)))
    assert hi == 4.5


@settings(max_examples=80, deadline=None)
@given(
    st.floats(1.001, 50.0, allow_nan=False),
    st.floats(1.001, 50.0, allow_nan=False),
)
def test_sqrt_bound_brackets_the_true_value(a, b):
    m, t = max(a, b), min(a, b)
    lo, hi = sqrt_bound(m, t)
    true = math.sqrt(m * (m - 1))
    assert lo <= true + 1e-9
    assert true <= hi + 1e-12


def test_sqrt_bound_domain():
    with pytest.raises(DomainError):
        sqrt_bound(2.0, 1.0)
    with pytest.raises(DomainError):
        sqrt_bound(1.5, 2.0)
