import random
from fractions import Fraction as Q

import numpy as np
import pytest
from scipy.optimize import linprog

from vgit import lp, polytope


def test_textbook_lp():
    res = lp.maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert res.ok and res.x == (2, 6) and res.value == 36


def test_infeasible_and_unbounded():
    assert lp.maximize([1, 1], [[1, 1]], [-1]).status == lp.INFEASIBLE
    assert lp.maximize([1], [[-1]], [0]).status == lp.UNBOUNDED


def test_free_variables_and_equalities():
    res = lp.minimize([1, 1], [[-1, -1]], [-3], [[1, -1]], [-5], free=[0, 1])
    assert res.ok and res.value == 3 and res.x[0] - res.x[1] == -5


def test_degenerate_cycling_example():
    # Beale's example cycles under the textbook rule; Bland's rule terminates
    c = [Q(3, 4), -150, Q(1, 50), -6]
    A = [[Q(1, 4), -60, Q(-1, 25), 9], [Q(1, 2), -90, Q(-1, 50), 3], [0, 0, 1, 0]]
    res = lp.maximize(c, A, [0, 0, 1])
    assert res.ok and res.value == Q(1, 20)


@pytest.mark.parametrize("seed", range(40))
def test_matches_floating_point_solver(seed):
    rng = random.Random(seed)
    nv, m = rng.randint(1, 4), rng.randint(1, 6)
    A = [[rng.randint(-5, 5) for _ in range(nv)] for _ in range(m)]
    b = [rng.randint(-3, 8) for _ in range(m)]
    c = [rng.randint(-4, 4) for _ in range(nv)]
    free = [j for j in range(nv) if rng.random() < 0.3]
    bounds = [(None, None) if j in free else (0, None) for j in range(nv)]
    ref = linprog(-np.array(c, float), A_ub=np.array(A, float), b_ub=np.array(b, float), bounds=bounds,
                  method="highs")
    res = lp.maximize(c, A, b, free=free)
    if ref.status == 2:
        assert res.status == lp.INFEASIBLE
    elif ref.status == 3:
        assert res.status == lp.UNBOUNDED
    else:
        assert res.ok
        assert abs(float(res.value) + ref.fun) < 1e-7
        assert all(sum(Q(a) * x for a, x in zip(row, res.x)) <= bi for row, bi in zip(A, b))


def test_max_slack_certifies_interior():
    # open unit square has slack 1/2
    A = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    b = [1, 1, 0, 0]
    t, x = lp.max_slack(A, b, free=[0, 1])
    assert t == Q(1, 2) and x == (Q(1, 2), Q(1, 2))
    t, x = lp.max_slack_from((Q(1, 10), Q(1, 10)), A, b)
    assert t == Q(1, 2)
    # a segment has no interior slack in the plane
    t, _ = lp.max_slack(A, b, A_eq=[[1, -1]], b_eq=[0], free=[0, 1])
    assert t == Q(1, 2)
    t, _ = lp.max_slack(A + [[1, 1]], b + [0], free=[0, 1])
    assert t in (None, 0)


def test_vertices_and_redundancy():
    A = [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1]]
    b = [1, 1, 0, 0, 5]
    assert polytope.vertices(A, b) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert polytope.is_redundant(A, b, 4)
    assert not polytope.is_redundant(A, b, 0)
    assert polytope.implies(A, b, [1, 1], 2)
    assert not polytope.implies(A, b, [1, 1], Q(3, 2))
