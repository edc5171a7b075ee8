"""Exact LP: spec examples plus an independent brute-force oracle.

The oracle enumerates candidate vertices of {x : Ax >= b} as solutions of
n-subsets of tight constraints and candidate rays from (n-1)-subsets, fully
independently of the simplex code path.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from orderbands.linalg import nullspace, solve
from orderbands.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, lp_feasible, lp_optimize
from orderbands.rational import dot, mat, vec


def brute_force_min(c, A, b):
    """(status, value) by vertex/ray enumeration. Assumes a pointed region
    (rank A = n), which all generated instances satisfy."""
    n = len(c)
    verts = []
    for idx in combinations(range(len(A)), n):
        x = solve([A[i] for i in idx], vec([b[i] for i in idx]))
        if x is not None and all(dot(row, x) >= bb for row, bb in zip(A, b)):
            verts.append(x)
    if not verts:
        return (INFEASIBLE, None)
    for size in (n - 1, n):
        for idx in combinations(range(len(A)), size):
            for r in nullspace([A[i] for i in idx], n):
                for ray in (r, tuple(-x for x in r)):
                    if all(dot(row, ray) >= 0 for row in A) and dot(c, ray) < 0:
                        return (UNBOUNDED, None)
    return (OPTIMAL, min(dot(c, v) for v in verts))


def test_min_over_triangle_boundary():
    A = mat([[1, 0], [0, 1], [1, 1]])
    b = vec([0, 0, 1])
    res = lp_optimize(vec([1, 0]), A, b, "min")
    assert res.status == OPTIMAL
    assert res.value == 0
    assert res.witness[0] == 0 and dot(vec([1, 1]), res.witness) >= 1


def test_max_unbounded():
    res = lp_optimize(vec([1]), mat([[1]]), vec([0]), "max")
    assert res.status == UNBOUNDED


def test_infeasible_with_farkas():
    A = mat([[1], [-1]])
    b = vec([1, 0])
    res = lp_optimize(vec([0]), A, b, "min")
    assert res.status == INFEASIBLE
    y = res.farkas
    assert all(v >= 0 for v in y)
    assert sum(y[i] * A[i][0] for i in range(2)) == 0
    assert y[0] * b[0] + y[1] * b[1] > 0


def test_duality_identity_on_optimal():
    A = mat([[1, 0], [0, 1], [1, 2], [-1, -1]])
    b = vec([0, 0, 2, -5])
    c = vec([3, "1/2"])
    res = lp_optimize(c, A, b, "min")
    assert res.status == OPTIMAL
    assert dot(c, res.witness) == res.value
    for j in range(2):
        assert sum(res.dual[i] * A[i][j] for i in range(len(A))) == c[j]
    assert sum(res.dual[i] * b[i] for i in range(len(A))) == res.value


def test_degenerate_rhs_signs():
    # rows with negative rhs exercise the row-flip bookkeeping
    A = mat([[-1, 0], [0, -1], [1, 1]])
    b = vec([-3, -3, 1])
    res = lp_optimize(vec([1, 1]), A, b, "min")
    assert res.status == OPTIMAL and res.value == 1


def test_empty_constraint_list():
    res = lp_optimize(vec([0, 0]), [], [], "min")
    assert res.status == OPTIMAL and res.value == 0
    res = lp_optimize(vec([1, 0]), [], [], "min")
    assert res.status == UNBOUNDED


@pytest.mark.parametrize("seed", range(40))
def test_against_brute_force(seed):
    import random

    rng = random.Random(seed)
    n = rng.choice([2, 3])
    k = rng.randint(n, n + 4)
    A = mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)])
    while len({tuple(r) for r in A}) < n or all(all(x == 0 for x in r) for r in A):
        A = mat([[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)])
    from orderbands.linalg import rank

    if rank(A) < n:  # oracle only covers pointed regions
        A = mat(list(A) + [[1 if i == j else 0 for j in range(n)] for i in range(n)])
        k = len(A)
    b = vec([rng.randint(-4, 4) for _ in range(k)])
    c = vec([Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n)])
    res = lp_optimize(c, A, b, "min")
    status, value = brute_force_min(c, A, b)
    assert res.status == status
    if status == OPTIMAL:
        assert res.value == value


def test_feasibility_wrapper():
    res = lp_feasible(mat([[1, 1]]), vec([2]))
    assert res.status == OPTIMAL
    assert dot(vec([1, 1]), res.witness) >= 2
