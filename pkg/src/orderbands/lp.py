"""Exact rational linear programming.

Two-phase simplex with Bland's rule over `Fraction`; the feasible region is
always given in the form {x : Ax >= b}.  Every verdict ships with an exactly
re-verified certificate: a primal witness and dual vector for `optimal`, an
improving ray for `unbounded`, and a Farkas vector for `infeasible`.  The
certificates are asserted at construction time, so a returned result is
already machine-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from orderbands.rational import RVec, ZERO, dot, vec, zero_vec

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


class LPError(ValueError):
    pass


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    witness: Optional[RVec] = None
    #: dual certificate for the *minimization* form: y >= 0 with A^T y = c
    #: and b.y = value (objective negated internally for sense="max")
    dual: Optional[RVec] = None
    #: improving ray for "unbounded": A ray >= 0 and c.ray < 0 (min form)
    ray: Optional[RVec] = None
    #: Farkas vector for "infeasible": y >= 0, A^T y = 0, b.y > 0
    farkas: Optional[RVec] = None


def _pivot(tab: list[list[Fraction]], r: int, c: int) -> None:
    inv = 1 / tab[r][c]
    tab[r] = [x * inv for x in tab[r]]
    prow = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, prow)]


def _simplex(tab: list[list[Fraction]], basis: list[int], cost: list[Fraction],
             allowed: int) -> tuple[str, Optional[int]]:
    """Run simplex on the tableau; `cost` is the reduced-cost row (mutated).

    Columns >= `allowed` are never eligible to enter (keeps the artificial
    block as an explicit inverse-basis record).  Returns ("optimal", None) or
    ("unbounded", entering_column).
    """
    nrows = len(tab)
    while True:
        enter = next((j for j in range(allowed) if cost[j] < 0), None)
        if enter is None:
            return OPTIMAL, None
        leave, best = None, None
        for i in range(nrows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            return UNBOUNDED, enter
        _pivot(tab, leave, enter)
        piv = cost[enter]
        if piv != 0:
            prow = tab[leave]
            for j in range(len(cost)):
                cost[j] -= piv * prow[j]
        basis[leave] = enter


def lp_minimize(objective: Sequence[Fraction], A: Sequence[RVec], b: Sequence[Fraction]) -> LPResult:
    """min c.x over {x : Ax >= b} with exact certificates."""
    c = vec(objective)
    n = len(c)
    rows = [vec(r) for r in A]
    rhs = vec(b)
    for r in rows:
        if len(r) != n:
            raise LPError(f"constraint row has length {len(r)}, expected {n}")
    if len(rows) != len(rhs):
        raise LPError("constraint matrix and rhs length mismatch")
    k = len(rows)

    if k == 0:
        if all(x == 0 for x in c):
            return LPResult(OPTIMAL, ZERO, zero_vec(n), dual=())
        ray = tuple(-x for x in c)
        return LPResult(UNBOUNDED, ray=ray)

    # standard form: z = (x+, x-, s) >= 0,  [A | -A | -I] z = b
    nstd = 2 * n + k
    signs = [1 if rhs[i] >= 0 else -1 for i in range(k)]
    tab: list[list[Fraction]] = []
    for i in range(k):
        s = signs[i]
        row = [s * x for x in rows[i]] + [-s * x for x in rows[i]]
        row += [(-s if j == i else 0) * Fraction(1) for j in range(k)]
        row += [Fraction(1) if j == i else ZERO for j in range(k)]  # artificials
        row.append(s * rhs[i])
        tab.append([Fraction(x) for x in row])
    basis = [nstd + i for i in range(k)]

    # phase 1: minimize sum of artificials
    cost1 = [ZERO] * (nstd + k) + [ZERO]
    for j in range(nstd + k):
        col = ZERO
        for i in range(k):
            col += tab[i][j]
        cost1[j] = (Fraction(1) if nstd <= j else ZERO) - col
    cost1[-1] = -sum(tab[i][-1] for i in range(k))
    status, _ = _simplex(tab, basis, cost1, allowed=nstd)
    phase1_value = -cost1[-1]
    if phase1_value > 0:
        y = _dual_from_artificials(tab, basis, [ZERO] * nstd + [Fraction(1)] * k, k, nstd, signs)
        assert all(yi >= 0 for yi in y), "Farkas vector not nonnegative"
        comb = [ZERO] * n
        for i in range(k):
            if y[i]:
                for j in range(n):
                    comb[j] += y[i] * rows[i][j]
        assert all(x == 0 for x in comb), "Farkas combination does not vanish"
        assert dot(tuple(y), rhs) > 0, "Farkas value not positive"
        return LPResult(INFEASIBLE, farkas=tuple(y))

    # drive any degenerate artificials out of the basis
    for i in range(k):
        if basis[i] >= nstd:
            enter = next((j for j in range(nstd) if tab[i][j] != 0), None)
            if enter is not None:
                _pivot(tab, i, enter)
                basis[i] = enter
            # else: redundant row, harmless to keep

    # phase 2: original objective
    cstd = list(c) + [-x for x in c] + [ZERO] * k + [ZERO] * k
    cost2 = list(cstd) + [ZERO]
    for i in range(k):
        f = cstd[basis[i]]
        if f != 0:
            for j in range(nstd + k + 1):
                cost2[j] -= f * tab[i][j]
    status, enter = _simplex(tab, basis, cost2, allowed=nstd)

    if status == UNBOUNDED:
        direction = [ZERO] * (nstd + k)
        direction[enter] = Fraction(1)
        for i in range(k):
            direction[basis[i]] = -tab[i][enter]
        ray = tuple(direction[j] - direction[n + j] for j in range(n))
        for i in range(k):
            assert dot(rows[i], ray) >= 0, "unbounded ray leaves the region"
        assert dot(c, ray) < 0, "unbounded ray does not improve"
        return LPResult(UNBOUNDED, ray=ray)

    z = [ZERO] * (nstd + k)
    for i in range(k):
        z[basis[i]] = tab[i][-1]
    x = tuple(z[j] - z[n + j] for j in range(n))
    value = dot(c, x)
    y = _dual_from_artificials(tab, basis, cstd, k, nstd, signs)
    assert all(yi >= 0 for yi in y), "dual not nonnegative"
    for j in range(n):
        assert sum(y[i] * rows[i][j] for i in range(k)) == c[j], "dual identity A^T y = c fails"
    assert dot(tuple(y), rhs) == value, "strong duality fails"
    for i in range(k):
        assert dot(rows[i], x) >= rhs[i], "primal witness infeasible"
    return LPResult(OPTIMAL, value, x, dual=tuple(y))


def _dual_from_artificials(tab, basis, cstd, k, nstd, signs):
    """y = c_B B^{-1}, read off the artificial block, in original row signs."""
    y = []
    for i in range(k):
        yi = ZERO
        for r in range(k):
            cb = cstd[basis[r]] if basis[r] < len(cstd) else ZERO
            if cb != 0 and tab[r][nstd + i] != 0:
                yi += cb * tab[r][nstd + i]
        y.append(signs[i] * yi)
    return y


def lp_optimize(objective: Sequence[Fraction], A: Sequence[RVec], b: Sequence[Fraction],
                sense: str = "min") -> LPResult:
    """Exact optimum of c.x over {x : Ax >= b}; sense is "min" or "max"."""
    if sense == "min":
        return lp_minimize(objective, A, b)
    if sense != "max":
        raise LPError(f"bad sense {sense!r}")
    res = lp_minimize([-x for x in vec(objective)], A, b)
    if res.status == OPTIMAL:
        return LPResult(OPTIMAL, -res.value, res.witness, dual=res.dual)
    return res


def lp_feasible(A: Sequence[RVec], b: Sequence[Fraction], n: Optional[int] = None) -> LPResult:
    """Feasibility of {x : Ax >= b}: a witness point or a Farkas vector."""
    if n is None:
        if not A:
            raise LPError("ambient dimension required for empty systems")
        n = len(A[0])
    return lp_minimize(zero_vec(n), A, b)
