"""Finite-dimensional ordered vector spaces with polyhedral cones.

A space is the pair (R^n, K) for a pointed generating polyhedral cone K.
The vector lattice cover is R^m with coordinatewise order, m the number of
extreme rays F of the dual cone, and the embedding is i(x) = (F_1.x, ...,
F_m.x).  Bipositivity holds by construction (K = {x : Fx >= 0}); order
density of the image is a verified predicate, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from orderbands.linalg import SubspaceBasis, nullspace, rank, solve
from orderbands.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, lp_feasible, lp_optimize
from orderbands.polyhedra import HPoly, cone_generators, polytope_vertices
from orderbands.rational import (
    ONE,
    RVec,
    ZERO,
    canonical_ray,
    dot,
    unit_vec,
    vec,
    vsub,
    zero_vec,
)
from orderbands import verdict as v


class NotPointed(ValueError):
    """The cone contains a line; carries a nonzero witness x in K and -K."""

    def __init__(self, witness: RVec):
        super().__init__(f"cone is not pointed, witness {witness}")
        self.witness = witness


class NotGenerating(ValueError):
    """span K != R^n; carries a nonzero functional vanishing on span K."""

    def __init__(self, witness: RVec):
        super().__init__(f"cone is not generating, witness functional {witness}")
        self.witness = witness


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class PolySpace:
    n: int
    cone_rays: tuple[RVec, ...]      # extreme rays of K, canonically scaled
    dual_rays: tuple[RVec, ...]      # extreme rays of K*, canonically scaled
    name: str = "space"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.dual_rays)

    @property
    def cone_h(self) -> HPoly:
        return HPoly.cone(self.dual_rays)

    def embed(self, x: RVec) -> RVec:
        if len(x) != self.n:
            raise ValueError(f"element has dimension {len(x)}, space has {self.n}")
        return tuple(dot(f, x) for f in self.dual_rays)

    def in_cone(self, x: RVec) -> bool:
        return all(dot(f, x) >= 0 for f in self.dual_rays)

    def ej_preimage(self, j: int) -> Optional[RVec]:
        """x with i(x) = e_j, or None; cached per coordinate."""
        key = ("ej", j)
        if key not in self._cache:
            self._cache[key] = solve(self.dual_rays, unit_vec(self.m, j))
        return self._cache[key]

    def dual_section_vertices(self, j: int) -> list[RVec]:
        """Vertices of {lam >= 0 : F^T lam = f_j} (bounded since K* is pointed).

        min{f_j . u : Fu >= p} equals max of p.lam over these vertices; the
        cached list turns batches of upper-set inclusion tests into exact
        dot products.
        """
        key = ("lamv", j)
        if key not in self._cache:
            m, n = self.m, self.n
            rows: list[RVec] = [unit_vec(m, t) for t in range(m)]
            rhs: list[Fraction] = [ZERO] * m
            for t in range(n):
                col = tuple(f[t] for f in self.dual_rays)
                rows.append(col)
                rhs.append(self.dual_rays[j][t])
                rows.append(tuple(-x for x in col))
                rhs.append(-self.dual_rays[j][t])
            self._cache[key] = polytope_vertices(HPoly.make(rows, rhs))
        return self._cache[key]

    def tightened_rhs(self, p: RVec) -> RVec:
        """(min{f_j.u : Fu >= p})_j — the canonical rhs of an upper set."""
        out = []
        for j in range(self.m):
            best = None
            for lam in self.dual_section_vertices(j):
                val = dot(p, lam)
                if best is None or val > best:
                    best = val
            out.append(best)
        return tuple(out)


def build_space(rays: Optional[Sequence[Sequence]] = None,
                inequalities: Optional[Sequence[Sequence]] = None,
                name: str = "space") -> PolySpace:
    """Validated space from a cone spec (generator rays or inequalities).

    Rejects non-pointed cones (NotPointed, with x in K and -K) and
    non-generating cones (NotGenerating, with a functional vanishing on
    span K).  Duplicate rays and redundant inequalities are canonicalized
    away by the double-description passes.
    """
    if (rays is None) == (inequalities is None):
        raise ValueError("specify exactly one of rays or inequalities")
    if rays is not None:
        gens = [vec(r) for r in rays]
        if not gens:
            raise ValueError("empty cone spec")
        n = len(gens[0])
        dual_rays, dual_lin = cone_generators(HPoly.cone(gens))
        if dual_lin:
            raise NotGenerating(dual_lin[0])
        if rank(dual_rays) < n:
            # K ∩ -K = {x : Fx = 0} is nonzero
            wit = nullspace(dual_rays, n)[0] if dual_rays else unit_vec(n, 0)
            raise NotPointed(canonical_ray(wit))
        cone_rays, lin = cone_generators(HPoly.cone(dual_rays))
        assert not lin
    else:
        ineqs = [vec(r) for r in inequalities]
        if not ineqs:
            raise ValueError("empty cone spec")
        n = len(ineqs[0])
        cone_rays, lin = cone_generators(HPoly.cone(ineqs))
        if lin:
            raise NotPointed(lin[0])
        if rank(cone_rays) < n:
            wit = nullspace(cone_rays, n)[0]
            raise NotGenerating(canonical_ray(wit))
        dual_rays, dual_lin = cone_generators(HPoly.cone(cone_rays))
        assert not dual_lin
    space = PolySpace(n, tuple(sorted(cone_rays)), tuple(sorted(dual_rays)), name)
    assert rank(space.cone_rays) == n, "generating check failed"
    assert not nullspace(space.dual_rays, n), "pointedness check failed"
    return space


def order_leq(x: RVec, y: RVec, s: PolySpace) -> bool:
    """x <= y iff y - x in K, iff coordinatewise in the cover (bipositivity)."""
    if len(x) != s.n or len(y) != s.n:
        raise ValueError("dimension mismatch")
    return s.in_cone(vsub(y, x))


def order_lt(x: RVec, y: RVec, s: PolySpace) -> bool:
    return x != y and order_leq(x, y, s)


def image_subspace(s: PolySpace) -> SubspaceBasis:
    """i(X) as a subspace of the cover R^m."""
    basis = [s.embed(unit_vec(s.n, t)) for t in range(s.n)]
    return SubspaceBasis.from_vectors(basis, s.m)


Ambient = Union[int, PolySpace]


def is_order_dense(sub: SubspaceBasis, ambient: Ambient) -> v.PredicateResult:
    """Is the subspace order dense in the ambient ordered space?

    Ambient `int m` means the coordinatewise lattice R^m; a PolySpace means
    its cone order (used on explicit subspace chains).  Order density
    reduces to: every upper set cuts the subspace, and for every ambient
    functional f_j the only nonnegative combinations representing f_j on the
    subspace already represent it on the whole space.  Both parts are LPs.
    """
    if isinstance(ambient, PolySpace):
        k = ambient.n
        funcs = list(ambient.dual_rays)
    else:
        k = ambient
        funcs = [unit_vec(k, j) for j in range(k)]
    if sub.ambient != k:
        raise ValueError("subspace lives in a different ambient dimension")
    mprime = len(funcs)
    N = list(sub.basis)          # p x k
    p = len(N)
    if p == 0:
        return v.no(None, "zero subspace is never order dense")

    # (a) some subspace element dominates the all-ones cover element
    rows = [tuple(dot(f, b) for b in N) for f in funcs]
    res = lp_feasible(rows, [ONE] * mprime, n=p)
    if res.status == INFEASIBLE:
        return v.no({"reason": "empty upper set", "farkas": res.farkas},
                    "no subspace element dominates the unit")

    # (b) per functional: nonneg representations on the subspace are exact
    restricted = [tuple(dot(f, b) for b in N) for f in funcs]  # n_j in R^p
    for j in range(mprime):
        # region: lam >= 0, sum_l lam_l n_l = n_j  (in R^{m'})
        region_rows: list[RVec] = [unit_vec(mprime, t) for t in range(mprime)]
        region_rhs: list[Fraction] = [ZERO] * mprime
        for t in range(p):
            col = tuple(restricted[l][t] for l in range(mprime))
            region_rows.append(col)
            region_rhs.append(restricted[j][t])
            region_rows.append(tuple(-x for x in col))
            region_rhs.append(-restricted[j][t])
        for t in range(k):
            coeff = tuple(funcs[l][t] for l in range(mprime))
            for sense in ("min", "max"):
                res = lp_optimize(coeff, region_rows, region_rhs, sense)
                if res.status == UNBOUNDED or res.value != funcs[j][t]:
                    wit = res.witness if res.status == OPTIMAL else res.ray
                    return v.no({"j": j, "coordinate": t, "lam": wit},
                                "a nonnegative combination deviates from the functional")
    return v.yes(None, "all functional representations are exact")


def is_lattice_rdp(s: PolySpace) -> v.PredicateResult:
    """Vector lattice / RDP verdict: yes iff the cone is simplicial (m = n).

    In this backend the two properties coincide (a finite-dimensional
    Archimedean space with closed generating cone and RDP is a vector
    lattice), so one verdict is reported for both.
    """
    if s.m == s.n:
        return v.yes({"m": s.m}, "simplicial cone: lattice and RDP")
    return v.no({"n": s.n, "m": s.m},
                f"{s.m} extreme dual rays in dimension {s.n}: not simplicial")


def rdp_witness_check(s: PolySpace, x1: RVec, x2: RVec, z: RVec) -> v.PredicateResult:
    """Does z <= x1 + x2 decompose as z = z1 + z2, 0 <= z_i <= x_i?"""
    for el, nm in ((x1, "x1"), (x2, "x2"), (z, "z")):
        if not s.in_cone(el):
            raise PreconditionViolated(f"{nm} is not positive")
    total = tuple(a + b for a, b in zip(x1, x2))
    if not order_leq(z, total, s):
        raise PreconditionViolated("z <= x1 + x2 fails")
    F = s.dual_rays
    rows: list[RVec] = []
    rhs: list[Fraction] = []
    for f in F:
        rows.append(f)
        rhs.append(ZERO)                       # z1 >= 0
        rows.append(tuple(-x for x in f))
        rhs.append(-dot(f, z))                 # z1 <= z
        rows.append(f)
        rhs.append(dot(f, vsub(z, x2)))        # z - z1 <= x2
        rows.append(tuple(-x for x in f))
        rhs.append(-dot(f, x1))                # z1 <= x1
    res = lp_feasible(rows, rhs, n=s.n)
    if res.status == OPTIMAL:
        z1 = res.witness
        z2 = vsub(z, z1)
        return v.yes({"z1": z1, "z2": z2}, "decomposition found by exact LP")
    return v.no({"farkas": res.farkas}, "decomposition system is infeasible (Farkas certificate)")


def is_pervasive(s: PolySpace) -> v.PredicateResult:
    """Pervasive iff every cover unit vector lies in i(X).

    0 <= v <= e_j in R^m forces v = t e_j, so the universal quantifier over
    cover elements collapses to m exact linear solves.
    """
    missing = [j for j in range(s.m) if s.ej_preimage(j) is None]
    if not missing:
        return v.yes({"preimages": [s.ej_preimage(j) for j in range(s.m)]},
                     "every cover unit vector has a preimage")
    return v.no({"coordinate": missing[0]},
                f"cover unit vector e_{missing[0]} has no preimage in i(X)")


def is_fordable(s: PolySpace) -> v.PredicateResult:
    """Fordable iff every coordinate supports a singleton-support image.

    x with supp(i(x)) = {j} rescales to i(x) = e_j, so for this backend the
    test coincides with pervasiveness (every pervasive pre-Riesz space is
    fordable; here the converse holds too).
    """
    res = is_pervasive(s)
    just = res.justification + ("equivalent to pervasiveness in the polyhedral backend",)
    return v.PredicateResult(res.verdict, res.witness, just)


def _section_max(s: PolySpace, lower: RVec, upper: RVec, objective: RVec):
    """max objective.x over {x : lower <= i(x) <= upper} (cover bounds)."""
    rows: list[RVec] = []
    rhs: list[Fraction] = []
    for j, f in enumerate(s.dual_rays):
        rows.append(f)
        rhs.append(lower[j])
        rows.append(tuple(-x for x in f))
        rhs.append(-upper[j])
    return lp_optimize(objective, rows, rhs, "max")


def pervasive_certificates(s: PolySpace, samples: Sequence[RVec]) -> dict:
    """Check the sup characterizations of pervasiveness at sample cover points.

    For each y > 0: (iii) the coordinatewise sup of {x : 0 <= i(x) <= y}
    equals y; (iv) the shifted variant over [i(z), y]; (ii) existence of x
    with i(z) < i(x) <= y.  An empty section at some y refutes pervasiveness
    at that y and is reported as such.
    """
    perv = is_pervasive(s)
    if perv.is_no and not samples:
        samples = [unit_vec(s.m, perv.witness["coordinate"])]
    sum_obj = tuple(sum(f[t] for f in s.dual_rays) for t in range(s.n))
    rows = []
    for y in samples:
        y = vec(y)
        if len(y) != s.m:
            raise ValueError("sample must live in the cover R^m")
        if not (all(c >= 0 for c in y) and any(c > 0 for c in y)):
            raise PreconditionViolated("sample must be a positive cover element")
        entry = {"y": y}
        probe = _section_max(s, zero_vec(s.m), y, sum_obj)
        if probe.status != OPTIMAL or probe.value == 0:
            entry.update(empty_section=True, iii=False, iv=False, ii=False)
            rows.append(entry)
            continue
        entry["empty_section"] = False
        sup = tuple(_section_max(s, zero_vec(s.m), y, f).value for f in s.dual_rays)
        entry["iii"] = sup == y
        # shifted forms with z := -(first cone ray), i(z) < 0 < y
        z = tuple(-c for c in s.cone_rays[0])
        iz = s.embed(z)
        sup_shift = tuple(_section_max(s, iz, y, f).value for f in s.dual_rays)
        entry["iv"] = sup_shift == y
        probe2 = _section_max(s, iz, y, sum_obj)
        entry["ii"] = probe2.status == OPTIMAL and s.embed(probe2.witness) != iz
        rows.append(entry)
    all_hold = all(r["iii"] and r["iv"] and r["ii"] for r in rows)
    return {
        "space": s.name,
        "is_pervasive": perv.verdict,
        "samples": rows,
        "agreement": all_hold if perv.is_yes else True,
    }
