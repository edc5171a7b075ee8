"""Disjointness, disjoint complements, bands, and restriction/extension.

Disjoint complements are computed through the cover support criterion
(x and y are disjoint iff their cover images have pointwise product zero);
the definition through equality of upper-bound sets is kept alive in the
polyhedral backend as the independent cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence, Union

from orderbands.linalg import SubspaceBasis, kernel_of
from orderbands.polyhedra import HPoly, poly_subset
from orderbands.polyspace import PolySpace
from orderbands.rational import RVec, vabs, vadd, vmax, vneg, vsub
from orderbands import verdict as v


@dataclass(frozen=True)
class BandDescriptor:
    """A subspace together with its cover support and certification flags."""

    space: object
    carrier: object            # SubspaceBasis (polyspace) or funcspace subspace
    support: object            # frozenset of coordinates, or a funcspace region
    band_certified: bool = False
    directed: Optional[bool] = None

    def with_flags(self, **kw) -> "BandDescriptor":
        return replace(self, **kw)


def support(s: PolySpace, x: RVec) -> frozenset:
    return frozenset(j for j, c in enumerate(s.embed(x)) if c != 0)


def subspace_support(s: PolySpace, basis: SubspaceBasis) -> frozenset:
    # union over any basis: a generic combination attains the union
    out: set = set()
    for b in basis.basis:
        out |= support(s, b)
    return frozenset(out)


def upper_set(M: Sequence[RVec], s: PolySpace) -> HPoly:
    """Exact H-form of M^u = {u : u >= m for all m in M}.

    The intersection of the shifted cones {i(u) >= i(m)} collapses to a
    single system {i(u) >= p} with p the coordinatewise max of the images.
    """
    if not M:
        raise ValueError("M must be nonempty")
    p = s.embed(M[0])
    for mm in M[1:]:
        p = vmax(p, s.embed(mm))
    return HPoly(tuple(s.dual_rays), p)


def upper_set_subset(p: RVec, q: RVec, s: PolySpace) -> bool:
    """{u : i(u) >= p} subseteq {u : i(u) >= q}, by per-constraint LP.

    min{f_j.u : i(u) >= p} is evaluated through the precomputed vertices of
    the dual polytopes, which is the same LP solved parametrically.
    """
    tight = s.tightened_rhs(p)
    return all(tight[j] >= q[j] for j in range(s.m))


def is_disjoint_def(x: RVec, y: RVec, s: PolySpace, via_lp: bool = False) -> bool:
    """Definition route: {x+y, -x-y}^u = {x-y, -x+y}^u as sets in X."""
    if not isinstance(s, PolySpace):
        raise TypeError("the definition route runs in the polyhedral backend only")
    p = vabs(s.embed(vadd(x, y)))
    q = vabs(s.embed(vsub(x, y)))
    if via_lp:
        hp = HPoly(tuple(s.dual_rays), p)
        hq = HPoly(tuple(s.dual_rays), q)
        return poly_subset(hp, hq) and poly_subset(hq, hp)
    return upper_set_subset(p, q, s) and upper_set_subset(q, p, s)


def is_disjoint_cover(x, y, s) -> bool:
    """Cover route: pointwise product of the images is zero."""
    if isinstance(s, PolySpace):
        return not (support(s, x) & support(s, y))
    from orderbands.funcspace import spaces as fspaces

    return fspaces.is_disjoint_cover(x, y, s)


class PairOracle:
    """Batch evaluator for the two disjointness routes over integer points.

    The definition route needs, per pair, the canonically tightened right
    hand sides of two upper sets; min{f_j.u : Fu >= p} = max{p.lam} over the
    fixed dual polytope vertices, so after clearing denominators every pair
    costs only integer dot products.  Results are identical to the
    Fraction-level routes (positive scalings preserve both criteria), which
    the acceptance suite spot-checks.
    """

    def __init__(self, s: PolySpace):
        from orderbands.rational import primitive_int_vec

        self.s = s
        self.F_int = [primitive_int_vec(f) for f in s.dual_rays]
        self.vertices: list[list[tuple[int, ...]]] = []
        self.denoms: list[int] = []
        for j in range(s.m):
            # lam >= 0 with sum lam_l f_l = f_j, in the integer scaling
            verts = _integer_dual_vertices(self.F_int, j)
            vlist, D = _clear_denominators(verts)
            self.vertices.append(vlist)
            self.denoms.append(D)

    def image(self, x_int: tuple) -> tuple:
        return tuple(sum(f[t] * x_int[t] for t in range(len(x_int))) for f in self.F_int)

    def upper_subset(self, p: tuple, q: tuple) -> bool:
        """{u : F'u >= p} within {u : F'u >= q} for integer rhs vectors."""
        for j in range(len(self.F_int)):
            best = None
            for lam in self.vertices[j]:
                val = sum(a * b for a, b in zip(p, lam))
                if best is None or val > best:
                    best = val
            if best < self.denoms[j] * q[j]:
                return False
        return True

    def disjoint_def(self, ix: tuple, iy: tuple) -> bool:
        p = tuple(abs(a + b) for a, b in zip(ix, iy))
        q = tuple(abs(a - b) for a, b in zip(ix, iy))
        return self.upper_subset(p, q) and self.upper_subset(q, p)

    @staticmethod
    def disjoint_cover(ix: tuple, iy: tuple) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(ix, iy))


def _integer_dual_vertices(F_int, j):
    from orderbands.polyhedra import polytope_vertices
    from orderbands.rational import unit_vec, vec

    m = len(F_int)
    n = len(F_int[0])
    rows: list = [unit_vec(m, t) for t in range(m)]
    rhs: list = [Fraction(0)] * m
    for t in range(n):
        col = vec([F_int[l][t] for l in range(m)])
        rows.append(col)
        rhs.append(Fraction(F_int[j][t]))
        rows.append(tuple(-x for x in col))
        rhs.append(Fraction(-F_int[j][t]))
    return polytope_vertices(HPoly.make(rows, rhs))


def _clear_denominators(verts):
    from math import gcd

    D = 1
    for v in verts:
        for x in v:
            D = D * x.denominator // gcd(D, x.denominator)
    out = [tuple(int(x * D) for x in v) for v in verts]
    return out, D


def oracle_equivalence_check(s: PolySpace, points) -> list:
    """Compare is_disjoint_def and is_disjoint_cover over all pairs of the
    given integer points; returns the list of mismatching pairs."""
    oracle = PairOracle(s)
    imgs = [oracle.image(tuple(int(c) for c in p)) for p in points]
    mismatches = []
    for i in range(len(points)):
        for k in range(i, len(points)):
            d_def = oracle.disjoint_def(imgs[i], imgs[k])
            d_cov = oracle.disjoint_cover(imgs[i], imgs[k])
            if d_def != d_cov:
                mismatches.append((points[i], points[k], d_def, d_cov))
    return mismatches


def disjoint_complement(A, s) -> BandDescriptor:
    """A^d = {x : x disjoint from every element of A}."""
    if not isinstance(s, PolySpace):
        from orderbands.funcspace import spaces as fspaces

        return fspaces.disjoint_complement(A, s)
    if isinstance(A, BandDescriptor):
        J = A.support
    elif isinstance(A, SubspaceBasis):
        J = subspace_support(s, A)
    else:
        A = list(A)
        if not A:
            raise ValueError("A must be nonempty")
        J = frozenset().union(*(support(s, a) for a in A))
    carrier = kernel_of([s.dual_rays[j] for j in sorted(J)], s.n)
    return BandDescriptor(
        space=s,
        carrier=carrier,
        support=subspace_support(s, carrier),
        band_certified=True,
    )


def band_generated(A, s) -> BandDescriptor:
    """The band generated by A: the double disjoint complement A^dd."""
    return disjoint_complement(disjoint_complement(A, s), s)


def _as_carrier(W, s):
    if isinstance(W, BandDescriptor):
        return W.carrier
    return W


def is_band(W, s) -> v.PredicateResult:
    """Is W equal to its double disjoint complement?"""
    if not isinstance(s, PolySpace):
        from orderbands.funcspace import spaces as fspaces

        return fspaces.is_band(W, s)
    carrier = _as_carrier(W, s)
    dd = band_generated(carrier, s)
    if dd.carrier == carrier:
        return v.yes(None, "W equals its double disjoint complement")
    wit = next(b for b in dd.carrier.basis if not carrier.contains(b))
    return v.no({"element": wit}, "element of W^dd outside W")


def coordinate_band(s: PolySpace, J: frozenset) -> BandDescriptor:
    """Restriction to X of the cover band {w : w_j = 0 for j not in J}."""
    killed = [s.dual_rays[j] for j in range(s.m) if j not in J]
    carrier = kernel_of(killed, s.n)
    return BandDescriptor(s, carrier, subspace_support(s, carrier), band_certified=False)


def check_restriction_extension(B: BandDescriptor, s: PolySpace,
                                generators_A: Optional[Sequence[RVec]] = None) -> dict:
    """Verify (E), (R) and the fordable identity [i(A)^dd]i = A^dd.

    (E): the cover band generated by i(B) restricts back to B — holds for
    every band.  (R): restrictions of cover bands are bands in X — asserted
    on fordable spaces, reported either way.  The identity is checked for
    the supplied generating set A.
    """
    from orderbands.polyspace import is_fordable

    report: dict = {"space": s.name}
    J = B.support if isinstance(B.support, frozenset) else subspace_support(s, B.carrier)
    restricted = coordinate_band(s, J)
    report["extension_holds"] = restricted.carrier == B.carrier
    if not report["extension_holds"]:
        bad = next((b for b in restricted.carrier.basis if not B.carrier.contains(b)), None)
        report["extension_witness"] = bad

    fordable = is_fordable(s).is_yes
    report["fordable"] = fordable
    restr_rows = []
    supports = {frozenset(), frozenset(range(s.m))}
    supports.add(J)
    for x in s.cone_rays:
        supports.add(support(s, x))
    for JJ in sorted(supports, key=sorted):
        cb = coordinate_band(s, JJ)
        band_res = is_band(cb.carrier, s)
        restr_rows.append({"support": sorted(JJ), "is_band": band_res.verdict})
    report["restriction_rows"] = restr_rows
    report["restriction_holds"] = all(r["is_band"] == "yes" for r in restr_rows)

    if generators_A is not None:
        add = band_generated(list(generators_A), s)
        JA = frozenset().union(*(support(s, a) for a in generators_A))
        cover_band_restricted = coordinate_band(s, JA)
        report["proposition_identity_holds"] = cover_band_restricted.carrier == add.carrier
        if not report["proposition_identity_holds"]:
            bad = next(
                (b for b in cover_band_restricted.carrier.basis if not add.carrier.contains(b)),
                None,
            )
            report["proposition_witness"] = bad
    return report
