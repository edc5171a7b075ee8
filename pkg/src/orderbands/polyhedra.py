"""Exact polyhedra: H- and V-representations and double description.

The engine is incremental double description on a pointed cone; lineality is
split off exactly beforehand via the kernel of the constraint matrix, and
general polyhedra are handled through homogenization.  Rays are canonically
scaled (first nonzero coordinate 1) so generator lists compare
deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from orderbands.linalg import nullspace, rank, rref, solve
from orderbands.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, lp_optimize
from orderbands.rational import (
    ONE,
    RVec,
    ZERO,
    canonical_ray,
    dot,
    is_zero_vec,
    vec,
    vscale,
    zero_vec,
)


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HPoly:
    """{x : Ax >= b}.  Rows with zero normal are rejected at construction."""

    A: tuple[RVec, ...]
    b: RVec

    def __post_init__(self):
        if len(self.A) != len(self.b):
            raise DimensionMismatch("A and b lengths differ")
        for row in self.A:
            if is_zero_vec(row):
                raise ValueError("zero normal row in H-representation")
            if len(row) != self.dim:
                raise DimensionMismatch("ragged constraint matrix")
        if self.A and self.dim < 1:
            raise ValueError("ambient dimension must be >= 1")

    @property
    def dim(self) -> int:
        return len(self.A[0]) if self.A else 0

    @property
    def k(self) -> int:
        return len(self.A)

    def contains(self, x: RVec) -> bool:
        return all(dot(row, x) >= beta for row, beta in zip(self.A, self.b))

    @staticmethod
    def cone(rows: Sequence[RVec]) -> "HPoly":
        rows = tuple(vec(r) for r in rows)
        return HPoly(rows, zero_vec(len(rows)))

    @staticmethod
    def make(rows: Sequence[Sequence], rhs: Sequence) -> "HPoly":
        return HPoly(tuple(vec(r) for r in rows), vec(rhs))


@dataclass(frozen=True)
class VPoly:
    """conv(vertices) + cone(rays) + span(lineality); empty iff no vertices."""

    dim: int
    vertices: tuple[RVec, ...] = ()
    rays: tuple[RVec, ...] = ()
    lineality: tuple[RVec, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def points(self) -> tuple[RVec, ...]:
        return self.vertices


def _dd_pointed_cone(rows: list[RVec], d: int) -> list[RVec]:
    """Extreme rays of {w in R^d : rows . w >= 0}, assuming the rows span R^d.

    Incremental double description with the algebraic adjacency test; tight
    sets are tracked as bitmasks over the inserted rows.
    """
    if d == 0:
        return []
    # initial simplicial cone from d independent rows
    chosen: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in chosen] + [rows[i]]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                break
    assert len(chosen) == d, "rows do not span the quotient space"
    # rays of {Mw >= 0} are the columns of M^{-1}
    cols = []
    for j in range(d):
        e = tuple(ONE if t == j else ZERO for t in range(d))
        x = solve([rows[i] for i in chosen], e)
        assert x is not None
        cols.append(x)
    processed = list(chosen)
    ray_tight: list[tuple[RVec, int]] = []
    for r in cols:
        mask = 0
        for pos, i in enumerate(processed):
            if dot(rows[i], r) == 0:
                mask |= 1 << pos
        ray_tight.append((r, mask))

    for i in range(len(rows)):
        if i in chosen:
            continue
        a = rows[i]
        pos_, zero_, neg_ = [], [], []
        for r, mask in ray_tight:
            v = dot(a, r)
            (pos_ if v > 0 else zero_ if v == 0 else neg_).append((r, mask, v))
        newpos = len(processed)
        processed.append(i)
        nxt: list[tuple[RVec, int]] = []
        for r, mask, _ in pos_:
            nxt.append((r, mask))
        for r, mask, _ in zero_:
            nxt.append((r, mask | (1 << newpos)))
        all_masks = [m for _, m, _ in pos_ + zero_ + neg_]
        for rp, mp, vp in pos_:
            for rn, mn, vn in neg_:
                common = mp & mn
                # adjacency: no third ray is tight on all common constraints
                adjacent = True
                for idx, m in enumerate(all_masks):
                    if m & common == common:
                        cand = (pos_ + zero_ + neg_)[idx][0]
                        if cand is not rp and cand is not rn:
                            adjacent = False
                            break
                if not adjacent:
                    continue
                # conic combination vanishing on a: vp*(a.rn) - vn*(a.rp) = 0
                comb = tuple(vp * yn - vn * xp for xp, yn in zip(rp, rn))
                nxt.append((canonical_ray(comb), common | (1 << newpos)))
        ray_tight = nxt
    return sorted(canonical_ray(r) for r, _ in ray_tight)


def cone_generators(h: HPoly) -> tuple[list[RVec], list[RVec]]:
    """(extreme rays, lineality basis) of the cone {x : Ax >= 0}.

    The rhs of `h` is ignored; callers pass homogeneous systems.
    """
    n = h.dim
    if n == 0:
        return [], []
    rows = list(h.A)
    if not rows:
        from orderbands.rational import unit_vec

        return [], [unit_vec(n, j) for j in range(n)]
    lin = nullspace(rows, n)
    # complement W of the lineality: coordinates not pivotal in lin's RREF
    red, pivots = rref(lin)
    free = [c for c in range(n) if c not in pivots]
    d = len(free)
    if d == 0:
        return [], sorted(canonical_ray(l) for l in lin)
    proj_rows = [tuple(row[c] for c in free) for row in rows]
    proj_rows = [r for r in proj_rows if not is_zero_vec(r)]
    rays_w = _dd_pointed_cone(proj_rows, d)
    rays = []
    for rw in rays_w:
        full = [ZERO] * n
        for val, c in zip(rw, free):
            full[c] = val
        rays.append(canonical_ray(tuple(full)))
    return sorted(rays), sorted(canonical_ray(l) for l in lin)


def dd_convert_h_to_v(h: HPoly) -> VPoly:
    """Exact V-representation of {x : Ax >= b}; empty input is reported
    through an empty vertex list."""
    n = h.dim
    if n == 0:
        raise ValueError("dimensionless polyhedron")
    # homogenize: {(x, t) : Ax - bt >= 0, t >= 0}
    rows = [tuple(r) + (-beta,) for r, beta in zip(h.A, h.b)]
    rows.append(zero_vec(n) + (ONE,))
    cone = HPoly(tuple(rows), zero_vec(len(rows)))
    rays, lin = cone_generators(cone)
    verts, recession = [], []
    for r in rays:
        if r[n] > 0:
            verts.append(vscale(1 / r[n], r)[:n])
        else:
            recession.append(canonical_ray(r[:n]))
    lineality = []
    for l in lin:
        assert l[n] == 0, "lineality with nonzero homogenizing coordinate"
        lineality.append(canonical_ray(l[:n]))
    return VPoly(n, tuple(sorted(verts)), tuple(sorted(recession)), tuple(sorted(lineality)))


def dd_convert_v_to_h(v: VPoly) -> HPoly:
    """Exact H-representation of a nonempty V-polyhedron."""
    if v.is_empty:
        raise ValueError("V-polyhedron with no vertices (empty set) has no H-form")
    n = v.dim
    # dual cone of cone{(vert,1)} + cone{(ray,0)} + span{(lin,0)}
    gens = [tuple(p) + (ONE,) for p in v.vertices]
    gens += [tuple(r) + (ZERO,) for r in v.rays]
    rows = list(gens)
    for l in v.lineality:
        rows.append(tuple(l) + (ZERO,))
        rows.append(tuple(-x for x in l) + (ZERO,))
    dual = HPoly(tuple(rows), zero_vec(len(rows)))
    drays, dlin = cone_generators(dual)
    ineqs: list[tuple[RVec, Fraction]] = []
    for a in drays:
        normal, beta = a[:n], a[n]
        if is_zero_vec(normal):
            continue  # the trivial facet t >= 0
        ineqs.append((normal, -beta))
    for a in dlin:
        normal, beta = a[:n], a[n]
        if is_zero_vec(normal):
            continue
        ineqs.append((normal, -beta))
        ineqs.append((tuple(-x for x in normal), beta))
    if not ineqs:
        # whole space: represent by a single vacuous halfspace pair? keep empty A
        return HPoly((), ())
    ineqs.sort()
    return HPoly(tuple(a for a, _ in ineqs), tuple(b for _, b in ineqs))


def dd_convert(p):
    """H<->V conversion; dispatches on the representation type."""
    if isinstance(p, HPoly):
        return dd_convert_h_to_v(p)
    if isinstance(p, VPoly):
        return dd_convert_v_to_h(p)
    raise TypeError(f"not a polyhedron: {p!r}")


def poly_subset(p, q: HPoly, witness: bool = False):
    """Is p a subset of {x : Ax >= b}?  With witness=True, returns
    (bool, separating point or None)."""
    if isinstance(p, VPoly):
        if p.dim != q.dim and q.A:
            raise DimensionMismatch("ambient dimensions differ")
        for x in p.vertices:
            if not q.contains(x):
                return (False, x) if witness else False
        for row, beta in zip(q.A, q.b):
            for r in p.rays:
                if dot(row, r) < 0:
                    bad = _push_along(p.vertices[0], r, row, beta)
                    return (False, bad) if witness else False
            for l in p.lineality:
                d = dot(row, l)
                if d != 0:
                    direction = l if d < 0 else tuple(-x for x in l)
                    bad = _push_along(p.vertices[0], direction, row, beta)
                    return (False, bad) if witness else False
        return (True, None) if witness else True
    if isinstance(p, HPoly):
        if p.dim != q.dim and p.A and q.A:
            raise DimensionMismatch("ambient dimensions differ")
        for row, beta in zip(q.A, q.b):
            res = lp_optimize(row, p.A, p.b, "min")
            if res.status == INFEASIBLE:
                return (True, None) if witness else True  # p empty
            if res.status == UNBOUNDED or res.value < beta:
                if res.status == UNBOUNDED:
                    base = lp_optimize(zero_vec(p.dim), p.A, p.b, "min").witness
                    bad = _push_along(base, res.ray, row, beta)
                else:
                    bad = res.witness
                return (False, bad) if witness else False
        return (True, None) if witness else True
    raise TypeError(f"not a polyhedron: {p!r}")


def _push_along(base: RVec, direction: RVec, row: RVec, beta: Fraction) -> RVec:
    """A point base + t*direction violating row.x >= beta (exists since the
    directional derivative is negative)."""
    t = ONE
    while dot(row, tuple(b + t * d for b, d in zip(base, direction))) >= beta:
        t *= 2
    return tuple(b + t * d for b, d in zip(base, direction))


def poly_equal(p: HPoly, q: HPoly) -> bool:
    return poly_subset(p, q) and poly_subset(q, p)


def make_region(rows: Sequence, rhs: Sequence) -> tuple[Optional[HPoly], bool]:
    """HPoly from generated constraints, filtering vacuous zero rows.

    Returns (region, trivially_empty): a zero row with positive rhs makes the
    system empty; zero rows with rhs <= 0 are dropped.  `region` is None when
    no constraints remain (whole space) or the system is trivially empty.
    """
    from orderbands.rational import vec as _vec

    kept_rows, kept_rhs = [], []
    for row, beta in zip(rows, rhs, strict=True):
        row = _vec(row)
        if is_zero_vec(row):
            if beta > 0:
                return None, True
            continue
        kept_rows.append(row)
        kept_rhs.append(beta)
    if not kept_rows:
        return None, False
    return HPoly.make(kept_rows, kept_rhs), False


def polytope_vertices(h: HPoly) -> list[RVec]:
    """Vertices of a bounded, nonempty {x : Ax >= b}."""
    v = dd_convert_h_to_v(h)
    assert not v.rays and not v.lineality, "polytope expected"
    return list(v.vertices)
