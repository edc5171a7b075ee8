"""Exactly representable functions: piecewise-affine base, a t^2 coefficient,
and finitely many point overrides; plus the exact region algebra their zero
sets live in.

Every evaluation at a rational point is exact.  Zero sets are finite unions
of (possibly half-open) rational intervals and rational points, with a
marker coordinate recording a vanishing t^2 coefficient; irrational roots
of quadratic pieces never enter as points (they are irrelevant for every
coverage verdict, since uncovered remainders always have rational
endpoints).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Optional, Sequence

from orderbands.rational import ONE, Rat, ZERO, fmt, rat

TWO = Fraction(2)

#: domain tag -> (continuum lo, continuum hi, has the extra point 2, global line)
DOMAINS = {
    "pm1": (Fraction(-1), Fraction(1), False, False),
    "r": (Fraction(-1), Fraction(1), False, True),
    "a01_2": (Fraction(0), Fraction(1), True, False),
    "pm1_2": (Fraction(-1), Fraction(1), True, False),
}


def sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    if q == 0:
        return ZERO
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True, order=True)
class Iv:
    """A nonempty interval with open/closed end flags."""

    lo: Fraction
    hi: Fraction
    lc: bool = True
    rc: bool = True

    def contains(self, t: Fraction) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lc:
            return False
        if t == self.hi and not self.rc:
            return False
        return True

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class Region:
    """Finite union of intervals and points inside a continuum [lo, hi],
    plus flags for the extra point 2 and the at-infinity marker."""

    ivs: tuple[Iv, ...] = ()
    points: frozenset = frozenset()
    at2: bool = False
    marker: bool = False

    @staticmethod
    def make(ivs: Iterable = (), points: Iterable = (), at2: bool = False,
             marker: bool = False) -> "Region":
        raw: list[Iv] = []
        pts = {rat(p) for p in points}
        for item in ivs:
            if isinstance(item, Iv):
                iv = item
            else:
                a, b = item
                iv = Iv(rat(a), rat(b))
            if iv.lo > iv.hi:
                continue
            if iv.degenerate:
                if iv.lc and iv.rc:
                    pts.add(iv.lo)
                continue
            raw.append(iv)
        return Region(_normalize(raw, pts), frozenset(_residual_points(raw, pts)),
                      at2, marker)

    @staticmethod
    def empty() -> "Region":
        return Region()

    def contains(self, t) -> bool:
        if t == 2 and not any(iv.contains(TWO) for iv in self.ivs):
            return self.at2 or TWO in self.points
        t = rat(t)
        return any(iv.contains(t) for iv in self.ivs) or t in self.points

    def union(self, other: "Region") -> "Region":
        return Region.make(self.ivs + other.ivs, self.points | other.points,
                           self.at2 or other.at2, self.marker or other.marker)

    def closure(self) -> "Region":
        ivs = [Iv(iv.lo, iv.hi, True, True) for iv in self.ivs]
        return Region.make(ivs, self.points, self.at2, self.marker)

    def interval_part(self) -> "Region":
        return Region.make(self.ivs, (), False, False)

    def boundary_points(self) -> list[Fraction]:
        out = set(self.points)
        for iv in self.ivs:
            out.add(iv.lo)
            out.add(iv.hi)
        return sorted(out)

    def complement_gaps(self, lo: Fraction, hi: Fraction) -> list[tuple]:
        """Uncovered cells of [lo, hi]: ('point', t) and open ('gap', a, b)."""
        bps = sorted({lo, hi} | {p for p in self.boundary_points() if lo <= p <= hi})
        out: list[tuple] = []
        for i, p in enumerate(bps):
            if not self.contains(p):
                out.append(("point", p))
            if i + 1 < len(bps):
                a, b = p, bps[i + 1]
                mid = (a + b) / 2
                if not self.contains(mid):
                    out.append(("gap", a, b))
        return out

    def covers(self, lo: Fraction, hi: Fraction) -> bool:
        return not self.complement_gaps(lo, hi)

    def subset_of(self, other: "Region", lo: Fraction, hi: Fraction) -> bool:
        if (self.at2 and not other.at2) or (self.marker and not other.marker):
            return False
        bps = sorted({lo, hi} | set(self.boundary_points()) | set(other.boundary_points()))
        for i, p in enumerate(bps):
            if self.contains(p) and not other.contains(p):
                return False
            if i + 1 < len(bps):
                mid = (p + bps[i + 1]) / 2
                if self.contains(mid) and not other.contains(mid):
                    return False
        return True


def _normalize(ivs: list[Iv], pts: set) -> tuple[Iv, ...]:
    """Sort, merge overlapping/closed-touching intervals, and close open ends
    that sit on isolated points, until stable."""
    work = list(ivs)
    pts = set(pts)
    changed = True
    while changed:
        changed = False
        work.sort()
        merged: list[Iv] = []
        for iv in work:
            if merged:
                last = merged[-1]
                if iv.lo < last.hi or (iv.lo == last.hi and (iv.lc or last.rc)):
                    if iv.hi > last.hi:
                        nhi, nrc = iv.hi, iv.rc
                    else:
                        nhi, nrc = last.hi, last.rc or (iv.rc and iv.hi == last.hi)
                    nlc = last.lc or (iv.lc and iv.lo == last.lo)
                    merged[-1] = Iv(last.lo, nhi, nlc, nrc)
                    changed = True
                    continue
            merged.append(iv)
        work = merged
        for i, iv in enumerate(work):
            if not iv.lc and iv.lo in pts:
                work[i] = Iv(iv.lo, iv.hi, True, iv.rc)
                changed = True
            iv = work[i]
            if not iv.rc and iv.hi in pts:
                work[i] = Iv(iv.lo, iv.hi, iv.lc, True)
                changed = True
    return tuple(work)


def _residual_points(ivs: list[Iv], pts: set) -> set:
    norm = _normalize(ivs, pts)
    return {p for p in pts if not any(iv.contains(p) for iv in norm)}


# --------------------------------------------------------------- elements

@dataclass(frozen=True)
class PAQuadElem:
    """Piecewise-affine base + quad * t^2 + point overrides on a tagged domain.

    Overrides store the *total* value at exceptional points; for domains
    with the extra point 2 the value there is always an override.
    """

    domain: str
    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    quad: Fraction = ZERO
    overrides: tuple[tuple[Fraction, Fraction], ...] = ()

    @staticmethod
    def make(domain: str, pairs: Sequence, quad=0, overrides: Sequence = (),
             value_at_2=None) -> "PAQuadElem":
        lo, hi, has2, _ = DOMAINS[domain]
        bps = [rat(p) for p, _ in pairs]
        vals = [rat(v) for _, v in pairs]
        if not bps or bps[0] != lo or bps[-1] != hi:
            raise ValueError(f"breakpoints must span [{fmt(lo)}, {fmt(hi)}]")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        ov = {rat(p): rat(v) for p, v in overrides}
        if has2:
            if value_at_2 is not None:
                ov[TWO] = rat(value_at_2)
            if TWO not in ov:
                raise ValueError("domains with the point 2 need a value there")
        elif TWO in ov or value_at_2 is not None:
            raise ValueError("no point 2 in this domain")
        return PAQuadElem(domain, tuple(bps), tuple(vals), rat(quad),
                          ()).replace_overrides(ov)

    @staticmethod
    def constant(domain: str, c, value_at_2=None) -> "PAQuadElem":
        lo, hi, has2, _ = DOMAINS[domain]
        v2 = (c if value_at_2 is None else value_at_2) if has2 else None
        return PAQuadElem.make(domain, [(lo, c), (hi, c)], value_at_2=v2)

    def replace_overrides(self, ov: dict) -> "PAQuadElem":
        _, _, has2, _ = DOMAINS[self.domain]
        canon = []
        for p in sorted(ov):
            if p == TWO and has2:
                canon.append((p, ov[p]))
            elif ov[p] != self.base_eval(p):
                canon.append((p, ov[p]))
        slim = _drop_collinear(self.breakpoints, self.values)
        return PAQuadElem(self.domain, slim[0], slim[1], self.quad, tuple(canon))

    # ---- evaluation

    def base_eval(self, t: Fraction) -> Fraction:
        t = rat(t)
        bps, vals = self.breakpoints, self.values
        _, _, _, global_line = DOMAINS[self.domain]
        if t <= bps[0]:
            i = 0
        elif t >= bps[-1]:
            i = len(bps) - 2
        else:
            i = bisect.bisect_right(bps, t) - 1
        a, b = bps[i], bps[i + 1]
        if not global_line and not (bps[0] <= t <= bps[-1]):
            raise ValueError(f"{fmt(t)} outside the domain")
        va, vb = vals[i], vals[i + 1]
        lin = va + (vb - va) * (t - a) / (b - a)
        return lin + self.quad * t * t

    def eval(self, t) -> Fraction:
        t = rat(t)
        for p, v in self.overrides:
            if p == t:
                return v
        if t == TWO and DOMAINS[self.domain][2]:
            raise AssertionError("value at 2 must be an override")
        return self.base_eval(t)

    @property
    def value_at_2(self) -> Fraction:
        for p, v in self.overrides:
            if p == TWO:
                return v
        raise ValueError("domain has no point 2")

    # ---- linear algebra

    def _binary(self, other: "PAQuadElem", op: Callable) -> "PAQuadElem":
        if self.domain != other.domain:
            raise ValueError("domain mismatch")
        bps = sorted(set(self.breakpoints) | set(other.breakpoints))
        vals = [op(self.base_eval(t) - self.quad * t * t,
                   other.base_eval(t) - other.quad * t * t) for t in bps]
        quad = op(self.quad, other.quad)
        out = PAQuadElem(self.domain, tuple(bps), tuple(vals), quad, ())
        ov_pts = {p for p, _ in self.overrides} | {p for p, _ in other.overrides}
        ov = {p: op(self.eval(p), other.eval(p)) for p in ov_pts}
        return out.replace_overrides(ov)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "PAQuadElem":
        c = rat(c)
        out = PAQuadElem(self.domain, self.breakpoints,
                         tuple(c * v for v in self.values), c * self.quad, ())
        return out.replace_overrides({p: c * v for p, v in self.overrides})

    @property
    def is_zero(self) -> bool:
        return (self.quad == 0 and all(v == 0 for v in self.values)
                and all(v == 0 for _, v in self.overrides))

    # ---- order and geometry

    def piece_functions(self):
        """(a, b, quad, slope, intercept) per base piece."""
        out = []
        for i in range(len(self.breakpoints) - 1):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            va, vb = self.values[i], self.values[i + 1]
            m = (vb - va) / (b - a)
            c = va - m * a
            out.append((a, b, self.quad, m, c))
        return out

    def is_nonneg(self) -> bool:
        """Pointwise nonnegativity over the whole domain, exactly."""
        lo, hi, has2, global_line = DOMAINS[self.domain]
        if global_line:
            if len(self.breakpoints) != 2:
                raise ValueError("global-line elements are single-piece")
            (_, _, q, m, c) = self.piece_functions()[0]
            if q < 0:
                return False
            if q == 0:
                ok = m == 0 and c >= 0
            else:
                ok = m * m - 4 * q * c <= 0
            return ok
        for a, b, q, m, c in self.piece_functions():
            for t in (a, b):
                if q * t * t + m * t + c < 0:
                    return False
            if q > 0:
                vtx = -m / (2 * q)
                if a < vtx < b and q * vtx * vtx + m * vtx + c < 0:
                    return False
        for _, v in self.overrides:
            if v < 0:
                return False
        return True

    def zero_set(self) -> Region:
        """{t : value zero}, with the marker recording quad == 0."""
        lo, hi, has2, global_line = DOMAINS[self.domain]
        ivs: list[Iv] = []
        pts: set = set()
        for a, b, q, m, c in self.piece_functions():
            if q == 0 and m == 0 and c == 0:
                ivs.append(Iv(a, b))
                continue
            roots: list[Fraction] = []
            if q == 0:
                if m != 0:
                    roots = [-c / m]
            else:
                disc = m * m - 4 * q * c
                if disc == 0:
                    roots = [-m / (2 * q)]
                elif disc > 0:
                    r = sqrt_fraction(disc)
                    if r is not None:
                        roots = [(-m - r) / (2 * q), (-m + r) / (2 * q)]
            for t in roots:
                if (a <= t <= b) or global_line:
                    pts.add(t)
        # overrides adjust pointwise
        removed: set = set()
        for p, v in self.overrides:
            if p == TWO:
                continue
            if v == 0:
                pts.add(p)
            else:
                removed.add(p)
                pts.discard(p)
        region = Region.make(ivs, pts, at2=(has2 and self.value_at_2 == 0),
                             marker=(self.quad == 0))
        for p in removed:
            region = _puncture(region, p)
        return region


def _puncture(region: Region, p: Fraction) -> Region:
    ivs: list[Iv] = []
    for iv in region.ivs:
        if not iv.contains(p):
            ivs.append(iv)
            continue
        if p > iv.lo:
            ivs.append(Iv(iv.lo, p, iv.lc, False))
        if p < iv.hi:
            ivs.append(Iv(p, iv.hi, False, iv.rc))
    return Region(tuple(sorted(ivs)), region.points - {p}, region.at2, region.marker)


def _drop_collinear(bps: tuple, vals: tuple):
    bps = list(bps)
    vals = list(vals)
    i = 1
    while i < len(bps) - 1:
        a, b, c = bps[i - 1], bps[i], bps[i + 1]
        va, vb, vc = vals[i - 1], vals[i], vals[i + 1]
        if (vb - va) * (c - b) == (vc - vb) * (b - a):
            del bps[i], vals[i]
        else:
            i += 1
    return tuple(bps), tuple(vals)


def pa_max(f: PAQuadElem, g: PAQuadElem) -> PAQuadElem:
    """Pointwise max of two elements with equal quad coefficients.

    The result is again in the class: breakpoints are the union plus the
    crossing points of the affine difference.
    """
    return _lattice(f, g, max)


def pa_min(f: PAQuadElem, g: PAQuadElem) -> PAQuadElem:
    return _lattice(f, g, min)


def _lattice(f: PAQuadElem, g: PAQuadElem, pick) -> PAQuadElem:
    if f.domain != g.domain:
        raise ValueError("domain mismatch")
    if f.quad != g.quad:
        raise ValueError("pointwise lattice operations need equal quad parts")
    bps = set(f.breakpoints) | set(g.breakpoints)
    diff = f - g
    for a, b, q, m, c in diff.piece_functions():
        if m != 0:
            t = -c / m
            if a < t < b:
                bps.add(t)
    bps = sorted(bps)
    base_vals = [pick(f.base_eval(t), g.base_eval(t)) - f.quad * t * t for t in bps]
    out = PAQuadElem(f.domain, tuple(bps), tuple(base_vals), f.quad, ())
    ov_pts = {p for p, _ in f.overrides} | {p for p, _ in g.overrides}
    ov = {p: pick(f.eval(p), g.eval(p)) for p in ov_pts}
    return out.replace_overrides(ov)
