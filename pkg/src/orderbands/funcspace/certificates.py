"""Order-convergence certificates and their exact verification.

A certificate is a rule-generated sequence (x_k, z_k) with limit x: the
members x_k stay in the target carrier, the dominators z_k decrease,
+-(x - x_k) <= z_k, and the z_k vanish outside declared anchor
neighbourhoods whose radii c/(k+d) shrink to zero.  An exact finite prefix
is checked term by term; the greatest-lower-bound step is the recorded
symbolic rule: any lower bound of the z_k is nonpositive off the finite
anchor set, hence nonpositive everywhere by continuity of the family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from orderbands.funcspace.elements import DOMAINS, PAQuadElem, Region
from orderbands.funcspace.spaces import FuncSpace, vanishes_on
from orderbands.rational import rat


@dataclass(frozen=True)
class ShrinkAnchor:
    point: Fraction
    c: Fraction
    d: Fraction

    def radius(self, k: int) -> Fraction:
        return self.c / (k + self.d)


@dataclass(frozen=True)
class OConvCertificate:
    name: str
    member: Callable[[int], PAQuadElem]
    dominator: Callable[[int], PAQuadElem]
    limit: PAQuadElem
    anchors: tuple[ShrinkAnchor, ...]
    start: int = 2
    prefix: int = 25


def _allowed_region(cert: OConvCertificate, k: int, domain: str) -> Region:
    lo, hi, _, _ = DOMAINS[domain]
    ivs = []
    for a in cert.anchors:
        r = a.radius(k)
        ivs.append((max(lo, a.point - r), min(hi, a.point + r)))
    return Region.make(ivs)


def _forbidden_region(cert: OConvCertificate, k: int, domain: str) -> Region:
    lo, hi, _, _ = DOMAINS[domain]
    allowed = _allowed_region(cert, k, domain)
    ivs, pts = [], []
    for cell in allowed.complement_gaps(lo, hi):
        if cell[0] == "gap":
            ivs.append((cell[1], cell[2]))
        else:
            pts.append(cell[1])
    return Region.make(ivs, pts)


def verify(cert: OConvCertificate, W, s: FuncSpace) -> bool:
    """Exact validation: all checks below must pass on the stored prefix.

    Fails (returns False) as soon as one check breaks, in particular when
    the limit lies inside the carrier.
    """
    carrier = W.carrier if hasattr(W, "carrier") else W
    if any(a.c <= 0 or a.d < 0 for a in cert.anchors):
        return False
    if s.subspace_contains(carrier, cert.limit):
        return False
    if not s.is_member(cert.limit):
        return False
    prev = None
    for k in range(cert.start, cert.start + cert.prefix):
        x_k = cert.member(k)
        z_k = cert.dominator(k)
        if not s.subspace_contains(carrier, x_k):
            return False
        if not s.is_member(z_k):
            return False
        diff = cert.limit - x_k
        if not (z_k - diff).is_nonneg() or not (z_k + diff).is_nonneg():
            return False
        if prev is not None and not (prev - z_k).is_nonneg():
            return False
        if not vanishes_on(z_k, _forbidden_region(cert, k, s.domain)):
            return False
        prev = z_k
    return True
