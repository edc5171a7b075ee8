"""The seven workbench fixtures, with expected verdict tables and stored
certificates.

Each fixture records the named elements and subspaces of its example space
together with the verdict table the suite must reproduce exactly.  The
constrained continuous-function space is realized as its piecewise-affine
analogue, which keeps every mechanized claim intact while making membership
decidable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from orderbands.funcspace.certificates import OConvCertificate, ShrinkAnchor
from orderbands.funcspace.elements import PAQuadElem, Region, pa_max
from orderbands.funcspace.spaces import (
    AtomSub,
    FullSub,
    FuncSpace,
    RegionSub,
    SpanH,
    SpanSub,
    ZeroSub,
    atom_pair,
    constant_base,
    h_elem,
    make_space,
)
from orderbands.rational import ONE, ZERO, rat

EXAMPLE_NAMES = ("namioka1", "namioka2", "namioka3", "ex_quad", "ex1_atom",
                 "band_h", "example3")


@dataclass(frozen=True)
class Example:
    name: str
    space: FuncSpace
    elements: dict
    ideals: dict
    expected: dict
    certificates: tuple = ()
    expectations: dict = field(default_factory=dict)
    notes: tuple = ()


def g_elem() -> PAQuadElem:
    return PAQuadElem.make("pm1", [(-1, -1), ("-1/2", 0), (0, 0), (1, 1)])


def g_n(n: int) -> PAQuadElem:
    if n < 2:
        raise ValueError("defined for n >= 2")
    a = rat(-1) + Fraction(1, n + 2)
    b = rat(1) - Fraction(1, n + 1)
    return PAQuadElem.make(
        "pm1",
        [(-1, 0), (a, 2 * a + 1), ("-1/2", 0), (0, 0), (b, b), (1, 0)],
    )


def u_n(n: int) -> PAQuadElem:
    """Repaired dominator: |g - g_n| on the edge intervals, a tent at 0."""
    if n < 2:
        raise ValueError("defined for n >= 2")
    a = rat(-1) + Fraction(1, n + 2)
    b = rat(1) - Fraction(1, n + 1)
    return PAQuadElem.make(
        "pm1",
        [(-1, 1), (a, 0), (Fraction(-1, n), 0), (0, 1), (Fraction(1, n), 0),
         (b, 0), (1, 1)],
    )


def namioka_certificate() -> OConvCertificate:
    return OConvCertificate(
        name="namioka-gn",
        member=g_n,
        dominator=u_n,
        limit=g_elem(),
        anchors=(ShrinkAnchor(rat(-1), ONE, rat(2)),
                 ShrinkAnchor(rat(0), ONE, ZERO),
                 ShrinkAnchor(rat(1), ONE, ONE)),
    )


I_REGION = Region.make([("-1/2", 0)], points=[-1, 1])
B_REGION = Region.make([("-1/2", 0)])


def _namioka_space() -> tuple[FuncSpace, dict, dict]:
    s = make_space("namioka_pa", "namioka")
    elements = {"g": g_elem(), "one": constant_base(s, 1)}
    ideals = {"I": RegionSub(I_REGION), "Id": RegionSub(Region.make([(-1, "-1/2"), (0, 1)])),
              "B": RegionSub(B_REGION)}
    return s, elements, ideals


def ex1_f_a(f: PAQuadElem, a: Fraction, b: Fraction) -> PAQuadElem:
    """Order-density majorant pinning f at a and at 2 (three printed cases)."""
    if a == b:
        raise ValueError("a and b must differ")
    norm = sup_norm(f)
    fa, f2 = f.eval(a), f.value_at_2
    s = make_space("ex1_atom")
    if fa < f2:
        out = (constant_base(s, norm)
               + atom_pair(s, a).scale(fa - norm)
               + atom_pair(s, b).scale(f2 - fa))
    elif fa == f2:
        out = constant_base(s, norm) + atom_pair(s, a).scale(fa - norm)
    else:
        out = (constant_base(s, 2 * norm)
               + atom_pair(s, a).scale(fa - 2 * norm)
               + atom_pair(s, b).scale(f2 - fa))
    return out


def sup_norm(f: PAQuadElem) -> Fraction:
    vals = [abs(v) for v in f.values]
    vals += [abs(v) for _, v in f.overrides]
    for lo, hi, q, m, c in f.piece_functions():
        if q != 0:
            vtx = -m / (2 * q)
            if lo < vtx < hi:
                vals.append(abs(q * vtx * vtx + m * vtx + c))
    return max(vals)


# ------------------------------------------------------------ Z-subspace

@dataclass(frozen=True)
class ZElem:
    """c * 1_{[-1,0)} + lam * h, restricted to [-1, 0)."""

    c: Fraction
    lam: Fraction

    def eval(self, t) -> Fraction:
        t = rat(t)
        if not (rat(-1) <= t < rat(0)):
            raise ValueError("Z lives on [-1, 0)")
        hval = 2 * t + 2 if t <= rat("-1/2") else -2 * t
        return self.c + self.lam * hval

    def leq(self, other: "ZElem") -> bool:
        d_end = other.c - self.c
        d_mid = (other.c + other.lam) - (self.c + self.lam)
        return d_end >= 0 and d_mid >= 0


def z_sup(g1: ZElem, g2: ZElem) -> ZElem:
    """The printed closed-form supremum in the Z-subspace."""
    c = max(g1.c, g2.c)
    lam = max(g1.c + g1.lam, g2.c + g2.lam) - c
    return ZElem(c, lam)


def case1_certificate(r: Fraction) -> OConvCertificate:
    """f_n increasing to the unit, for the singleton zero-set ideal at r."""
    one = constant_base(make_space("example3_paq"), 1)

    def f_n(n: int) -> PAQuadElem:
        pts = [(rat(-1), ONE)]
        for t, val in ((r - Fraction(1, n), ONE), (r - Fraction(1, n + 1), ZERO),
                       (r + Fraction(1, n + 1), ZERO), (r + Fraction(1, n), ONE)):
            if rat(-1) < t < rat(1):
                pts.append((t, val))
        pts.append((rat(1), ONE))
        return PAQuadElem.make("pm1", pts)

    def z_n(n: int) -> PAQuadElem:
        return one - f_n(n)

    return OConvCertificate(
        name=f"case1-at-{r}",
        member=f_n,
        dominator=z_n,
        limit=one,
        anchors=(ShrinkAnchor(r, ONE, ZERO),),
    )


def case2_certificate(r1: Fraction, r2: Fraction) -> OConvCertificate:
    one = constant_base(make_space("example3_paq"), 1)

    def f_n(n: int) -> PAQuadElem:
        pts = {rat(-1): ONE, rat(1): ONE}
        for r in (r1, r2):
            for t, val in ((r - Fraction(1, n), ONE), (r - Fraction(1, n + 1), ZERO),
                           (r + Fraction(1, n + 1), ZERO), (r + Fraction(1, n), ONE)):
                if rat(-1) < t < rat(1):
                    pts[t] = val
        return PAQuadElem.make("pm1", sorted(pts.items()))

    return OConvCertificate(
        name=f"case2-at-{r1}-{r2}",
        member=f_n,
        dominator=lambda n: one - f_n(n),
        limit=one,
        anchors=(ShrinkAnchor(r1, ONE, ZERO), ShrinkAnchor(r2, ONE, ZERO)),
        start=8,  # neighbourhoods of the two roots must be disjoint
    )


def zero_set_case(space: FuncSpace, zero_region: Region) -> str:
    """The case split of the quadratic-extension example, by zero set."""
    pts = zero_region.points
    if not zero_region.ivs and len(pts) == 1:
        return "case1-singleton"
    if not zero_region.ivs and 1 < len(pts) < float("inf"):
        return "case2-finite"
    if zero_region.ivs:
        return "case3-infinite-proper"
    return "case4-unrepresented"


# ------------------------------------------------------------ constructors

def make_example(name: str) -> Example:
    if name not in EXAMPLE_NAMES:
        raise ValueError(f"unknown example {name!r}; choose from {EXAMPLE_NAMES}")
    return _BUILDERS[name]()


def _namioka1() -> Example:
    s, elements, subs = _namioka_space()
    from orderbands.ideals import IdealDescriptor, RESTRICTED

    I = IdealDescriptor(s, subs["I"], "I", RESTRICTED, directed=True, solid=True)
    B = IdealDescriptor(s, subs["B"], "B", RESTRICTED, solid=True)
    return Example(
        name="namioka1", space=s, elements=elements,
        ideals={"I": I, "B": B},
        expected={
            "I": {"directed": True, "solid": True, "band": False,
                  "s_closed": True, "idd_directed": False},
        },
        expectations={"I": "not applicable"},
        notes=("midpoint-constrained piecewise-affine analogue",),
    )


def _namioka2() -> Example:
    base = _namioka1()
    return Example(
        name="namioka2", space=base.space, elements=base.elements,
        ideals=base.ideals,
        expected={**base.expected,
                  "I": {**base.expected["I"], "o_closed": False}},
        certificates=(namioka_certificate(),),
    )


def _namioka3() -> Example:
    base = _namioka1()
    return Example(
        name="namioka3", space=base.space, elements=base.elements,
        ideals=base.ideals,
        expected={
            "B": {"band": True, "s_closed": True, "directed": False,
                  "positive_parts_equal_I": True},
        },
        certificates=(namioka_certificate(),),
    )


def _ex_quad() -> Example:
    s = make_space("ex_quad", "quadratics")
    from orderbands.ideals import IdealDescriptor, PAPER

    q = PAQuadElem.make("r", [(-1, 0), (1, 0)], quad=1)
    one = PAQuadElem.make("r", [(-1, 1), (1, 1)])
    I = IdealDescriptor(s, SpanSub((q,)), "I", PAPER, directed=True, solid=True)
    return Example(
        name="ex_quad", space=s,
        elements={"q": q, "one": one},
        ideals={"I": I},
        expected={
            "I": {"directed": True, "solid": True, "solvex": True,
                  "o_closed": True, "s_closed": True, "band": False,
                  "idd_is_X": True, "idd_directed": True},
        },
    )


def _ex1_atom() -> Example:
    s = make_space("ex1_atom", "atomic")
    from orderbands.ideals import IdealDescriptor, PAPER

    I = IdealDescriptor(s, AtomSub(Region.make([(0, 1)])), "I", PAPER,
                        directed=True, solid=True)
    return Example(
        name="ex1_atom", space=s,
        elements={"one_A": constant_base(s, 1),
                  "atom_half": atom_pair(s, rat("1/2"))},
        ideals={"I": I},
        expected={
            "I": {"directed": True, "solid": True, "s_closed": False,
                  "band": False, "d_is_zero": True},
        },
        expectations={"I": "o-closed (net divergence argument, not mechanized)"},
    )


def _band_h() -> Example:
    s = make_space("band_h", "band-h")
    from orderbands.ideals import IdealDescriptor, PAPER

    B = IdealDescriptor(s, AtomSub(Region.make([(0, 1)])), "B", PAPER,
                        directed=True, solid=True)
    sw = constant_base(s, 1) - h_elem()
    return Example(
        name="band_h", space=s,
        elements={"h": h_elem(), "s": sw, "one_A": constant_base(s, 1)},
        ideals={"B": B},
        expected={
            "B": {"directed": True, "solid": True, "band": True,
                  "s_closed": False, "d_is_span_h": True},
        },
    )


def _example3() -> Example:
    s = make_space("example3_paq", "pa-plus-quad")
    from orderbands.ideals import IdealDescriptor, USER

    r = rat("1/3")
    case1 = IdealDescriptor(s, RegionSub(Region.make([], points=[r])), "I1", USER,
                            solid=True)
    case2 = IdealDescriptor(
        s, RegionSub(Region.make([], points=[rat("-1/2"), r])), "I2", USER, solid=True)
    case3 = IdealDescriptor(
        s, RegionSub(Region.make([("-1/4", "1/4")])), "I3", USER, solid=True)
    q = PAQuadElem.make("pm1", [(-1, 0), (1, 0)], quad=1)
    return Example(
        name="example3", space=s,
        elements={"q": q},
        ideals={"I1": case1, "I2": case2, "I3": case3},
        expected={
            "I1": {"o_closed": False, "band": False, "case": "case1-singleton"},
            "I2": {"o_closed": False, "band": False, "case": "case2-finite"},
            "I3": {"band": True, "case": "case3-infinite-proper"},
            "space": {"pervasive": True, "rdp": False},
        },
        certificates=(case1_certificate(r),
                      case2_certificate(rat("-1/2"), r)),
    )


_BUILDERS = {
    "namioka1": _namioka1,
    "namioka2": _namioka2,
    "namioka3": _namioka3,
    "ex_quad": _ex_quad,
    "ex1_atom": _ex1_atom,
    "band_h": _band_h,
    "example3": _example3,
}


# ------------------------------------------------------------ verdict runs

def positive_parts_equal(a: RegionSub, b: RegionSub, s: FuncSpace) -> bool:
    """Equality of positive parts for two zero-region carriers.

    With nested regions the larger region only adds constraints; on the
    midpoint-constrained family those extra constraints cost nothing at
    positive elements exactly when they sit at the endpoints and the zero
    interval already pins the midpoint (z(0) = 0 and z >= 0 force
    z(-1) = z(1) = 0)."""
    ra, rb = a.region, b.region
    one = rat(1)
    if ra.subset_of(rb, -one, one):
        lesser, greater = ra, rb
    elif rb.subset_of(ra, -one, one):
        lesser, greater = rb, ra
    else:
        return False
    if lesser == greater:
        return True
    if not greater.interval_part().subset_of(lesser.interval_part(), -one, one):
        return False
    extra = {p for p in greater.points if not lesser.contains(p)}
    return (s.midpoint_constraint
            and lesser.interval_part().contains(0)
            and extra <= {-one, one})


def example_verdicts(ex: Example) -> dict:
    """Computed flag table for a fixture, in the shape of `ex.expected`."""
    from orderbands.disjoint import band_generated, disjoint_complement, is_band
    from orderbands.funcspace.spaces import (
        is_directed,
        is_solid,
        pervasive_func,
        rdp_verdict,
    )
    from orderbands.funcspace import sups as fsups

    s = ex.space
    out: dict = {}
    for name, I in ex.ideals.items():
        row: dict = {}
        row["directed"] = _tv(is_directed(I.carrier, s))
        row["solid"] = _tv(is_solid(I.carrier, s))
        band_res = is_band(I.carrier, s)
        row["band"] = _tv(band_res)
        row["s_closed"] = _tv(fsups.is_s_closed(I, s))
        row["o_closed"] = _tv(fsups.is_o_closed(
            I.carrier, s, certificates=ex.certificates,
            expectation=ex.expectations.get(name)))
        d = disjoint_complement(I.carrier, s)
        dd = disjoint_complement(d, s)
        row["idd_directed"] = _tv(is_directed(dd.carrier, s))
        row["d_is_zero"] = d.carrier == ZeroSub()
        row["d_is_span_h"] = d.carrier == SpanH()
        row["idd_is_X"] = dd.carrier == FullSub()
        if row["directed"] and row["solid"]:
            row["solvex"] = True
        if isinstance(I.carrier, RegionSub):
            row["case"] = zero_set_case(s, I.carrier.region)
            if "B" in ex.ideals and name == "B" and "I" in ex.ideals:
                row["positive_parts_equal_I"] = positive_parts_equal(
                    ex.ideals["I"].carrier, I.carrier, s)
        out[name] = row
    out["space"] = {
        "pervasive": _tv(pervasive_func(s)),
        "rdp": _tv(rdp_verdict(s)),
    }
    return out


def _tv(res) -> Optional[bool]:
    return {"yes": True, "no": False, "unknown": None}[res.verdict]


def check_expected(ex: Example, computed: Optional[dict] = None) -> list[str]:
    """Mismatches between the computed verdicts and the stored table."""
    computed = computed or example_verdicts(ex)
    bad = []
    for key, table in ex.expected.items():
        for flag, want in table.items():
            got = computed.get(key, {}).get(flag, "<missing>")
            if got != want:
                bad.append(f"{ex.name}.{key}.{flag}: expected {want}, got {got}")
    return bad
