"""Element algebra: exact evaluation, zero sets, lattice ops, regions."""

from fractions import Fraction

import pytest

from orderbands.funcspace.elements import (
    DOMAINS,
    Iv,
    PAQuadElem,
    Region,
    pa_max,
    pa_min,
    sqrt_fraction,
)
from orderbands.rational import rat


def pa(pairs, quad=0, domain="pm1", **kw):
    return PAQuadElem.make(domain, pairs, quad=quad, **kw)


Q = pa([(-1, 0), (1, 0)], quad=1, domain="r")              # t^2
G = pa([(-1, -1), ("-1/2", 0), (0, 0), (1, 1)])            # the kinked witness
H = pa([(-1, 0), ("-1/2", 1), (0, 0), (1, 0)], domain="pm1_2", value_at_2=0)
ONE_PM1 = PAQuadElem.constant("pm1", 1)


def test_eval_exact():
    assert G.eval("-3/4") == rat("-1/2")
    assert G.eval("-1/2") == 0
    assert G.eval("1/3") == rat("1/3")
    assert Q.eval(5) == 25
    assert H.eval(2) == 0 and H.eval("-1/2") == 1


def test_algebra():
    s = G + G
    assert s.eval("3/4") == rat("3/2")
    assert (G - G).is_zero
    assert G.scale(-2).eval(1) == -2
    t = PAQuadElem.constant("pm1", 3) + G
    assert t.eval(0) == 3


def test_collinear_breakpoints_dropped():
    f = pa([(-1, 0), (0, 1), (1, 2)])
    assert f.breakpoints == (rat(-1), rat(1))


def test_nonneg():
    assert Q.is_nonneg()
    perfect = pa([(-1, -2 * -1 + 1), (1, -2 * 1 + 1)], quad=1, domain="r")  # (t-1)^2
    assert perfect.is_nonneg()
    assert H.is_nonneg()
    assert not G.is_nonneg()


def test_nonneg_interior_vertex():
    # t^2 - 1/2 t + 1/100 dips negative inside [0, 1] though both ends are up
    f = pa([(0, rat("1/100")), (1, rat("-49/100"))], quad=1, domain="a01_2", value_at_2=0)
    assert f.eval(0) > 0 and f.eval(1) > 0
    assert not f.is_nonneg()


def test_zero_set_q():
    z = Q.zero_set()
    assert z.points == {rat(0)}
    assert not z.marker and not z.ivs


def test_zero_set_h():
    z = H.zero_set()
    assert z.contains(-1) and z.contains("1/2") and z.contains(2)
    assert not z.contains("-1/2") and not z.contains("-3/4")
    assert z.marker
    assert z.ivs == (Iv(rat(0), rat(1)),)
    assert z.points == {rat(-1)}


def test_zero_set_irrational_roots_excluded():
    f = pa([(-1, -2), (1, -2)], quad=1, domain="r")  # t^2 - 2
    z = f.zero_set()
    assert not z.points and not z.ivs and not z.marker


def test_zero_set_override_puncture():
    f = PAQuadElem.constant("pm1", 0).replace_overrides({rat("1/2"): rat(1)})
    z = f.zero_set()
    assert z.contains("1/4") and z.contains("3/4") and not z.contains("1/2")
    assert not z.covers(rat(-1), rat(1))
    g = PAQuadElem.constant("pm1", 1).replace_overrides({rat("1/2"): rat(0)})
    assert z.union(g.zero_set()).covers(rat(-1), rat(1))


def test_region_normalization():
    r = Region.make([( -1, 0), (0, 1)])
    assert r.ivs == (Iv(rat(-1), rat(1)),)
    r2 = Region.make([Iv(rat(-1), rat(0), True, False), Iv(rat(0), rat(1), False, True)])
    assert len(r2.ivs) == 2
    r3 = Region.make([Iv(rat(-1), rat(0), True, False)], points=[0])
    assert r3.ivs == (Iv(rat(-1), rat(0)),) and not r3.points


def test_region_covers_and_gaps():
    r = Region.make([(-1, "-1/2"), (0, 1)])
    gaps = r.complement_gaps(rat(-1), rat(1))
    assert ("gap", rat("-1/2"), rat(0)) in gaps
    assert not r.covers(rat(-1), rat(1))
    assert r.union(Region.make([("-1/2", 0)])).covers(rat(-1), rat(1))


def test_region_subset():
    a = Region.make([(0, "1/2")], points=[-1])
    b = Region.make([(-1, "3/4")])
    assert a.subset_of(b, rat(-1), rat(1))
    assert not b.subset_of(a, rat(-1), rat(1))


def test_pa_lattice_ops():
    f = pa([(-1, -1), (1, 1)])
    g = pa([(-1, 1), (1, -1)])
    mx = pa_max(f, g)
    assert mx.eval(0) == 0 and mx.eval(1) == 1 and mx.eval(-1) == 1
    assert mx.eval("1/2") == rat("1/2")
    mn = pa_min(f, g)
    assert (mx + mn - f - g).is_zero
    # lattice laws on a rational grid
    for t in [Fraction(k, 8) for k in range(-8, 9)]:
        assert mx.eval(t) == max(f.eval(t), g.eval(t))
        assert mn.eval(t) == min(f.eval(t), g.eval(t))


def test_sqrt_fraction():
    assert sqrt_fraction(rat("9/4")) == rat("3/2")
    assert sqrt_fraction(rat(2)) is None
    assert sqrt_fraction(rat(0)) == 0
