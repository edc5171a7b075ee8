"""Ideal machinery on the polyhedral backend: spec examples and regressions."""

import pytest

from orderbands.disjoint import band_generated
from orderbands.ideals import (
    IdealDescriptor,
    RESTRICTED,
    USER,
    coordinate_ideal,
    directed_section_check,
    dominates,
    is_directed,
    is_s_closed,
    is_solid,
    is_solvex,
    lz_band_condition,
    section,
    section_sup_equals,
    sup_over_set,
    theorem_suite,
)
from orderbands.linalg import SubspaceBasis
from orderbands.polyspace import build_space
from orderbands.rational import vec, zero_vec

QUADRANT = build_space(rays=[[1, 0], [0, 1]], name="quadrant")
K4 = build_space(rays=[[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]], name="K4")
R1 = vec([1, 0, 1])
R2 = vec([0, 1, 1])
R3 = vec([-1, 0, 1])


def ideal_from(vectors, s, name="I", **flags):
    return IdealDescriptor(s, SubspaceBasis.from_vectors(vectors, s.n), name, USER, **flags)


def test_dominates_examples():
    assert dominates(vec([2, 0]), vec([1, 0]), QUADRANT)
    assert not dominates(vec([1, 0]), vec([0, 1]), QUADRANT)
    assert dominates(R1, vec(["1/2", 0, "1/2"]), K4)


def test_dominates_reflexive_transitive():
    pts = [vec([1, 0]), vec([1, 1]), vec([2, 2]), vec([0, 1])]
    for x in pts:
        assert dominates(x, x, QUADRANT)
    for x in pts:
        for y in pts:
            for z in pts:
                if dominates(x, y, QUADRANT) and dominates(y, z, QUADRANT):
                    assert dominates(x, z, QUADRANT)


def test_is_solid_x_axis():
    I = ideal_from([[1, 0]], QUADRANT, "x-axis")
    assert is_solid(I, QUADRANT).is_yes


def test_is_solid_diagonal_refuted():
    I = ideal_from([[1, 1]], QUADRANT, "diag")
    res = is_solid(I, QUADRANT)
    assert res.is_no
    y, x = res.witness["y"], res.witness["x"]
    assert I.carrier.contains(y) and not I.carrier.contains(x)
    assert dominates(y, x, QUADRANT)


def test_is_directed_examples():
    assert is_directed(ideal_from([R1], K4), K4).is_yes
    assert is_directed(ideal_from([[1, 0], [0, 1]], QUADRANT), QUADRANT).is_yes
    # the x1-axis inside the halfplane cone x2 >= 0 is not directed:
    # it meets the cone only in 0
    halfplane_like = build_space(rays=[[1, 1], [-1, 1]], name="wedge")
    res = is_directed(ideal_from([[1, 0]], halfplane_like), halfplane_like)
    assert res.is_no


def test_is_directed_routes_agree():
    from orderbands.ideals import is_directed_lp

    wedge = build_space(rays=[[1, 1], [-1, 1]], name="wedge")
    cases = [
        (QUADRANT, [[1, 0]]), (QUADRANT, [[1, 1]]), (QUADRANT, [[1, 0], [0, 1]]),
        (K4, [[1, 0, 1]]), (K4, [[1, 0, 1], [0, 1, 1]]), (K4, [[0, 0, 1]]),
        (wedge, [[1, 0]]), (wedge, [[0, 1]]),
    ]
    for s, basis in cases:
        W = SubspaceBasis.from_vectors(basis, s.n)
        assert is_directed(W, s).verdict == is_directed_lp(W, s).verdict


def test_solvex_rules():
    diag = ideal_from([[1, 1]], QUADRANT, "diag")
    res = is_solvex(diag, QUADRANT)
    assert res.is_no
    axis = coordinate_ideal(QUADRANT, frozenset({0}), "x-axis")
    axis = axis.with_flags(directed=True)
    assert is_solvex(axis, QUADRANT).is_yes
    zero = ideal_from([], QUADRANT, "0")
    assert is_solvex(zero.with_flags(solid=True, directed=True), QUADRANT).is_yes


def test_section_quadrant_segment():
    # sorted dual rays put the functional (1,0) at index 1
    I = coordinate_ideal(QUADRANT, frozenset({1}), "x-axis")
    assert I.carrier.contains(vec([1, 0]))
    sec = section(I, zero_vec(2), vec([1, 1]), QUADRANT)
    assert sec.nonempty
    res = sup_over_set(sec, QUADRANT)
    assert res.kind == "exists" and res.element == vec([1, 0])


def test_section_k4_ray_segment():
    I = ideal_from([R1], K4, "span r1")
    z = vec([1, 1, 2])  # r1 + r2
    sec = section(I, zero_vec(3), z, K4)
    assert sec.nonempty
    res = sup_over_set(sec, K4)
    assert res.kind == "exists" and res.element == R1


def test_sup_transfer_not_in_X():
    # in the quadrant every bounded section has a sup; fabricate not_in_X via
    # the diagonal ideal: sup of diag cap [0,(1,2)] is (1,1) and lies in X
    I = ideal_from([[1, 1]], QUADRANT, "diag")
    sec = section(I, zero_vec(2), vec([1, 2]), QUADRANT)
    res = sup_over_set(sec, QUADRANT)
    assert res.kind == "exists" and res.element == vec([1, 1])


def test_section_sup_equals_criterion():
    I = ideal_from([R1], K4, "span r1")
    assert section_sup_equals(I, R1, K4)
    assert not section_sup_equals(I, vec([0, 0, 1]), K4)


def test_is_s_closed_band_in_k4():
    I = ideal_from([R1], K4, "span r1", directed=True)
    res = is_s_closed(I, K4)
    # K4 is not pervasive: the witness search finds nothing for the band
    assert res.verdict in ("unknown", "yes")


def test_is_s_closed_pervasive_routes():
    axis = coordinate_ideal(QUADRANT, frozenset({0}), "x-axis").with_flags(directed=True)
    assert is_s_closed(axis, QUADRANT).is_yes
    full = coordinate_ideal(QUADRANT, frozenset({0, 1}), "X").with_flags(directed=True)
    assert is_s_closed(full, QUADRANT).is_yes


def test_directed_section_check_lattice():
    I = coordinate_ideal(QUADRANT, frozenset({0, 1}), "X").with_flags(directed=True)
    assert directed_section_check(I, vec([1, 1]), QUADRANT).is_yes


def test_directed_section_check_trivial_top():
    # with I = X the top of the interval bounds every pair: always directed
    I = IdealDescriptor(K4, SubspaceBasis.full(3), "X", RESTRICTED, directed=True)
    assert directed_section_check(I, vec([0, 0, 2]), K4).is_yes


def test_directed_section_check_k4_regression():
    # frozen witness from a brute-force hunt over the K4 generators: the
    # coordinate ideal killing the functional (1,1,1) has a non-directed
    # section below (0,0,2); the violating pair is (r3, r4)
    I = coordinate_ideal(K4, frozenset({0, 1, 2}), "ker f3")
    res = directed_section_check(I, vec([0, 0, 2]), K4)
    assert res.is_no
    v1, v2 = res.witness["pair"]
    assert {v1, v2} == {vec([-1, 0, 1]), vec([0, -1, 1])}
    assert K4.in_cone(v1) and K4.in_cone(v2)


def test_lz_band_condition_full_space():
    I = coordinate_ideal(QUADRANT, frozenset({0, 1}), "X").with_flags(directed=True)
    fam = section(I, zero_vec(2), vec([2, 3]), QUADRANT)
    rep = lz_band_condition(I, [fam], QUADRANT)
    assert rep["rows"][0]["in_ideal"] and rep["consistent"]


def test_theorem_suite_simplicial():
    ideals = [
        coordinate_ideal(QUADRANT, frozenset(), "0"),
        coordinate_ideal(QUADRANT, frozenset({0}), "x-axis"),
        coordinate_ideal(QUADRANT, frozenset({0, 1}), "X"),
    ]
    rep = theorem_suite(QUADRANT, ideals)
    assert not rep["violations"]
    for row in rep["rows"]:
        assert row["band"] and row["o_closed"] and row["s_closed"]


def test_theorem_suite_k4():
    ideals = [
        IdealDescriptor(K4, SubspaceBasis.from_vectors([R1], 3), "span r1", USER),
        coordinate_ideal(K4, frozenset({2, 3}), "coord band"),
    ]
    rep = theorem_suite(K4, ideals)
    assert not rep["violations"]
