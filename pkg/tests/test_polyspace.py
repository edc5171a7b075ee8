"""Space construction and the structural predicates from the cover embedding."""

import pytest

from orderbands.linalg import SubspaceBasis
from orderbands.polyspace import (
    NotGenerating,
    NotPointed,
    PreconditionViolated,
    build_space,
    image_subspace,
    is_fordable,
    is_lattice_rdp,
    is_order_dense,
    is_pervasive,
    order_leq,
    pervasive_certificates,
    rdp_witness_check,
)
from orderbands.rational import unit_vec, vec

QUADRANT = build_space(rays=[[1, 0], [0, 1]], name="quadrant")
K4 = build_space(rays=[[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]], name="K4")


def test_quadrant_self_dual():
    assert QUADRANT.m == 2
    assert sorted(QUADRANT.dual_rays) == [vec([0, 1]), vec([1, 0])]


def test_k4_dual_rays():
    assert K4.m == 4
    assert sorted(K4.dual_rays) == sorted(
        vec(r) for r in [[-1, -1, 1], [1, -1, 1], [1, 1, 1], [-1, 1, 1]]
    )


def test_not_pointed():
    with pytest.raises(NotPointed):
        build_space(rays=[[1, 0], [-1, 0], [0, 1], [0, -1]])


def test_not_generating():
    with pytest.raises(NotGenerating):
        build_space(rays=[[1, 0], [2, 0]])


def test_build_from_inequalities():
    s = build_space(inequalities=[[1, 0], [0, 1], [1, 1]])  # redundant row
    assert s.m == 2
    assert sorted(s.dual_rays) == [vec([0, 1]), vec([1, 0])]


def test_order_leq():
    assert order_leq(vec([0, 0]), vec([1, 1]), QUADRANT)
    assert order_leq(vec([0, 0, 0]), vec([1, 0, 1]), K4)
    # i((1,0,0)) has a negative coordinate, so (1,0,0) is not positive
    assert not order_leq(vec([0, 0, 0]), vec([1, 0, 0]), K4)
    x = vec([2, -3, 1])
    assert order_leq(x, x, K4)


def test_bipositivity():
    for x in [vec([1, 0, 1]), vec([1, 1, 1]), vec([-1, 2, 0]), vec([0, 0, 1])]:
        assert order_leq(vec([0, 0, 0]), x, K4) == all(c >= 0 for c in K4.embed(x))


def test_order_dense_image():
    assert is_order_dense(image_subspace(K4), K4.m).is_yes
    assert is_order_dense(image_subspace(QUADRANT), 2).is_yes


def test_order_dense_diagonal_no():
    diag = SubspaceBasis.from_vectors([vec([1, 1])], 2)
    assert is_order_dense(diag, 2).is_no


def test_order_dense_identity():
    assert is_order_dense(SubspaceBasis.full(3), 3).is_yes


def test_lattice_rdp():
    assert is_lattice_rdp(QUADRANT).is_yes
    assert is_lattice_rdp(K4).is_no
    s = build_space(rays=[[1, 0], [1, 1]])
    assert is_lattice_rdp(s).is_yes


def test_rdp_witness_quadrant():
    res = rdp_witness_check(QUADRANT, vec([1, 0]), vec([0, 1]), vec([1, 1]))
    assert res.is_yes
    z1, z2 = res.witness["z1"], res.witness["z2"]
    assert tuple(a + b for a, b in zip(z1, z2)) == vec([1, 1])
    assert QUADRANT.in_cone(z1) and QUADRANT.in_cone(z2)
    assert order_leq(z1, vec([1, 0]), QUADRANT) and order_leq(z2, vec([0, 1]), QUADRANT)


def test_rdp_witness_k4_regression():
    # frozen regression: the K4 triple decomposes (verdict recorded from the
    # exact LP; the witness re-verifies below either way)
    x1, x2, z = vec([1, 0, 1]), vec([-1, 0, 1]), vec([0, 1, 1])
    res = rdp_witness_check(K4, x1, x2, z)
    if res.is_yes:
        z1, z2 = res.witness["z1"], res.witness["z2"]
        assert tuple(a + b for a, b in zip(z1, z2)) == z
        assert K4.in_cone(z1) and K4.in_cone(z2)
        assert order_leq(z1, x1, K4) and order_leq(z2, x2, K4)
    else:
        y = res.witness["farkas"]
        assert all(c >= 0 for c in y)
    assert res.verdict == "no"


def test_rdp_precondition():
    with pytest.raises(PreconditionViolated):
        rdp_witness_check(QUADRANT, vec([1, 0]), vec([0, 1]), vec([3, 3]))


def test_pervasive():
    assert is_pervasive(QUADRANT).is_yes
    res = is_pervasive(K4)
    assert res.is_no
    assert res.witness["coordinate"] == 0
    assert is_pervasive(build_space(rays=[[1, 0], [1, 1]])).is_yes


def test_fordable_matches_pervasive():
    for s in (QUADRANT, K4):
        assert is_fordable(s).verdict == is_pervasive(s).verdict


def test_pervasive_certificates_quadrant():
    rep = pervasive_certificates(QUADRANT, [vec([1, 2])])
    row = rep["samples"][0]
    assert row["iii"] and row["iv"] and row["ii"] and not row["empty_section"]
    assert rep["agreement"]


def test_pervasive_certificates_k4_empty_section():
    rep = pervasive_certificates(K4, [unit_vec(4, 0)])
    row = rep["samples"][0]
    assert row["empty_section"] and not row["iii"]


def test_tightened_rhs_canonicalizes_upper_sets():
    # {u : i(u) >= p} for p = i((1,1)) in the quadrant tightens to p itself
    p = QUADRANT.embed(vec([1, 1]))
    assert QUADRANT.tightened_rhs(p) == p
