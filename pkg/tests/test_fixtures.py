import pytest

from wittlift.cases import (
    case_ids,
    verify_case,
    verify_coordinate_kernels,
    verify_diagonalizable_d2,
    verify_e15_overgroups,
    verify_f4_corner_modules,
)
from wittlift.errors import NotSubgroup, ShapeMismatch
from wittlift.fixtures import (
    R2,
    R4,
    fixture_group,
    fixture_names,
    klein_sigma_tau,
    materialize,
    perm_from_cycles,
    shape_group,
    shape_span_basis,
    uni,
)
from wittlift.linalg import Mat, mat_inv


def test_shape_dsl_materialize():
    mats = materialize(R2, "1,a;0,1")
    assert len(mats) == 2
    mats4 = materialize(R2, "a+b,a;a,b")
    assert len(mats4) == 4
    # stars become independent parameters
    assert len(materialize(R2, "1,*;*,1")) == 4
    with pytest.raises(ShapeMismatch):
        materialize(R2, "1,a;0")
    with pytest.raises(ShapeMismatch):
        materialize(R2, "1,ab;0,1")


def test_shape_span_basis():
    basis = shape_span_basis(R2, "a,b;0,a")
    assert len(basis) == 2
    assert basis[0] == Mat.identity(R2, 2)
    assert basis[1] == Mat.unit(R2, 2, 1, 2)


def test_shape_group_rejects_non_group():
    # invertible part {I, I+E12, I+E21} is not multiplicatively closed
    with pytest.raises(NotSubgroup):
        shape_group(R2, "1,a;b,1")


def test_perm_from_cycles():
    Pi = perm_from_cycles(R2, 5, "(45)")
    e4 = Mat(R2, 5, 1, [0, 0, 0, 1, 0])
    assert (Pi * e4).entries == (0, 0, 0, 0, 1)
    Pi2 = perm_from_cycles(R2, 5, "(243)")
    e2 = Mat(R2, 5, 1, [0, 1, 0, 0, 0])
    assert (Pi2 * e2).entries == (0, 0, 0, 1, 0)


def test_uni_and_klein_builders():
    g = uni(R2, 3, (1, 2), (2, 3))
    assert g == Mat.parse(R2, "1,1,0;0,1,1;0,0,1")
    sigma, tau = klein_sigma_tau(4)
    assert sigma * tau == tau * sigma
    assert (sigma * sigma).is_identity() and (tau * tau).is_identity()


def test_fixture_orders_small():
    assert fixture_group("U3_F2").order == 8
    assert fixture_group("U4_F2").order == 64
    assert fixture_group("U5_F2").order == 1024
    assert fixture_group("GL2_F2").order == 6
    assert fixture_group("GL3_F2").order == 168
    assert fixture_group("H_U3_F4").order == 64
    assert fixture_group("Z_center_H_F4").order == 4
    assert fixture_group("Z_klein_n4").order == 4
    assert fixture_group("Z_klein_n5").order == 4
    assert fixture_group("GA_J5_F2").order == 16
    assert fixture_group("K_J5_F2").order == 64
    with pytest.raises(KeyError):
        fixture_group("nope")
    assert "G_E15_F2" in fixture_names()


def test_fixture_orders_overgroups():
    assert fixture_group("G_E15_F2").order == 16 * 168 * 8
    assert fixture_group("K_u5_F2").order == 3 * 1024
    assert fixture_group("Kprime_u5_F2").order == 3 * 1024


def test_e15_overgroups():
    ev = verify_e15_overgroups()
    assert ev["K_u5_F2"] == ev["Kprime_u5_F2"] == 3072


def test_coordinate_kernels():
    ev = verify_coordinate_kernels()
    assert ev["V2"] == ev["V3"] == 512


def test_diagonalizable_d2():
    ev = verify_diagonalizable_d2()
    assert ev["order"] == 1008 and ev["sylow_order"] == 16


def test_f4_corner_modules():
    ev = verify_f4_corner_modules()
    assert ev["fixed_dim"] == 5 and ev["center_order"] == 4


@pytest.mark.parametrize("cid", case_ids())
def test_case(cid):
    ev = verify_case(cid)
    assert ev["order"] > 0
