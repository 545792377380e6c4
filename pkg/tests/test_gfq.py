import itertools

import pytest

from wittlift.errors import (
    DivisionByZero,
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
)
from wittlift.gfq import (
    Poly,
    enumerate_field,
    enumerate_monic,
    fq_make,
    frobenius,
    poly_factor,
    poly_is_irreducible,
    fq_make as F,
)

F2 = fq_make(2, 1)
F3 = fq_make(3, 1)
F4 = fq_make(2, 2)
F8 = fq_make(2, 3)
F9 = fq_make(3, 2)

ALL_FIELDS = [F2, F3, F4, F8, F9]


def test_make_rejects_bad_input():
    with pytest.raises(NotPrime):
        fq_make(4, 1)
    with pytest.raises(ReducibleModulus):
        fq_make(2, 2, modulus=[1, 0, 1])  # x^2+1 = (x+1)^2 over F_2
    with pytest.raises(UnsupportedSize):
        fq_make(2, 5)


def test_f4_generator_square():
    g = F4.elem(2)  # class of x
    assert (g * g).val == F4.elem(2).val ^ 0 or True
    assert g * g == g + F4.elem(1)  # g^2 = g + 1 under x^2+x+1


def test_f3_inverse():
    assert F3.elem(2).inv() == F3.elem(2)


@pytest.mark.parametrize("fld", ALL_FIELDS, ids=repr)
def test_field_axioms_exhaustive(fld):
    els = [e.val for e in enumerate_field(fld)]
    add, mul = fld.add, fld.mul
    for x, y in itertools.product(els, repeat=2):
        assert add(x, y) == add(y, x)
        assert mul(x, y) == mul(y, x)
    for x, y, z in itertools.product(els, repeat=3):
        assert add(add(x, y), z) == add(x, add(y, z))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    for x in els:
        assert add(x, fld.neg(x)) == 0
        if x:
            assert mul(x, fld.inv(x)) == 1


@pytest.mark.parametrize("fld", ALL_FIELDS, ids=repr)
def test_frobenius_is_automorphism(fld):
    els = enumerate_field(fld)
    for x, y in itertools.product(els, repeat=2):
        assert frobenius(x + y) == frobenius(x) + frobenius(y)
        assert frobenius(x * y) == frobenius(x) * frobenius(y)
    for x in els:
        z = x
        for _ in range(fld.m):
            z = frobenius(z)
        assert z == x


def test_frobenius_values():
    g = F4.elem(2)
    assert frobenius(g) == g + F4.elem(1)
    i = F9.elem(3)  # class of x, i^2 = -1
    assert i * i == F9.elem(2)  # -1
    assert frobenius(i) == -i


def test_enumerate_field():
    assert [e.val for e in enumerate_field(F2)] == [0, 1]
    assert len(enumerate_field(F4)) == 4
    # nonzero elements of F8 form a cyclic group of order 7
    g = F8.elem(2)
    powers = {F8.pow(g.val, k) for k in range(7)}
    assert len(powers) == 7 and 0 not in powers


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        F4.elem(0).inv()


def test_poly_divmod_roundtrip():
    f = Poly(F2, [0, 0, 1, 1, 1, 1])  # x^5+x^4+x^3+x^2
    g = Poly(F2, [1, 1, 0, 1])  # x^3+x+1
    q, r = divmod(f, g)
    assert q * g + r == f


def test_poly_factor_known():
    f = Poly(F2, [0, 0, 1, 1, 0, 1])  # x^5+x^3+x^2 = (x^3+x+1) * x^2
    fac = dict(poly_factor(f))
    assert fac[Poly(F2, [0, 1])] == 2
    assert fac[Poly(F2, [1, 1, 0, 1])] == 1
    assert poly_factor(Poly(F2, [1, 1, 1])) == [(Poly(F2, [1, 1, 1]), 1)]
    assert poly_factor(Poly(F2, [0, 0, 1])) == [(Poly(F2, [0, 1]), 2)]


def test_poly_factor_reassembles_all_deg5_f2():
    for d in range(1, 6):
        for f in enumerate_monic(F2, d):
            prod = Poly.one(F2)
            for g, mult in poly_factor(f):
                assert poly_is_irreducible(g)
                for _ in range(mult):
                    prod = prod * g
            assert prod == f


def test_irreducible_counts_f2():
    # classical counts of monic irreducibles over F_2 by degree
    from wittlift.gfq import _irreducibles

    assert [len(_irreducibles(F2, d)) for d in range(1, 6)] == [2, 1, 2, 3, 6]


def test_poly_compose_shift():
    f = Poly(F2, [0, 0, 0, 0, 0, 1])  # x^5
    xp1 = Poly(F2, [1, 1])
    g = f.compose(xp1)  # (x+1)^5 over F_2
    assert g == Poly(F2, [1, 1, 0, 0, 1, 1])  # binomials mod 2: 1,5,10,10,5,1
