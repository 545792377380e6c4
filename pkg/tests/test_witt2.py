import itertools

import pytest

from wittlift.errors import NonUnit, NotPrimeField
from wittlift.gfq import FqElem, enumerate_field, fq_make
from wittlift.witt2 import (
    W2Elem,
    enumerate_w2,
    iota,
    pi,
    teichmuller,
    w2_add,
    w2_inv,
    w2_mul,
    w2_neg,
    w2_one,
    w2_to_zp2,
    w2_zero,
    zp2_to_w2,
)

F2 = fq_make(2, 1)
F3 = fq_make(3, 1)
F4 = fq_make(2, 2)


@pytest.mark.parametrize("fld", [F2, F3, F4], ids=repr)
def test_ring_axioms_exhaustive(fld):
    els = enumerate_w2(fld)
    zero, one = w2_zero(fld), w2_one(fld)
    for u in els:
        assert w2_add(u, zero) == u
        assert w2_mul(u, one) == u
        assert w2_add(u, w2_neg(u)) == zero
    for u, v in itertools.product(els, repeat=2):
        assert w2_add(u, v) == w2_add(v, u)
        assert w2_mul(u, v) == w2_mul(v, u)
    for u, v, w in itertools.product(els, repeat=3):
        assert w2_add(w2_add(u, v), w) == w2_add(u, w2_add(v, w))
        assert w2_mul(w2_mul(u, v), w) == w2_mul(u, w2_mul(v, w))
        assert w2_mul(u, w2_add(v, w)) == w2_add(w2_mul(u, v), w2_mul(u, w))


def test_doubling_f2():
    # (u,0)+(u,0) = (0,u^2)
    for uv in range(F4.q):
        u = W2Elem(F4, uv, 0)
        assert w2_add(u, u) == W2Elem(F4, 0, F4.mul(uv, uv))


def test_tripling_f3():
    # 3*(z,0) = (0,z^3)
    for zv in range(F3.q):
        z = W2Elem(F3, zv, 0)
        assert w2_add(w2_add(z, z), z) == W2Elem(F3, 0, F3.pow(zv, 3))


@pytest.mark.parametrize("fld", [F2, F3, F4], ids=repr)
def test_p_times_teichmuller(fld):
    for x in enumerate_field(fld):
        acc = w2_zero(fld)
        for _ in range(fld.p):
            acc = w2_add(acc, teichmuller(x))
        assert acc == iota(x**fld.p)


def test_teichmuller_multiplicative():
    for x, y in itertools.product(enumerate_field(F4), repeat=2):
        assert w2_mul(teichmuller(x), teichmuller(y)) == teichmuller(x * y)
        assert pi(teichmuller(x)) == x


def test_iota_additive_and_square_zero():
    for b1, b2 in itertools.product(enumerate_field(F4), repeat=2):
        assert w2_add(iota(b1), iota(b2)) == iota(b1 + b2)
        assert w2_mul(iota(b1), iota(b2)) == w2_zero(F4)


def test_iota_module_structure():
    # iota(b) * (a,c) = (0, a^p * b)
    for b in enumerate_field(F4):
        for u in enumerate_w2(F4):
            prod = w2_mul(iota(b), u)
            assert prod == W2Elem(F4, 0, F4.mul(F4.frob(u.a), b.val))


def test_exactness():
    for fld in (F2, F3, F4):
        kernel = {u for u in enumerate_w2(fld) if pi(u).val == 0}
        image = {iota(b) for b in enumerate_field(fld)}
        assert kernel == image


def test_pi_ring_hom():
    for u, v in itertools.product(enumerate_w2(F4), repeat=2):
        assert pi(w2_add(u, v)) == pi(u) + pi(v)
        assert pi(w2_mul(u, v)) == pi(u) * pi(v)


def test_inverse():
    for u in enumerate_w2(F4):
        if u.a == 0:
            with pytest.raises(NonUnit):
                w2_inv(u)
        else:
            assert w2_mul(u, w2_inv(u)) == w2_one(F4)
    # (1,b)^-1 = (1,-b)
    for bv in range(F4.q):
        assert w2_inv(W2Elem(F4, 1, bv)) == W2Elem(F4, 1, F4.neg(bv))


@pytest.mark.parametrize("fld", [F2, F3], ids=repr)
def test_zp2_bridge_is_ring_iso(fld):
    p = fld.p
    n = p * p
    for r, s in itertools.product(range(n), repeat=2):
        assert zp2_to_w2(fld, (r + s) % n) == w2_add(zp2_to_w2(fld, r), zp2_to_w2(fld, s))
        assert zp2_to_w2(fld, (r * s) % n) == w2_mul(zp2_to_w2(fld, r), zp2_to_w2(fld, s))
        assert w2_to_zp2(zp2_to_w2(fld, r)) == r


def test_zp2_bridge_p2_values():
    assert zp2_to_w2(F2, 0) == W2Elem(F2, 0, 0)
    assert zp2_to_w2(F2, 1) == W2Elem(F2, 1, 0)
    assert zp2_to_w2(F2, 2) == W2Elem(F2, 0, 1)
    assert zp2_to_w2(F2, 3) == W2Elem(F2, 1, 1)


def test_zp2_bridge_needs_prime_field():
    with pytest.raises(NotPrimeField):
        zp2_to_w2(F4, 1)
