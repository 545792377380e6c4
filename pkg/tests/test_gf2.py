import itertools
import random

import numpy as np

from wittlift import gf2
from wittlift.gfq import fq_make
from wittlift.linalg import Mat, mat_inv, rank
from wittlift.rings import fq_ring

R2 = fq_ring(fq_make(2, 1))


def rand_mats(n, count, seed):
    rnd = random.Random(seed)
    return [Mat(R2, n, n, [rnd.randrange(2) for _ in range(n * n)]) for _ in range(count)]


def test_pack_unpack_roundtrip():
    for A in rand_mats(5, 50, 1):
        assert gf2.unpack(gf2.pack(A), R2, 5) == A
    assert gf2.identity_key(5) == Mat.identity(R2, 5).key()


def test_mul_key_matches_mat():
    for n in (2, 3, 5):
        for A, B in zip(rand_mats(n, 40, 2), rand_mats(n, 40, 3)):
            assert gf2.mul_key(A.key(), B.key(), n) == (A * B).key()


def test_inv_and_rank_key():
    for A in rand_mats(4, 100, 4):
        assert gf2.rank_key(A.key(), 4) == rank(A)
        if rank(A) == 4:
            assert gf2.inv_key(A.key(), 4) == mat_inv(A).key()


def test_transpose_key():
    for A in rand_mats(5, 30, 5):
        assert gf2.transpose_key(A.key(), 5) == A.transpose().key()


def test_batch_mul_right_left():
    mats = rand_mats(5, 200, 6)
    keys = np.array([m.key() for m in mats], dtype=np.uint32)
    g = rand_mats(5, 1, 7)[0]
    right = gf2.batch_mul_right(keys, g.key(), 5)
    left = gf2.batch_mul_left(keys, g.key(), 5)
    for i, m in enumerate(mats):
        assert int(right[i]) == (m * g).key()
        assert int(left[i]) == (g * m).key()


def test_batch_mul_elementwise():
    a = rand_mats(5, 100, 8)
    b = rand_mats(5, 100, 9)
    ak = np.array([m.key() for m in a], dtype=np.uint32)
    bk = np.array([m.key() for m in b], dtype=np.uint32)
    out = gf2.batch_mul(ak, bk, 5)
    for i in range(100):
        assert int(out[i]) == (a[i] * b[i]).key()


def test_batch_rank():
    mats = rand_mats(5, 500, 10)
    keys = np.array([m.key() for m in mats], dtype=np.uint32)
    rk = gf2.batch_rank(keys, 5)
    for i, m in enumerate(mats):
        assert int(rk[i]) == rank(m)


def test_batch_closure_small():
    # closure of a transvection pair in GL_2(F_2) = S_3, order 6
    a = (Mat.identity(R2, 2) + Mat.unit(R2, 2, 1, 2)).key()
    b = (Mat.identity(R2, 2) + Mat.unit(R2, 2, 2, 1)).key()
    keys = gf2.batch_closure([a, b], 2, 10**4)
    assert keys.size == 6

    # brute-force oracle for GL_3(F_2): all invertible 3x3 = 168
    mats = [
        Mat(R2, 3, 3, bits)
        for bits in itertools.product((0, 1), repeat=9)
    ]
    inv = {m.key() for m in mats if rank(m) == 3}
    from wittlift.grp import gl_generators

    gens = [g.key() for g in gl_generators(R2, 3)]
    keys = gf2.batch_closure(gens, 3, 10**4)
    assert set(int(k) for k in keys) == inv
