import itertools
import random
from fractions import Fraction

import pytest

from wittlift.cohom import (
    BicyclicGroupSpec,
    BicyclicTriple,
    CocycleTable,
    bicyclic_split,
    cup_carry_cocycle,
    generic_split,
    glift_cocycle,
    glift_triple,
    validate_triple,
)
from wittlift.errors import (
    NotACocycle,
    NotCommuting,
    NotFixed,
    NotTriangular,
    WrongOrders,
)
from wittlift.gfq import enumerate_field, fq_make
from wittlift.grp import Character, GModule, centralizer_of_matrix, closure
from wittlift.linalg import Mat, jordan_block, mat_inv, perm_matrix
from wittlift.rings import fq_ring

F2 = fq_make(2, 1)
F4 = fq_make(2, 2)
F9 = fq_make(3, 2)
R2 = fq_ring(F2)
R4 = fq_ring(F4)
R9 = fq_ring(F9)


def I(n, ring=R2):
    return Mat.identity(ring, n)


def E(n, i, j, ring=R2):
    return Mat.unit(ring, n, i, j)


def corner_pair(ring, n, x, y):
    """rho = I + x E_{1n}, mu = I + y E_{1n}."""
    rho = I(n, ring) + E(n, 1, n, ring).scale(x)
    mu = I(n, ring) + E(n, 1, n, ring).scale(y)
    return BicyclicGroupSpec(rho, mu)


def klein_sigma_tau(n):
    """Commuting order-2 pair with 2x2 blocks S = I, T = [[0,1],[1,1]] in the corner."""
    sigma = I(n)
    tau = I(n)
    S = [[1, 0], [0, 1]]
    T = [[0, 1], [1, 1]]
    for i in range(2):
        for j in range(2):
            if S[i][j]:
                sigma = sigma + E(n, i + 1, j + 3)
            if T[i][j]:
                tau = tau + E(n, i + 1, j + 3)
    return sigma, tau


def test_spec_validation():
    with pytest.raises(NotCommuting):
        BicyclicGroupSpec(I(2) + E(2, 1, 2), Mat.parse(R2, "0,1;1,0") * (I(2) + E(2, 1, 2)))
    with pytest.raises(WrongOrders):
        BicyclicGroupSpec(I(2) + E(2, 1, 2), I(2), s=4)
    spec = BicyclicGroupSpec(I(2) + E(2, 1, 2), I(2))
    assert spec.s == 2 and spec.t == 1


def test_glift_triple_trivial():
    spec = BicyclicGroupSpec(I(3), I(3))
    tr = glift_triple(spec)
    assert tr.a.is_zero() and tr.b.is_zero() and tr.c.is_zero()
    res = bicyclic_split(spec, tr)
    assert res.splits and res.witness[0].is_zero() and res.witness[1].is_zero()


def test_glift_triple_f4_corner():
    x, y = 2, 3  # g and g+1 in F_4
    spec = corner_pair(R4, 2, x, y)
    assert spec.s == 2 and spec.t == 2
    tr = glift_triple(spec)
    xx = F4.mul(x, x)
    yy = F4.mul(y, y)
    assert tr.a == E(2, 1, 2, R4).scale(xx)
    assert tr.b == E(2, 1, 2, R4).scale(yy)
    assert tr.c.is_zero()


def test_f4_corner_nonsplit_all_pairs():
    units = [int(v.val) for v in enumerate_field(F4) if v.val != 0]
    for n in (2, 3):
        for x, y in itertools.permutations(units, 2):
            spec = corner_pair(R4, n, x, y)
            tr = glift_triple(spec)
            res = bicyclic_split(spec, tr)
            assert res.cocycle_valid and not res.splits


def test_f4_corner_generic_crosscheck():
    units = [int(v.val) for v in enumerate_field(F4) if v.val != 0]
    for x, y in itertools.permutations(units, 2):
        spec = corner_pair(R4, 2, x, y)
        Z = closure([spec.rho, spec.mu])
        res = generic_split(glift_cocycle(Z))
        assert not res.splits


def test_klein_n4_n5_nonsplit():
    for n in (4, 5):
        sigma, tau = klein_sigma_tau(n)
        spec = BicyclicGroupSpec(sigma, tau, s=2, t=2)
        tr = glift_triple(spec)
        # a = s, b = t with the displayed corner blocks, c = 0
        s_mat = E(n, 1, 3) + E(n, 2, 4)
        t_mat = E(n, 1, 4) + E(n, 2, 3) + E(n, 2, 4)
        assert tr.a == s_mat
        assert tr.b == t_mat
        assert tr.c.is_zero()
        res = bicyclic_split(spec, tr)
        assert not res.splits


def test_klein_n4_generic_agrees():
    sigma, tau = klein_sigma_tau(4)
    Z = closure([sigma, tau])
    assert Z.order == 4
    res = generic_split(glift_cocycle(Z))
    assert not res.splits


def test_tx_xt_oracle_via_triple():
    # the 2x2 reduction: TX + XT = I has no solution, matching non-splitness
    T = Mat.parse(R2, "0,1;1,1")
    ok = False
    for bits in itertools.product((0, 1), repeat=4):
        X = Mat(R2, 2, 2, bits)
        if T * X + X * T == I(2):
            ok = True
    assert not ok


def test_f9_independent_corner_nonsplit():
    # x = 1 and y = i span F_9 over F_3; orders are p = 3
    x, y = 1, 3
    spec = corner_pair(R9, 2, x, y)
    assert spec.s == 3 and spec.t == 3
    tr = glift_triple(spec)
    res = bicyclic_split(spec, tr)
    assert res.cocycle_valid and not res.splits


def test_f9_dependent_corner_splits():
    # y = 2x is F_3-dependent on x: the restriction to this pair splits
    spec = corner_pair(R9, 2, 1, 2)
    tr = glift_triple(spec)
    res = bicyclic_split(spec, tr)
    assert res.splits


def test_lift_independence():
    rnd = random.Random(7)
    sigma, tau = klein_sigma_tau(4)
    spec = BicyclicGroupSpec(sigma, tau)
    mod = spec.module_for("glift")
    base = glift_triple(spec)
    for _ in range(100):
        u = Mat(R2, 4, 4, [rnd.randrange(2) for _ in range(16)])
        v = Mat(R2, 4, 4, [rnd.randrange(2) for _ in range(16)])
        from wittlift.cohom import _norm_along

        da = _norm_along(mod, spec.rho, spec.s, u)
        db = _norm_along(mod, spec.mu, spec.t, v)
        dc = (mod.act(spec.rho, v) - v) + (mod.act(spec.mu, u) - u)
        shifted = BicyclicTriple(base.a + da, base.b + db, base.c + dc)
        validate_triple(spec, shifted)
        diff = BicyclicTriple(da, db, dc)
        assert bicyclic_split(spec, diff).splits


def test_blift_variant():
    spec = BicyclicGroupSpec(I(3) + E(3, 1, 2), I(3) + E(3, 1, 3))
    tb = glift_triple(spec, "blift")
    tg = glift_triple(spec, "glift")
    assert (tb.a, tb.b, tb.c) == (tg.a, tg.b, tg.c)
    rb = bicyclic_split(spec, tb, "blift")
    rg = bicyclic_split(spec, tg, "glift")
    assert rb.splits and rg.splits
    # a blift witness is also a glift witness
    u, v = rb.witness
    mod = spec.module_for("glift")
    from wittlift.cohom import _norm_along

    assert _norm_along(mod, spec.rho, spec.s, u) == tg.a
    with pytest.raises(NotTriangular):
        glift_triple(BicyclicGroupSpec(perm_matrix(R2, 2, [2, 1]), I(2)), "blift")


def test_validate_triple_rejects_garbage():
    sigma, tau = klein_sigma_tau(4)
    spec = BicyclicGroupSpec(sigma, tau)
    bad = BicyclicTriple(E(4, 2, 1), Mat.zeros(R2, 4), Mat.zeros(R2, 4))
    with pytest.raises(NotACocycle):
        validate_triple(spec, bad)


def test_glift_cocycle_order2():
    G = closure([I(2) + E(2, 1, 2)])
    table = glift_cocycle(G)
    g = (I(2) + E(2, 1, 2)).key()
    ident = I(2).key()
    # tau(g)^2 = I + iota(E_12) since (1,0)+(1,0) = (0,1) in W_2(F_2)
    assert table(g, g) == E(2, 1, 2)
    assert table(ident, g).is_zero() and table(g, ident).is_zero()
    res = generic_split(table)
    assert res.splits


def test_generic_split_u3_bicyclic_pairs():
    U3 = closure([I(3) + E(3, 1, 2), I(3) + E(3, 2, 3)])
    elems = list(U3.elements())
    pairs = 0
    for rho in elems:
        for mu in elems:
            if rho * mu != mu * rho:
                continue
            spec = BicyclicGroupSpec(rho, mu)
            if closure([rho, mu]).order != spec.s * spec.t:
                continue  # not an internal direct product of the two cyclics
            tr = glift_triple(spec)
            rb = bicyclic_split(spec, tr)
            rg = generic_split(glift_cocycle(closure([rho, mu])))
            assert rb.splits == rg.splits
            pairs += 1
    assert pairs > 10


def test_generic_split_u2_f4():
    gens = [I(2, R4) + E(2, 1, 2, R4), I(2, R4) + E(2, 1, 2, R4).scale(2)]
    U2 = closure(gens)
    assert U2.order == 4
    spec = BicyclicGroupSpec(gens[0], gens[1])
    rb = bicyclic_split(spec, glift_triple(spec))
    rg = generic_split(glift_cocycle(U2))
    assert rb.splits == rg.splits


def test_cocycle_table_validation_rejects_corruption():
    G = closure([I(2) + E(2, 1, 2)])
    table = glift_cocycle(G)
    g = (I(2) + E(2, 1, 2)).key()
    bad = dict(table.table)
    bad[(I(2).key(), g)] = E(2, 1, 1)
    with pytest.raises(NotACocycle):
        CocycleTable(G, table.module, bad)


def test_cup_carry_z2():
    sigma = I(2) + E(2, 1, 2)
    H = closure([sigma])
    u = Character.from_generator_values(H, [(sigma, Fraction(1, 2))])
    a = E(2, 1, 2)  # fixed by H
    table = cup_carry_cocycle(u, a)
    assert table(sigma.key(), sigma.key()) == a
    assert table(I(2).key(), sigma.key()).is_zero()


def test_cup_carry_eighth_wraps():
    N = jordan_block(R2, 0, 5)
    g = I(5) + N
    H = closure([g])
    assert H.order == 8
    v = Character.from_generator_values(H, [(g, Fraction(1, 8))])
    a = E(5, 1, 5)
    table = cup_carry_cocycle(v, a)
    for i in range(8):
        for j in range(8):
            expect = a if i + j >= 8 else a.scale(0)
            assert table((g**i).key(), (g**j).key()) == expect


def test_cup_carry_requires_fixed():
    sigma = I(2) + E(2, 1, 2)
    H = closure([sigma])
    u = Character.from_generator_values(H, [(sigma, Fraction(1, 2))])
    with pytest.raises(NotFixed):
        cup_carry_cocycle(u, E(2, 2, 1))


def test_glift_cocycle_matches_triple_mod_boundaries():
    # the generic table's restriction data and the bicyclic triple differ by a
    # boundary: subtracting one triple from the other splits
    sigma, tau = klein_sigma_tau(4)
    spec = BicyclicGroupSpec(sigma, tau)
    tr = glift_triple(spec)
    Z = closure([sigma, tau])
    table = glift_cocycle(Z)
    # triple extracted from the table through the extension it encodes: use
    # tau-section products directly (same construction as glift_triple)
    res_t = bicyclic_split(spec, tr)
    res_g = generic_split(table)
    assert res_t.splits == res_g.splits
