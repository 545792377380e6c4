import random
from fractions import Fraction

import pytest

from wittlift.errors import NotHomomorphism, NotPGroup, NotSubgroup
from wittlift.gfq import fq_make
from wittlift.grp import (
    Character,
    GModule,
    centralizer_of_matrix,
    character_extends,
    closure,
    coset_reps,
    derived_and_abelianization,
    derived_subgroup,
    element_order,
    fixed_points,
    general_linear_group,
    is_perfect_f2,
    is_sylow2,
    norm_map,
    subgroup_from_elements,
    trivial_subgroup,
    unitriangularize,
)
from wittlift.linalg import (
    Mat,
    block_diag,
    jordan_block,
    mat_inv,
    perm_matrix,
)
from wittlift.rings import fq_ring

F2 = fq_make(2, 1)
F4 = fq_make(2, 2)
R2 = fq_ring(F2)
R4 = fq_ring(F4)


def I(n, ring=R2):
    return Mat.identity(ring, n)


def E(n, i, j, ring=R2):
    return Mat.unit(ring, n, i, j)


def unitriangular_group(ring, n):
    scalars = [1] if ring.field.q == 2 else [1, ring.field.p]  # 1 and a generator
    gens = [
        I(n, ring) + E(n, i, i + 1, ring).scale(c)
        for i in range(1, n)
        for c in scalars
    ]
    return closure(gens)


def test_closure_order4_element():
    g = I(3) + E(3, 1, 2) + E(3, 2, 3)
    G = closure([g])
    assert G.order == 4
    assert element_order(g) == 4


def test_closure_klein_sigma_tau_n4():
    # n=4 blocks: sigma = [[I,S],[0,I]], tau = [[I,T],[0,I]] with S=I, T=[[0,1],[1,1]]
    sigma = Mat.from_rows(
        R2,
        [
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
    )
    tau = Mat.from_rows(
        R2,
        [
            [1, 0, 0, 1],
            [0, 1, 1, 1],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ],
    )
    assert sigma * tau == tau * sigma
    G = closure([sigma, tau])
    assert G.order == 4
    assert element_order(sigma) == 2 and element_order(tau) == 2


def test_closure_generic_path_matches_f2_path():
    # same group computed over F_4 ambient encodings vs the F_2 fast path
    gens2 = [I(3) + E(3, 1, 2), I(3) + E(3, 2, 3)]
    G2 = closure(gens2)  # numpy path
    gens4 = [I(3, R4) + E(3, 1, 2, R4), I(3, R4) + E(3, 2, 3, R4)]
    G4 = closure(gens4)  # generic dict path
    assert G2.order == G4.order == 8


def test_unitriangular_orders():
    assert unitriangular_group(R2, 3).order == 8
    assert unitriangular_group(R2, 4).order == 64
    assert unitriangular_group(R2, 5).order == 1024
    assert unitriangular_group(R4, 3).order == 64


def test_gl_small_orders():
    assert general_linear_group(R2, 2).order == 6
    assert general_linear_group(R2, 3).order == 168
    assert general_linear_group(R2, 4).order == 20160
    assert general_linear_group(R4, 2).order == 180


def test_centralizer_j5():
    G = centralizer_of_matrix(jordan_block(R2, 0, 5))
    assert G.order == 16
    _, ab = derived_and_abelianization(G)
    assert ab.divisors == [2, 8]


def test_centralizer_diag():
    A = block_diag(R2, [Mat.zeros(R2, 3), I(2)])
    G = centralizer_of_matrix(A)
    assert G.order == 168 * 6


def test_centralizer_identity_is_gl():
    G = centralizer_of_matrix(I(3))
    assert G.order == 168


def test_subgroup_from_elements_rejects_non_group():
    mats = [I(2), I(2) + E(2, 1, 2), Mat.parse(R2, "0,1;1,0")]
    with pytest.raises(NotSubgroup):
        subgroup_from_elements(R2, 2, mats)


def test_derived_u3():
    U3 = unitriangular_group(R2, 3)
    D = derived_subgroup(U3)
    assert D.order == 2
    assert D.contains(I(3) + E(3, 1, 3))


def test_abelianization_u5():
    U5 = unitriangular_group(R2, 5)
    D, ab = derived_and_abelianization(U5)
    assert ab.divisors == [2, 2, 2, 2]
    assert D.order * ab.quotient_order == U5.order
    # projection is a homomorphism with kernel D
    proj = ab.projection
    ks = list(U5.keys())
    rnd = random.Random(0)
    for _ in range(300):
        a = U5.decode(ks[rnd.randrange(len(ks))])
        b = U5.decode(ks[rnd.randrange(len(ks))])
        pa, pb = proj[a.key()], proj[b.key()]
        pab = proj[(a * b).key()]
        assert pab == tuple((x + y) % d for x, y, d in zip(pa, pb, ab.divisors))
    assert all((proj[k] == (0, 0, 0, 0)) == D.contains_key(k) for k in ks)


def test_perfect_gl3():
    G3 = general_linear_group(R2, 3)
    assert is_perfect_f2(G3)
    D, ab = derived_and_abelianization(G3)
    assert ab.divisors == [] and D.order == G3.order
    # U3 is not perfect
    assert not is_perfect_f2(unitriangular_group(R2, 3))


def test_norm_map_values():
    mod = GModule(R2, 5)
    A = jordan_block(R2, 0, 5)
    mu = I(5) + E(5, 1, 4)
    nu = I(5) + E(5, 1, 3)
    triv = trivial_subgroup(R2, 5)
    n_mu = norm_map(mod, triv, closure([mu]), A)
    assert n_mu == E(5, 1, 5)
    assert norm_map(mod, triv, closure([nu]), E(5, 1, 5)).is_zero()
    # index 1
    G = closure([mu])
    assert norm_map(mod, G, G, E(5, 1, 5)) == E(5, 1, 5)


def test_norm_map_requires_fixed():
    mod = GModule(R2, 5)
    sig = closure([I(5) + E(5, 1, 4)])
    with pytest.raises(Exception):
        norm_map(mod, sig, sig, jordan_block(R2, 0, 5))  # A not fixed by sigma


def test_norm_transitivity():
    mod = GModule(R2, 5)
    sigma = I(5) + E(5, 1, 5)
    tau = I(5) + E(5, 2, 5)
    triv = trivial_subgroup(R2, 5)
    S = closure([sigma])
    K = closure([sigma, tau])
    m = E(5, 5, 1)
    # m is fixed by nobody but the identity; N_{K/1} = N_{K/S} . N_{S/1}
    lhs = norm_map(mod, triv, K, m)
    inner = norm_map(mod, triv, S, m)
    rhs = norm_map(mod, S, K, inner)
    assert lhs == rhs


def test_fixed_points_u5():
    U5 = unitriangular_group(R2, 5)
    full = GModule(R2, 5)
    assert len(fixed_points(full, trivial_subgroup(R2, 5))) == 25
    # the fixed space is spanned by the identity (scalars) and E_15
    basis = fixed_points(full, U5)
    assert {m.key() for m in basis} == {I(5).key(), E(5, 1, 5).key()}
    # E_15 is the unique nonzero trace-zero fixed point
    nonscalar = [m for m in basis if m.trace() == 0]
    assert nonscalar == [E(5, 1, 5)]


def test_is_sylow2():
    GL2 = general_linear_group(R2, 2)  # order 6
    U2 = closure([I(2) + E(2, 1, 2)])  # order 2: a 2-Sylow of GL2
    odd = closure([Mat.parse(R2, "0,1;1,1")])  # order 3
    assert is_sylow2(GL2, U2)
    assert not is_sylow2(GL2, trivial_subgroup(R2, 2))
    assert is_sylow2(odd, trivial_subgroup(R2, 2))
    assert is_sylow2(GL2, GL2) is False  # |GL2| is not a 2-power
    U3 = unitriangular_group(R2, 3)
    assert is_sylow2(general_linear_group(R2, 3), U3)


def test_character_coordinate_and_extension():
    U3 = unitriangular_group(R2, 3)
    u12 = Character.coordinate(U3, 1, 2)
    assert u12(I(3) + E(3, 1, 2)) == Fraction(1, 2)
    assert character_extends(u12, U3)
    # entry (1,3) is not a homomorphism on U3
    with pytest.raises(NotHomomorphism):
        Character.coordinate(U3, 1, 3)
    # faithful character on <I+E13> does not extend: the generator is a commutator
    Z = closure([I(3) + E(3, 1, 3)])
    uz = Character.from_generator_values(Z, [(I(3) + E(3, 1, 3), Fraction(1, 2))])
    assert not character_extends(uz, U3)
    # but the trivial character does
    triv_char = Character.from_function(Z, lambda g: Fraction(0))
    assert character_extends(triv_char, U3)


def test_character_generator_values():
    G = centralizer_of_matrix(jordan_block(R2, 0, 5))
    N = jordan_block(R2, 0, 5)
    g1 = I(5) + N  # order 8
    g2 = I(5) + N**3  # order 2, independent
    u = Character.from_generator_values(G, [(g1, Fraction(0)), (g2, Fraction(1, 2))])
    v = Character.from_generator_values(G, [(g1, Fraction(1, 8)), (g2, Fraction(1, 2))])
    assert u(g1) == 0 and u(g2) == Fraction(1, 2)
    assert v(g1) == Fraction(1, 8) and v(g2) == Fraction(1, 2)
    with pytest.raises(NotHomomorphism):
        Character.from_generator_values(G, [(g1, Fraction(1, 3)), (g2, Fraction(1, 2))])


def test_unitriangularize():
    P = closure([perm_matrix(R2, 2, [2, 1])])
    g = unitriangularize(P)
    gi = mat_inv(g)
    for x in P.elements():
        assert (g * x * gi).is_upper_triangular(unipotent=True)
    U5 = unitriangular_group(R2, 5)
    g5 = unitriangularize(U5)
    gi5 = mat_inv(g5)
    for x in U5.generators:
        assert (g5 * x * gi5).is_upper_triangular(unipotent=True)
    with pytest.raises(NotPGroup):
        unitriangularize(closure([Mat.parse(R2, "0,1;1,1")]))  # order 3


def test_coset_reps():
    U5 = unitriangular_group(R2, 5)
    u23 = Character.coordinate(U5, 2, 3)
    V2 = subgroup_from_elements(
        R2, 5, [g for g in U5.elements() if u23(g) == 0]
    )
    assert V2.order == 512
    reps = coset_reps(U5, V2)
    assert len(reps) == 2
    with pytest.raises(NotSubgroup):
        coset_reps(V2, U5)
