"""The machine-check catalog: every finite computation behind the main results.

Each check is a :class:`CheckSpec` with a stable id and a human-readable
anchor describing the fact it certifies.  :func:`run_checks` executes a
glob-filtered subset deterministically and returns structured
:class:`CheckReport` records; expensive whole-group enumerations are gated
behind the heavy flag and reported as skipped otherwise.
"""

from __future__ import annotations

import fnmatch
import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import gf2
from .audit import class_coverage_audit, signature_of
from .cases import case_ids, verify_case
from .cases import (
    verify_coordinate_kernels,
    verify_diagonalizable_d2,
    verify_e15_overgroups,
    verify_f4_corner_modules,
)
from .cohom import BicyclicGroupSpec, bicyclic_split, generic_split, glift_cocycle, glift_triple
from .errors import CheckFailure, RelationFailure, UnknownCheckId, WittliftError
from .fixtures import (
    R2,
    SHAPE_GA_J5,
    SHAPE_K_J5,
    fixture_group,
    jordan_sum,
    klein_sigma_tau,
    shape_group,
    uni,
)
from .gfq import enumerate_field, fq_make
from .grp import (
    Character,
    GModule,
    centralizer_of_matrix,
    character_extends,
    closure,
    derived_and_abelianization,
    derived_subgroup,
    fixed_points,
    gl_generators,
    is_sylow2,
    norm_map,
    trivial_subgroup,
)
from .linalg import (
    Mat,
    canonical_form,
    is_conjugate,
    jordan_block,
    mat_inv,
    solve_affine,
)
from .rings import fq_ring, int_ring, zmod_ring
from .witt2 import (
    W2Elem,
    enumerate_w2,
    iota,
    teichmuller,
    w2_add,
    w2_mul,
    w2_zero,
)

F2 = fq_make(2, 1)
F3 = fq_make(3, 1)
F4 = fq_make(2, 2)
F8 = fq_make(2, 3)
F9 = fq_make(3, 2)
R4 = fq_ring(F4)
R8 = fq_ring(F8)
R9 = fq_ring(F9)


@dataclass(frozen=True)
class CheckSpec:
    id: str
    anchor: str
    fn: Callable[[bool], dict]
    heavy: bool = False


@dataclass
class CheckReport:
    id: str
    anchor: str
    status: str  # pass | fail | skipped
    evidence: dict
    ms: float

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "evidence": self.evidence,
            "ms": round(self.ms, 1),
        }


def _req(cond: bool, msg: str) -> None:
    if not cond:
        raise CheckFailure(msg)


# ---------------------------------------------------------------------------
# Witt ring laws


def _witt_laws(field) -> dict:
    elems = enumerate_w2(field)
    zero = w2_zero(field)
    one = W2Elem(field, 1, 0)
    for u in elems:
        _req(w2_add(u, zero) == u, "additive identity fails")
        _req(w2_mul(u, one) == u, "multiplicative identity fails")
        for v in elems:
            _req(w2_add(u, v) == w2_add(v, u), "addition not commutative")
            _req(w2_mul(u, v) == w2_mul(v, u), "multiplication not commutative")
            for w in elems:
                _req(
                    w2_add(w2_add(u, v), w) == w2_add(u, w2_add(v, w)),
                    "addition not associative",
                )
                _req(
                    w2_mul(w2_mul(u, v), w) == w2_mul(u, w2_mul(v, w)),
                    "multiplication not associative",
                )
                _req(
                    w2_mul(u, w2_add(v, w)) == w2_add(w2_mul(u, v), w2_mul(u, w)),
                    "distributivity fails",
                )
    return {"field": repr(field), "elements": len(elems), "triples": len(elems) ** 3}


def _witt_frobenius(_heavy: bool) -> dict:
    checked = 0
    for field in (F2, F3, F4):
        p = field.p
        for x in enumerate_field(field):
            t = teichmuller(x)
            s = w2_zero(field)
            for _ in range(p):
                s = w2_add(s, t)
            _req(s == iota(x**p), "p * teichmuller(x) != iota(x^p)")
            checked += 1
    # the two displayed instances: (u,0)+(u,0) = (0,u^2) and 3(z,0) = (0,z^3)
    u = F4.elem(2)
    _req(w2_add(teichmuller(u), teichmuller(u)) == W2Elem(F4, 0, (u * u).val), "F4 doubling")
    z = F3.elem(2)
    tz = teichmuller(z)
    _req(
        w2_add(w2_add(tz, tz), tz) == W2Elem(F3, 0, (z**3).val),
        "F3 tripling",
    )
    return {"fields": ["F_2", "F_3", "F_4"], "identities": checked + 2}


# ---------------------------------------------------------------------------
# splitting checks (positive cases and the p = 3 obstruction)


def _teichmuller_section(_heavy: bool) -> dict:
    count = 0
    for field in (F4, F9):
        units = [x for x in enumerate_field(field) if x.val != 0]
        for x in units:
            for y in units:
                _req(
                    w2_mul(teichmuller(x), teichmuller(y)) == teichmuller(x * y),
                    "Teichmuller section not multiplicative",
                )
                count += 1
    return {"pairs": count}


def _int_closure(gens: Sequence[Mat], bound: int = 64) -> List[Mat]:
    seen = {g.key_tuple() if hasattr(g, "key_tuple") else tuple(g.entries): g for g in gens}
    ident = Mat.identity(gens[0].ring, gens[0].rows)
    seen[tuple(ident.entries)] = ident
    frontier = list(seen.values())
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                k = tuple(c.entries)
                if k not in seen:
                    seen[k] = c
                    new.append(c)
        if len(seen) > bound:
            raise CheckFailure("integer closure exceeds bound (not finite?)")
        frontier = new
    return list(seen.values())


def _lift_split_n2_f2(_heavy: bool) -> dict:
    Z4 = zmod_ring(4)
    lift = Mat.parse(Z4, "3,1;0,1")
    _req((lift * lift).is_identity(), "lift does not square to identity")
    red = Mat(R2, 2, 2, [e % 2 for e in lift.entries])
    _req(red == uni(R2, 2, (1, 2)), "lift does not reduce to the transvection")
    return {"order": 2, "modulus": 4}


def _lift_split_f3(_heavy: bool) -> dict:
    Z9 = zmod_ring(9)
    lift = Mat.parse(Z9, "1,1;6,7")
    _req((lift * lift * lift).is_identity(), "lift does not cube to identity")
    R3 = fq_ring(F3)
    red = Mat(R3, 2, 2, [e % 3 for e in lift.entries])
    _req(red == uni(R3, 2, (1, 2)), "lift does not reduce to the transvection")
    return {"order": 3, "modulus": 9, "witness": lift.text()}


_N3_LIFT_1 = "-1,-1,0;0,1,0;0,0,-1"
_N3_LIFT_2 = "-1,0,0;2,1,-1;0,0,-1"


def _n3_relations(s1: Mat, s2: Mat) -> None:
    tau = s1.commutator(s2)
    ident = Mat.identity(s1.ring, 3)
    for name, m in (
        ("sigma1^2", s1 * s1),
        ("sigma2^2", s2 * s2),
        ("tau^2", tau * tau),
        ("[sigma1,tau]", s1.commutator(tau)),
        ("[sigma2,tau]", s2.commutator(tau)),
    ):
        if m != ident:
            raise RelationFailure(f"{name} != 1")


def _lift_split_n3_f2(_heavy: bool) -> dict:
    Z4 = zmod_ring(4)
    s1 = Mat(Z4, 3, 3, [int(e) % 4 for e in Mat.parse(int_ring(), _N3_LIFT_1).entries])
    s2 = Mat(Z4, 3, 3, [int(e) % 4 for e in Mat.parse(int_ring(), _N3_LIFT_2).entries])
    _n3_relations(s1, s2)
    grp = _int_closure([s1, s2])
    _req(len(grp) == 8, f"closure order {len(grp)} != 8")
    reduced = {tuple(e % 2 for e in m.entries) for m in grp}
    u3 = fixture_group("U3_F2")
    _req(len(reduced) == 8, "reduction not injective on the closure")
    _req(
        reduced == {tuple(m.entries) for m in u3.elements()},
        "closure does not biject onto the unitriangulars",
    )
    return {"order": 8, "relations": 5}


def _lift_split_integral(_heavy: bool) -> dict:
    Z = int_ring()
    # n = 2, p = 2
    a = Mat.parse(Z, "-1,1;0,1")
    _req((a * a).is_identity(), "integer lift does not square to identity")
    # n = 2, p = 3
    b = Mat.parse(Z, "1,1;-3,-2")
    _req((b * b * b).is_identity(), "integer lift does not cube to identity")
    # n = 3, p = 2
    s1 = Mat.parse(Z, _N3_LIFT_1)
    s2 = Mat.parse(Z, _N3_LIFT_2)
    _n3_relations(s1, s2)
    grp = _int_closure([s1, s2])
    _req(len(grp) == 8, f"integer closure order {len(grp)} != 8")
    return {"orders": [2, 3, 8]}


def _lift_nonsplit_f9(_heavy: bool) -> dict:
    # x = 1 and y = i are F_3-independent; the corner pair does not split
    rho = Mat.identity(R9, 2) + Mat.unit(R9, 2, 1, 2)
    mu = Mat.identity(R9, 2) + Mat.unit(R9, 2, 1, 2).scale(3)
    spec = BicyclicGroupSpec(rho, mu)
    _req(spec.s == 3 and spec.t == 3, "generators do not have order 3")
    res = bicyclic_split(spec, glift_triple(spec))
    _req(res.cocycle_valid and not res.splits, "independent pair unexpectedly splits")
    # dependent pair y = 2x: the restriction splits
    mu2 = Mat.identity(R9, 2) + Mat.unit(R9, 2, 1, 2).scale(2)
    spec2 = BicyclicGroupSpec(rho, mu2)
    res2 = bicyclic_split(spec2, glift_triple(spec2))
    _req(res2.splits, "F_3-dependent pair should split")
    return {"independent_splits": False, "dependent_splits": True}


# ---------------------------------------------------------------------------
# corner-pair and Klein obstructions


def _restrict_k_bigger(_heavy: bool) -> dict:
    pairs = 0
    for ring, field in ((R4, F4), (R8, F8)):
        units = [x.val for x in enumerate_field(field) if x.val != 0]
        for n in (2, 3):
            for x, y in itertools.permutations(units, 2):
                rho = Mat.identity(ring, n) + Mat.unit(ring, n, 1, n).scale(x)
                mu = Mat.identity(ring, n) + Mat.unit(ring, n, 1, n).scale(y)
                spec = BicyclicGroupSpec(rho, mu)
                res = bicyclic_split(spec, glift_triple(spec))
                _req(res.cocycle_valid and not res.splits, "corner pair splits")
                pairs += 1
    # generic-solver cross-check on the F_4, n = 2 family
    units4 = [x.val for x in enumerate_field(F4) if x.val != 0]
    for x, y in itertools.permutations(units4, 2):
        rho = Mat.identity(R4, 2) + Mat.unit(R4, 2, 1, 2).scale(x)
        mu = Mat.identity(R4, 2) + Mat.unit(R4, 2, 1, 2).scale(y)
        Z = closure([rho, mu])
        _req(not generic_split(glift_cocycle(Z)).splits, "generic solver disagrees")
    return {"nonsplit_pairs": pairs, "generic_crosschecks": 6}


def _restrict_klein(_heavy: bool) -> dict:
    for n in (4, 5):
        sigma, tau = klein_sigma_tau(n)
        spec = BicyclicGroupSpec(sigma, tau, s=2, t=2)
        res = bicyclic_split(spec, glift_triple(spec))
        _req(res.cocycle_valid and not res.splits, f"Klein pair splits at n={n}")
    # the 2x2 reduction TX + XT = I has no solution (exhaustive)
    T = Mat.parse(R2, "0,1;1,1")
    ident = Mat.identity(R2, 2)
    for bits in itertools.product((0, 1), repeat=4):
        X = Mat(R2, 2, 2, bits)
        _req(T * X + X * T != ident, "TX + XT = I has a solution")
    return {"sizes": [4, 5], "reduction_cases": 16}


def _corner_reduction(_heavy: bool) -> dict:
    # corner projection after corner inclusion is the identity on 2x2 blocks
    def incl(X: Mat, n: int) -> Mat:
        entries = [[0] * n for _ in range(n)]
        entries[0][0] = X[0, 0]
        entries[0][n - 1] = X[0, 1]
        entries[n - 1][0] = X[1, 0]
        entries[n - 1][n - 1] = X[1, 1]
        return Mat(R4, n, n, [e for row in entries for e in row])

    def proj(Y: Mat, n: int) -> Mat:
        return Mat(R4, 2, 2, [Y[0, 0], Y[0, n - 1], Y[n - 1, 0], Y[n - 1, n - 1]])

    count = 0
    for n in (3, 4, 5):
        for bits in itertools.product(range(4), repeat=4):
            X = Mat(R4, 2, 2, bits)
            _req(proj(incl(X, n), n) == X, "corner projection/inclusion mismatch")
            count += 1
    return {"matrices": count}


def _corner_module_f4(_heavy: bool) -> dict:
    return verify_f4_corner_modules()


# ---------------------------------------------------------------------------
# unitriangular infrastructure


def _u5_fixed_points(_heavy: bool) -> dict:
    U5 = fixture_group("U5_F2")
    fp = fixed_points(GModule(R2, 5), U5)  # basis of the fixed submodule
    e15 = Mat.unit(R2, 5, 1, 5)
    ident = Mat.identity(R2, 5)
    _req(
        {m.key() for m in fp} == {e15.key(), ident.key()},
        "fixed module basis is not {I, E15}",
    )
    # trace-zero refinement: the trace-zero fixed vectors are spanned by E15
    zero_trace = [m for m in fp if sum(m[i, i] for i in range(5)) % 2 == 0]
    _req([m.key() for m in zero_trace] == [e15.key()], "trace-zero fixed span is not E15")
    ev = verify_e15_overgroups()
    return {"fixed": ["0", "E15"], **ev}


def _u5_abelianization(_heavy: bool) -> dict:
    U5 = fixture_group("U5_F2")
    _, ab = derived_and_abelianization(U5)
    _req(ab.divisors == [2, 2, 2, 2], f"divisors {ab.divisors}")
    chars = [Character.coordinate(U5, i, i + 1) for i in range(1, 5)]
    seen = {tuple(c(g) for c in chars) for g in U5.elements()}
    _req(len(seen) == 16, "superdiagonal characters not independent")
    return {"divisors": ab.divisors, "value_tuples": len(seen)}


def _coordinate_kernels(_heavy: bool) -> dict:
    return verify_coordinate_kernels()


def _diagonalizable(_heavy: bool) -> dict:
    return verify_diagonalizable_d2()


def _squarefree_cyclic(_heavy: bool) -> dict:
    """Trace-zero classes with square-free p_A have odd abelian stabilizers."""
    from .audit import _shared_table

    table = _shared_table()
    done = 0
    for i in range(len(table)):
        sig = table.signatures[i]
        if sig.trace != 0 or not table.is_squarefree(i):
            continue
        A = sig.representative()
        sol = solve_affine([(lambda X: X * A - A * X, Mat.zeros(R2, 5))], [(5, 5)], R2)
        _req(sol.kernel_dim == 5, "commutant of a cyclic matrix is not F_2[A]")
        C = centralizer_of_matrix(A)
        _req(C.order % 2 == 1, "stabilizer has even order")
        elems = list(C.elements())
        for a in elems:
            for b in elems:
                _req(a * b == b * a, "stabilizer not abelian")
        done += 1
    _req(done == 8, f"expected 8 square-free trace-zero classes, saw {done}")
    return {"classes": done}


def _jordan_block_ingredients(_heavy: bool) -> dict:
    N5 = jordan_block(R2, 0, 5)
    A = N5  # nilpotent regular representative
    ident = Mat.identity(R2, 5)
    GA = shape_group(R2, SHAPE_GA_J5)
    _req(GA.key_set() == centralizer_of_matrix(A).key_set(), "stabilizer shape wrong")
    _req(GA.order == 16, "stabilizer order")
    _, ab = derived_and_abelianization(GA)
    _req(ab.divisors == [2, 8], f"divisors {ab.divisors}")
    g8 = ident + N5
    g2 = ident + N5 * N5 * N5
    _req(g2 == uni(R2, 5, (1, 4), (2, 5)), "I + N^3 display")
    # the two generating characters
    u = Character.from_generator_values(GA, [(g8, Fraction(0)), (g2, Fraction(1, 2))])
    v = Character.from_generator_values(GA, [(g8, Fraction(1, 8)), (g2, Fraction(1, 2))])
    K = shape_group(R2, SHAPE_K_J5)
    _req(GA.is_subgroup_of(K), "stabilizer not inside K")
    _req(character_extends(u, K), "u does not extend to K")
    _req(not character_extends(v, K), "v unexpectedly extends to K")
    # the extension kernel is normal in K with quotient Z/4 x Z/2
    ker = closure([uni(R2, 5, (1, 3)), uni(R2, 5, (1, 4)), uni(R2, 5, (1, 5))])
    _req(ker.order == 8 and K.order == 64, "kernel/overgroup orders")
    for g in K.generators:
        gi = mat_inv(g)
        for x in ker.generators:
            _req(ker.contains(g * x * gi), "kernel not normal in K")
    # Jordan types: I + N^4 is a single 2-block, the Klein elements are double
    sigma, tau = klein_sigma_tau(5)
    n4 = ident + N5 * N5 * N5 * N5
    two_block = ident + Mat.unit(R2, 5, 1, 2)
    double = ident + Mat.unit(R2, 5, 1, 2) + Mat.unit(R2, 5, 3, 4)
    _req(is_conjugate(n4, two_block), "I + N^4 Jordan type")
    for z in (sigma, tau, sigma * tau):
        _req(is_conjugate(z, double), "Klein element Jordan type")
        _req(not is_conjugate(n4, z), "I + N^4 conjugate into the Klein group")
    rho = ident + N5 * N5 * N5 + N5 * N5 * N5 * N5
    _req(is_conjugate(g2, double) and is_conjugate(rho, double), "I + N^3 Jordan type")
    # K is covered by the four cosets of G_A through mu and nu (note G_A is
    # not normal in K: conjugating I+N by the (2,4)+(3,5) element escapes),
    # and the transversal norm from G_A to K vanishes, in two displayed steps
    mu = uni(R2, 5, (1, 4))
    nu = uni(R2, 5, (1, 3))
    cosets = {min((x * h).key() for h in GA.elements()) for x in (ident, mu, nu, mu * nu)}
    _req(len(cosets) == 4 and K.order == 4 * GA.order, "mu, nu do not split K over G_A")
    _req((mu * mu).is_identity() and (nu * nu).is_identity(), "transversal squares")
    mod = GModule(R2, 5)
    triv = trivial_subgroup(R2, 5)
    nmu = norm_map(mod, triv, closure([mu]), A)
    _req(nmu == Mat.unit(R2, 5, 1, 5), f"N_mu(A) = {nmu.text()!r}")
    _req(norm_map(mod, triv, closure([nu]), nmu).is_zero(), "N_nu(N_mu(A)) != 0")
    _req(norm_map(mod, GA, K, A).is_zero(), "relative norm from the stabilizer to K")
    return {
        "order": GA.order,
        "divisors": ab.divisors,
        "u_extends": True,
        "v_extends": False,
        "norm_chain": ["E15", "0"],
    }


def _double_coset(heavy: bool) -> dict:
    N5 = jordan_block(R2, 0, 5)
    ident = Mat.identity(R2, 5)
    rho = ident + N5 * N5 * N5 + N5 * N5 * N5 * N5
    GA = shape_group(R2, SHAPE_GA_J5)
    C = centralizer_of_matrix(rho + ident)  # centralizer of rho as a group
    _req(GA.is_subgroup_of(C), "stabilizer not inside the centralizer of rho")
    sigma, tau = klein_sigma_tau(5)
    targets = [("sigma", sigma, tau), ("tau", tau, sigma), ("sigma*tau", sigma * tau, sigma)]
    ga_keys = [h.key() for h in GA.elements()]
    checked = 0
    for name, target, other in targets:
        g0 = is_conjugate(rho, target)
        _req(bool(g0) and g0 * rho * mat_inv(g0) == target, f"no conjugator onto {name}")
        # the other Klein generator must move every coset g0 c G_A
        for c in C.elements():
            g = g0 * c
            h = mat_inv(g) * other * g
            _req(not GA.contains(h), f"{name}: fixed coset found")
            checked += 1
    ev: dict = {"cosets_checked": checked, "centralizer_order": C.order}
    if heavy:
        gl = gf2.batch_closure([g.key() for g in gl_generators(R2, 5)], 5, 10_000_001)
        _req(gl.size == 9_999_360, "ambient group order")
        z_keys = [m.key() for m in (ident, sigma, tau, sigma * tau)]
        canon = None
        for z in z_keys:
            left = gf2.batch_mul_left(gl, z, 5)
            for h in ga_keys:
                prod = gf2.batch_mul_right(left, h, 5)
                canon = prod if canon is None else np.minimum(canon, prod)
        ev["double_cosets"] = int(np.unique(canon).size)
        ev["plain_cosets"] = 9_999_360 // GA.order
    else:
        ev["double_cosets"] = None
    return ev


def _gl5_closure(_heavy: bool) -> dict:
    keys = gf2.batch_closure([g.key() for g in gl_generators(R2, 5)], 5, 10_000_001)
    order = 1
    for i in range(5):
        order *= 2**5 - 2**i
    _req(order == 9_999_360, "order formula")
    _req(int(keys.size) == order, f"closure size {keys.size}")
    return {"order": int(keys.size)}


def _class_coverage(heavy: bool) -> dict:
    return class_coverage_audit(samples=1_000_000, heavy=heavy)


def _oracle_equivalence(_heavy: bool) -> dict:
    agreements = 0
    U3 = fixture_group("U3_F2")
    elems = list(U3.elements())
    for rho in elems:
        for mu in elems:
            if rho * mu != mu * rho:
                continue
            spec = BicyclicGroupSpec(rho, mu)
            if closure([rho, mu]).order != spec.s * spec.t:
                continue
            rb = bicyclic_split(spec, glift_triple(spec))
            rg = generic_split(glift_cocycle(closure([rho, mu])))
            _req(rb.splits == rg.splits, "solver verdicts disagree on U3 pair")
            agreements += 1
    _req(agreements > 10, "too few bicyclic pairs exercised")
    # U2(F4)
    g1 = Mat.identity(R4, 2) + Mat.unit(R4, 2, 1, 2)
    g2 = Mat.identity(R4, 2) + Mat.unit(R4, 2, 1, 2).scale(2)
    spec = BicyclicGroupSpec(g1, g2)
    rb = bicyclic_split(spec, glift_triple(spec))
    rg = generic_split(glift_cocycle(closure([g1, g2])))
    _req(rb.splits == rg.splits, "solver verdicts disagree on U2(F4)")
    # the Klein pair at n = 4
    sigma, tau = klein_sigma_tau(4)
    spec = BicyclicGroupSpec(sigma, tau)
    rb = bicyclic_split(spec, glift_triple(spec))
    rg = generic_split(glift_cocycle(closure([sigma, tau])))
    _req(rb.splits == rg.splits == False, "Klein pair verdicts")
    return {"u3_pairs": agreements, "extra": ["U2(F4)", "Klein n=4"]}


# ---------------------------------------------------------------------------
# catalog assembly


def _case_check(cid: str) -> Callable[[bool], dict]:
    def run(_heavy: bool) -> dict:
        return verify_case(cid)

    return run


def _build_catalog() -> List[CheckSpec]:
    specs = [
        CheckSpec("C-witt-laws-f2", "Witt ring laws, exhaustive over W2(F_2)", lambda h: _witt_laws(F2)),
        CheckSpec("C-witt-laws-f3", "Witt ring laws, exhaustive over W2(F_3)", lambda h: _witt_laws(F3)),
        CheckSpec("C-witt-laws-f4", "Witt ring laws, exhaustive over W2(F_4)", lambda h: _witt_laws(F4)),
        CheckSpec("C-witt-frobenius-relation", "p copies of a Teichmuller lift sum to iota(x^p)", _witt_frobenius),
        CheckSpec("C-lift-split-n1", "Teichmuller section is multiplicative (1x1 splitting)", _teichmuller_section),
        CheckSpec("C-lift-split-F2-n2", "order-2 lift splits the 2x2 extension mod 4", _lift_split_n2_f2),
        CheckSpec("C-lift-split-F3", "order-3 lift splits the 2x2 extension mod 9", _lift_split_f3),
        CheckSpec("C-lift-split-F2-n3", "two lifts mod 4 generate a copy of the 3x3 unitriangulars", _lift_split_n3_f2),
        CheckSpec("C-lift-split-integral", "the displayed splittings are integral", _lift_split_integral),
        CheckSpec("C-lift-nonsplit-F9", "independent 3-torsion corner pair over F_9 does not split", _lift_nonsplit_f9),
        CheckSpec("C-restrict-k-bigger-f2", "corner pairs over F_4/F_8 obstruct splitting", _restrict_k_bigger),
        CheckSpec("C-restrict-klein-f2", "Klein corner pairs at n=4,5 obstruct splitting", _restrict_klein),
        CheckSpec("C-corner-reduction", "corner projection inverts corner inclusion", _corner_reduction),
        CheckSpec("C-corner-module-f4", "fixed corner modules and norms over F_4", _corner_module_f4),
        CheckSpec("C-u5-fixed-points", "unitriangular fixed module is spanned by E15", _u5_fixed_points),
        CheckSpec("C-u5-abelianization", "unitriangular abelianization via superdiagonal entries", _u5_abelianization),
        CheckSpec("C-coordinate-kernels", "superdiagonal coordinate kernels and their fixed points", _coordinate_kernels),
        CheckSpec("C-diagonalizable-d2", "rank-2 idempotent stabilizer and its Sylow characters", _diagonalizable),
        CheckSpec("C-squarefree-cyclic", "square-free classes have odd abelian stabilizers", _squarefree_cyclic),
        CheckSpec("C-jordan-block-ingredients", "regular nilpotent stabilizer: characters, kernels, norms", _jordan_block_ingredients),
        CheckSpec("C-double-coset-fixed-point-free", "Klein translates act freely on the transporter cosets", _double_coset, heavy=True),
        CheckSpec("C-gl5-closure", "full 5x5 general linear group closure order", _gl5_closure),
        CheckSpec("C-class-coverage", "conjugacy-class signature construction vs sampling oracle", _class_coverage),
        CheckSpec("C-class-census", "full 2^25 conjugacy-class census with orbit sizes", lambda h: class_coverage_audit(samples=0, heavy=True), heavy=True),
        CheckSpec("C-oracle-equivalence", "structured and generic cocycle solvers agree", _oracle_equivalence),
    ]
    for cid in case_ids():
        specs.append(
            CheckSpec(
                f"C-case-{cid}",
                f"stabilizer case catalog: {cid}",
                _case_check(cid),
            )
        )
    ids = [s.id for s in specs]
    if len(ids) != len(set(ids)):
        raise CheckFailure("duplicate check ids in the catalog")
    return sorted(specs, key=lambda s: s.id)


_CATALOG: Optional[List[CheckSpec]] = None


def catalog() -> List[CheckSpec]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def check_ids() -> List[str]:
    return [s.id for s in catalog()]


def run_checks(filter_glob: Optional[str] = None, heavy: bool = False) -> List[CheckReport]:
    specs = catalog()
    if filter_glob is not None:
        specs = [s for s in specs if fnmatch.fnmatchcase(s.id, filter_glob)]
        if not specs:
            raise UnknownCheckId(f"no check matches {filter_glob!r}")
    # every case in the fixtures must be covered by the catalog
    covered = {s.id for s in catalog()}
    for cid in case_ids():
        if f"C-case-{cid}" not in covered:
            raise CheckFailure(f"case {cid} has no catalog check")
    reports = []
    for spec in specs:
        t0 = time.perf_counter()
        if spec.heavy and not heavy:
            reports.append(CheckReport(spec.id, spec.anchor, "skipped", {}, 0.0))
            continue
        try:
            ev = spec.fn(heavy)
            status = "pass"
        except WittliftError as exc:
            ev = {"error": str(exc)}
            status = "fail"
        ms = (time.perf_counter() - t0) * 1000
        reports.append(CheckReport(spec.id, spec.anchor, status, ev, ms))
    return reports


__all__ = [
    "CheckReport",
    "CheckSpec",
    "catalog",
    "check_ids",
    "run_checks",
]
