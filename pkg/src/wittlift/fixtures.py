"""Named matrix groups and the case catalog for the 5x5 stabilizer analysis.

Groups specified "by shape" — a matrix of linear expressions in free
parameters — are materialized by iterating the parameters over the field,
filtering for invertibility, and validating closure.  The case tables list,
for each conjugacy type handled by the verification catalog, the
representative matrix, the displayed stabilizer shape (before and after an
optional permutation-conjugation), the auxiliary overgroups, and the claims
to be machine-checked.
"""

from __future__ import annotations

import itertools
import re
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ShapeMismatch
from .gfq import fq_make
from .grp import Subgroup, closure, subgroup_from_elements
from .linalg import Mat, block_diag, cycle_to_images, jordan_block, perm_matrix
from .rings import FqRing, fq_ring

F2 = fq_make(2, 1)
F4 = fq_make(2, 2)
R2 = fq_ring(F2)
R4 = fq_ring(F4)


# ---------------------------------------------------------------------------
# shape DSL


def _parse_shape(text: str) -> Tuple[List[List[List[str]]], List[str]]:
    """Rows of entries; each entry a list of terms ('0', '1', or a letter)."""
    star = 0
    rows = []
    letters: List[str] = []
    for row_text in text.strip().split(";"):
        row = []
        for ent in row_text.split(","):
            ent = ent.strip()
            if ent == "*":
                star += 1
                ent = f"_s{star}"
            terms = [t.strip() for t in ent.split("+")]
            for t in terms:
                if t not in ("0", "1") and t not in letters:
                    if not re.fullmatch(r"[a-z]|_s\d+", t):
                        raise ShapeMismatch(f"bad shape term {t!r}")
                    letters.append(t)
            row.append(terms)
        rows.append(row)
    if any(len(r) != len(rows) for r in rows):
        raise ShapeMismatch("shape is not square")
    return rows, letters


def _eval_shape(ring: FqRing, rows, assign: Dict[str, int]) -> Mat:
    n = len(rows)
    ent = []
    for row in rows:
        for terms in row:
            acc = 0
            for t in terms:
                if t == "0":
                    val = 0
                elif t == "1":
                    val = 1
                else:
                    val = assign[t]
                acc = ring.add(acc, val)
            ent.append(acc)
    return Mat(ring, n, n, ent)


def materialize(ring: FqRing, text: str) -> List[Mat]:
    """All matrices of the shape, parameters ranging over the field."""
    rows, letters = _parse_shape(text)
    q = ring.field.q
    out = []
    for vals in itertools.product(range(q), repeat=len(letters)):
        out.append(_eval_shape(ring, rows, dict(zip(letters, vals))))
    return out


def shape_group(ring: FqRing, text: str) -> Subgroup:
    """Materialize a parametric shape and validate the invertible part is a group."""
    from .linalg import mat_inv
    from .errors import Singular, NotInvertible

    mats = []
    for m in materialize(ring, text):
        try:
            mat_inv(m)
        except (Singular, NotInvertible):
            continue
        mats.append(m)
    return subgroup_from_elements(ring, mats[0].rows, mats)


def shape_span_basis(ring: FqRing, text: str) -> List[Mat]:
    """One basis matrix per parameter of a linear (no '1' terms) shape."""
    rows, letters = _parse_shape(text)
    basis = []
    for letter in letters:
        assign = {l: (1 if l == letter else 0) for l in letters}
        basis.append(_eval_shape(ring, rows, assign))
    return basis


# ---------------------------------------------------------------------------
# small builders


def uni(ring: FqRing, n: int, *positions: Tuple[int, int], scale: int = 1) -> Mat:
    """I + sum of E_ij over the listed (i, j) positions."""
    m = Mat.identity(ring, n)
    for i, j in positions:
        m = m + Mat.unit(ring, n, i, j).scale(scale)
    return m


def unitriangular_gens(ring: FqRing, n: int) -> List[Mat]:
    scalars = [1] if ring.field.q == 2 else [1, ring.field.p]
    return [
        uni(ring, n, (i, i + 1), scale=c) for i in range(1, n) for c in scalars
    ]


def klein_sigma_tau(n: int) -> Tuple[Mat, Mat]:
    """The commuting order-2 pair with corner blocks S = I, T = [[0,1],[1,1]]."""
    S = ((1, 0), (0, 1))
    T = ((0, 1), (1, 1))
    sigma = Mat.identity(R2, n)
    tau = Mat.identity(R2, n)
    for i in range(2):
        for j in range(2):
            if S[i][j]:
                sigma = sigma + Mat.unit(R2, n, i + 1, j + 3)
            if T[i][j]:
                tau = tau + Mat.unit(R2, n, i + 1, j + 3)
    return sigma, tau


def jordan_sum(ring: FqRing, blocks: Sequence[Tuple[int, int]]) -> Mat:
    """Block-diagonal sum of Jordan blocks given as (size, eigenvalue)."""
    return block_diag(ring, [jordan_block(ring, lam, r) for r, lam in blocks])


def perm_from_cycles(ring: FqRing, n: int, text: str) -> Mat:
    """Permutation matrix from cycle notation like '(45)' or '(2354)'."""
    images = list(range(1, n + 1))
    for cyc in re.findall(r"\(([0-9]+)\)", text):
        pts = [int(ch) for ch in cyc]
        step = cycle_to_images(n, pts)
        images = [step[i - 1] for i in images]
    return perm_matrix(ring, n, images)


# ---------------------------------------------------------------------------
# named shapes (5x5 over F_2 unless stated)

# stabilizer of J_5(0): polynomials in the nilpotent Jordan block
SHAPE_GA_J5 = "1,a,b,c,d;0,1,a,b,c;0,0,1,a,b;0,0,0,1,a;0,0,0,0,1"
# the order-64 overgroup used against J_5(0)
SHAPE_K_J5 = "1,a,b,d,f;0,1,a,c,e;0,0,1,a,c;0,0,0,1,a;0,0,0,0,1"
# stabilizer of E_15
SHAPE_G_E15 = "1,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,*,*,*,*;0,0,0,0,1"
# the two overgroups of U_5 in the fixed-point argument
SHAPE_K_U5 = "1,*,*,*,*;0,1,*,*,*;0,0,1,*,*;0,0,0,*,*;0,0,0,*,*"
SHAPE_KPRIME_U5 = "*,*,*,*,*;*,*,*,*,*;0,0,1,*,*;0,0,0,1,*;0,0,0,0,1"
# diagonalizable d=2 case
SHAPE_GA_DIAG2 = "*,*,*,0,0;*,*,*,0,0;*,*,*,0,0;0,0,0,*,*;0,0,0,*,*"
SHAPE_P_DIAG2 = "1,*,*,0,0;0,1,*,0,0;0,0,1,0,0;0,0,0,1,*;0,0,0,0,1"

_NAMED_SHAPES = {
    "GA_J5_F2": SHAPE_GA_J5,
    "K_J5_F2": SHAPE_K_J5,
    "G_E15_F2": SHAPE_G_E15,
    "K_u5_F2": SHAPE_K_U5,
    "Kprime_u5_F2": SHAPE_KPRIME_U5,
    "GA_diag2_F2": SHAPE_GA_DIAG2,
    "P_diag2_F2": SHAPE_P_DIAG2,
}

_FIXTURE_CACHE: Dict[str, Subgroup] = {}


def fixture_group(name: str) -> Subgroup:
    """A named group from the catalog (see fixture_names)."""
    if name in _FIXTURE_CACHE:
        return _FIXTURE_CACHE[name]
    if name in _NAMED_SHAPES:
        g = shape_group(R2, _NAMED_SHAPES[name])
    elif name in ("U3_F2", "U4_F2", "U5_F2"):
        g = closure(unitriangular_gens(R2, int(name[1])))
    elif name in ("GL2_F2", "GL3_F2", "GL4_F2"):
        from .grp import general_linear_group

        g = general_linear_group(R2, int(name[2]))
    elif name == "H_U3_F4":
        g = closure(unitriangular_gens(R4, 3))
    elif name == "Z_center_H_F4":
        g = closure([uni(R4, 3, (1, 3)), uni(R4, 3, (1, 3), scale=2)])
    elif name in ("Z_klein_n4", "Z_klein_n5"):
        sigma, tau = klein_sigma_tau(int(name[-1]))
        g = closure([sigma, tau])
    else:
        raise KeyError(f"unknown fixture {name!r}")
    _FIXTURE_CACHE[name] = g
    return g


def fixture_names() -> List[str]:
    return sorted(
        list(_NAMED_SHAPES)
        + [
            "U3_F2",
            "U4_F2",
            "U5_F2",
            "GL2_F2",
            "GL3_F2",
            "GL4_F2",
            "H_U3_F4",
            "Z_center_H_F4",
            "Z_klein_n4",
            "Z_klein_n5",
        ]
    )


# fixed-point shape of a corner transvection I + xE_12 inside 3x3 matrices
SHAPE_M_SIGMA12 = "a,b,c;0,a,0;0,d,e"
SHAPE_M_SIGMA23 = "a,0,b;d,e,c;0,0,e"


# ---------------------------------------------------------------------------
# case catalog: split Jordan types other than the full Jordan block
#
# Keys per case:
#   jordan          (size, eigenvalue) blocks of the representative
#   pre_shape       displayed stabilizer shape in Jordan coordinates
#   perm            cycles conjugating into working coordinates (None = none)
#   post_shape      displayed stabilizer shape in working coordinates
#   post_matrix     displayed representative in working coordinates (optional)
#   order           stabilizer order (derived, asserted)
#   commutators     [(product positions, left positions, right positions)]
#                   meaning I+sum(E) = [uni(left), uni(right)] in the stabilizer
#   ab_divisors     elementary divisors of the abelianization (ascending)
#   h1_coords       coordinate characters claimed to be homomorphisms
#   sylow_shape     displayed 2-Sylow shape (verified, never searched)
#   K_shape         displayed overgroup shape
#   semidirect      (sigma positions, tau positions) normal complement pair
#   norm_chain      (sigma positions, tau positions, first norm value positions)
#                   claim: N_sigma(A) = value, N_tau(value) = 0

JORDAN_CASES: List[dict] = [
    {
        "id": "jordan-ii",
        "jordan": [(4, 0), (1, 0)],
        "pre_shape": "1,a,b,c,d;0,1,a,b,0;0,0,1,a,0;0,0,0,1,0;0,0,0,e,1",
        "perm": "(45)",
        "post_shape": "1,a,b,d,c;0,1,a,0,b;0,0,1,0,a;0,0,0,1,e;0,0,0,0,1",
        "post_matrix": "0,1,0,0,0;0,0,1,0,0;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0",
        "order": 32,
        "commutators": [([(1, 5)], [(1, 4)], [(4, 5)])],
        "ab_divisors": [2, 2, 4],
        "h1_coords": [(1, 4), (4, 5)],
        "K_shape": "1,a,b,d,c;0,1,a,0,f;0,0,1,0,a;0,0,0,1,e;0,0,0,0,1",
        "semidirect": ([(2, 5)], None),
        "normal_factor": "base",
        "norm_chain": ([(2, 5)], None, [(1, 5)]),
        "second_perm": "(243)",
        "second_shape": "1,d,a,b,c;0,1,0,0,e;0,0,1,a,b;0,0,0,1,a;0,0,0,0,1",
    },
    {
        "id": "jordan-iii",
        "jordan": [(3, 0), (2, 0)],
        "pre_shape": "1,a,b,c,d;0,1,a,0,c;0,0,1,0,0;0,e,f,1,g;0,0,e,0,1",
        "perm": "(2354)",
        "post_shape": "1,c,a,d,b;0,1,e,h,f;0,0,1,c,a;0,0,0,1,e;0,0,0,0,1",
        "post_matrix": "0,0,1,0,0;0,0,0,1,0;0,0,0,0,1;0,0,0,0,0;0,0,0,0,0",
        "order": 128,
        "commutators": [
            ([(1, 4)], [(1, 2), (3, 4)], [(1, 3), (3, 5)]),
            ([(2, 5)], [(2, 3), (4, 5)], [(1, 3), (3, 5)]),
            ([(1, 5)], [(1, 4)], [(2, 3), (4, 5)]),
        ],
        # the commutator of I+E12+E34 and I+E23+E45 equals this element only
        # after multiplying by the three commutators above; membership in the
        # derived subgroup is what matters
        "derived_contains": [[(1, 3), (2, 4), (3, 5)]],
        "ab_divisors": [2, 2, 2],
        "h1_coords": [(1, 2), (2, 3)],
        "K_shape": "1,c,a,d,b;0,1,e,h,f;0,0,1,c,g;0,0,0,1,e;0,0,0,0,1",
        "semidirect": ([(3, 5)], None),
        "normal_factor": "base",
        "norm_chain": ([(3, 5)], None, [(1, 5)]),
    },
    {
        "id": "jordan-iv",
        "jordan": [(3, 0), (1, 0), (1, 0)],
        "pre_shape": "1,a,b,c,d;0,1,a,0,0;0,0,1,0,0;0,0,e,f,g;0,0,h,i,j",
        "perm": "(35)",
        "post_shape": "1,a,d,c,b;0,1,0,0,a;0,0,j,i,h;0,0,g,f,e;0,0,0,0,1",
        "order": 384,
        "sylow_shape": "1,a,d,c,b;0,1,0,0,a;0,0,1,i,h;0,0,0,1,e;0,0,0,0,1",
        "commutators": [
            ([(1, 5)], [(1, 4)], [(4, 5)]),
            ([(3, 5)], [(3, 4)], [(4, 5)]),
            ([(1, 4)], [(1, 3)], [(3, 4)]),
        ],
        # abelianization rank 4 holds for the 2-Sylow subgroup (odd index);
        # the full stabilizer has a GL_2 factor collapsing two coordinates
        "h1_coords_sylow": [(1, 2), (1, 3), (3, 4), (4, 5)],
    },
    {
        "id": "jordan-v",
        "jordan": [(2, 0), (2, 0), (1, 0)],
        "pre_shape": "a,b,c,d,e;0,a,0,c,0;f,g,h,i,0;0,f,0,h,0;0,j,0,k,l",
        "perm": "(2453)",
        "post_shape": "a,c,e,b,d;f,h,0,g,i;0,0,l,j,k;0,0,0,a,c;0,0,0,f,h",
        "order": 1536,
        "shape_full": False,  # the displayed shape omits one commutant parameter
        "sylow_shape": "1,c,e,b,d;0,1,0,g,i;0,0,1,j,k;0,0,0,1,c;0,0,0,0,1",
        # the displayed 2-subgroup omits the same free parameter; adjoining
        # I + E_23 (the omitted direction) yields a genuine 2-Sylow of order 512
        "sylow_full": False,
        "sylow_extend": [(2, 3)],
        "derived_contains": [[(1, 5)], [(1, 4)], [(2, 5)], [(3, 5)]],
        # the rank-4 abelianization claim is read on the displayed 2-subgroup
        # (the full 2-Sylow has abelianization rank 3)
        "h1_coords_sylow": [(1, 2), (1, 3), (3, 4), (2, 4)],
    },
    {
        "id": "jordan-vi",
        "jordan": [(2, 0), (1, 0), (1, 0), (1, 0)],
        "pre_shape": None,
        "perm": "(25)",
        "post_matrix": "0,0,0,0,1;0,0,0,0,0;0,0,0,0,0;0,0,0,0,0;0,0,0,0,0",
        "post_shape": SHAPE_G_E15,
        "order": 16 * 168 * 8,
        "ab_divisors": [2, 2],
        "h1_coords": [(1, 2), (4, 5)],
        "contains_u5": True,
    },
    {
        "id": "jordan-vii",
        "jordan": [(4, 1), (1, 0)],
        "pre_shape": "1,a,b,c,0;0,1,a,b,0;0,0,1,a,0;0,0,0,1,0;0,0,0,0,1",
        "perm": None,
        "post_shape": "1,a,b,c,0;0,1,a,b,0;0,0,1,a,0;0,0,0,1,0;0,0,0,0,1",
        "order": 8,
        "K_shape": "1,a,b,c,d;0,1,a,b,e;0,0,1,a,0;0,0,0,1,0;0,0,0,0,1",
        "semidirect": ([(1, 5)], [(2, 5)]),
        "norm_chain": ([(1, 5)], [(2, 5)], [(1, 5)]),
        "klein_normal_in_u5": True,
    },
    {
        "id": "jordan-viii",
        "jordan": [(3, 1), (1, 1), (1, 0)],
        "pre_shape": "1,a,b,c,0;0,1,a,0,0;0,0,1,0,0;0,0,d,1,0;0,0,0,0,1",
        "perm": "(34)",
        "post_shape": "1,a,c,b,0;0,1,0,a,0;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1",
        "post_matrix": "1,1,0,0,0;0,1,0,1,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,0",
        "order": 16,
        "K_shape": "1,a,c,b,e;0,1,0,a,f;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1",
        "semidirect": ([(1, 5)], [(2, 5)]),
        "norm_chain": ([(1, 5)], [(2, 5)], [(1, 5)]),
    },
    {
        "id": "jordan-ix",
        "jordan": [(2, 1), (2, 1), (1, 0)],
        "pre_shape": "a,b,c,d,0;0,a,0,c,0;e,f,g,h,0;0,e,0,g,0;0,0,0,0,1",
        "perm": "(23)",
        "post_shape": "a,c,b,d,0;e,g,f,h,0;0,0,a,c,0;0,0,e,g,0;0,0,0,0,1",
        "post_matrix": "1,0,1,0,0;0,1,0,1,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,0",
        "order": 96,
        "sylow_shape": "1,c,b,d,0;0,1,f,h,0;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1",
        "K_shape": "1,c,b,d,i;0,1,f,h,j;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1",
        "semidirect": ([(1, 5)], [(2, 5)]),
        "norm_chain": ([(1, 5)], [(2, 5)], [(1, 5)]),
        "norm_base": "sylow",
    },
    {
        "id": "jordan-x",
        "jordan": [(2, 1), (1, 1), (1, 1), (1, 0)],
        "pre_shape": "1,a,b,c,0;0,1,0,0,0;0,d,e,f,0;0,g,h,i,0;0,0,0,0,1",
        "perm": "(24)",
        "post_shape": "1,c,b,a,0;0,i,h,g,0;0,f,e,d,0;0,0,0,1,0;0,0,0,0,1",
        "order": 192,
        "sylow_shape": "1,c,b,a,0;0,1,h,g,0;0,0,1,d,0;0,0,0,1,0;0,0,0,0,1",
        "sylow_is_u4": True,
        "h1_coords_sylow": [(1, 2), (2, 3), (3, 4)],
    },
    {
        "id": "jordan-xi",
        "jordan": [(3, 0), (2, 1)],
        "pre_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,1,c;0,0,0,0,1",
        "perm": None,
        "post_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,1,c;0,0,0,0,1",
        "order": 8,
        # the displayed overgroup misses the (1,4), (1,5), (2,4), (2,5)
        # entries generated by its own products; the generated group works
        "K_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,d,e;0,0,0,1,c;0,0,0,0,1",
        "K_closure": True,
        "K_order": 512,
        "K_norm_zero": True,
        "norm_chain": ([(3, 5)], [(3, 4)], [(2, 5), (3, 5)]),
    },
    {
        "id": "jordan-xii",
        "jordan": [(3, 0), (1, 1), (1, 1)],
        "pre_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,c,d;0,0,0,e,f",
        "perm": None,
        "post_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,c,d;0,0,0,e,f",
        "order": 24,
        "sylow_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1",
        "K_shape": "1,a,b,0,0;0,1,a,0,0;0,0,1,d,e;0,0,0,1,c;0,0,0,0,1",
        "K_closure": True,
        "K_order": 512,
        "K_norm_zero": True,
        "norm_base": "sylow",
        "norm_chain_zero": ([(3, 4)], [(3, 5)]),
    },
    {
        "id": "jordan-xiii",
        "jordan": [(2, 0), (1, 0), (2, 1)],
        "pre_shape": "1,a,b,0,0;0,1,0,0,0;0,c,1,0,0;0,0,0,1,d;0,0,0,0,1",
        "perm": "(23)",
        "post_shape": "1,b,a,0,0;0,1,c,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1",
        "order": 16,
        "ab_divisors": [2, 2, 2],
        "h1_coords": [(1, 2), (2, 3), (4, 5)],
    },
    {
        "id": "jordan-xiv",
        "jordan": [(2, 0), (1, 0), (1, 1), (1, 1)],
        "pre_shape": "1,b,c,0,0;0,1,0,0,0;0,d,1,0,0;0,0,0,e,f;0,0,0,g,h",
        "perm": "(23)",
        "post_shape": "1,c,b,0,0;0,1,d,0,0;0,0,1,0,0;0,0,0,e,f;0,0,0,g,h",
        "order": 48,
        "sylow_shape": "1,c,b,0,0;0,1,d,0,0;0,0,1,0,0;0,0,0,1,f;0,0,0,0,1",
        "h1_coords_sylow": [(1, 2), (2, 3), (4, 5)],
    },
    {
        "id": "jordan-xv",
        "jordan": [(1, 0), (1, 0), (1, 0), (2, 1)],
        "pre_shape": "a,b,c,0,0;d,e,f,0,0;g,h,i,0,0;0,0,0,1,j;0,0,0,0,1",
        "perm": None,
        "post_shape": "a,b,c,0,0;d,e,f,0,0;g,h,i,0,0;0,0,0,1,j;0,0,0,0,1",
        "order": 336,
        "sylow_shape": "1,a,c,0,0;0,1,b,0,0;0,0,1,0,0;0,0,0,1,d;0,0,0,0,1",
        "h1_coords_sylow": [(1, 2), (2, 3), (4, 5)],
    },
]


# companion-style 3x3 block with p(x) = x^3 + x + 1 used by the non-split cases
_C3 = "0,0,1;1,0,1;0,1,0"
# 2x2 block with p(x) = x^2 + x + 1
_C2 = "0,1;1,1"
# its commutant shape (a copy of F_4)
_F8_SHAPE = "a+c,a,b;b,c,a+b;a,b,c"
_F4_SHAPE = "a+b,a;a,b"

OTHER_CASES: List[dict] = [
    {
        "id": "other-i",
        "matrix": "0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,0,0;0,0,0,0,0",
        "charpoly": [0, 0, 1, 1, 0, 1],  # (x^3+x+1) x^2
        "minpoly": [0, 1, 1, 0, 1],  # (x^3+x+1) x
        "shape": "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,d,e;0,0,0,f,g",
        "order": 42,
        "sylow_gen": [(4, 5)],
        "h1_coords_sylow": [(4, 5)],
    },
    {
        "id": "other-ii",
        "matrix": "0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,0,1;0,0,0,0,0",
        "charpoly": [0, 0, 1, 1, 0, 1],
        "minpoly": [0, 0, 1, 1, 0, 1],
        "shape": "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,1,d;0,0,0,0,1",
        "order": 14,
        "sylow_gen": [(4, 5)],
        "h1_coords_sylow": [(4, 5)],
    },
    {
        "id": "other-iii",
        "matrix": "0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,1,0;0,0,0,0,1",
        "charpoly": [1, 1, 1, 0, 0, 1],  # (x^3+x+1)(x+1)^2
        "minpoly": [1, 0, 1, 1, 1],  # (x^3+x+1)(x+1)
        "shape": "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,d,e;0,0,0,f,g",
        "order": 42,
        "sylow_gen": [(4, 5)],
        "h1_coords_sylow": [(4, 5)],
    },
    {
        "id": "other-iv",
        "matrix": "0,0,1,0,0;1,0,1,0,0;0,1,0,0,0;0,0,0,1,1;0,0,0,0,1",
        "charpoly": [1, 1, 1, 0, 0, 1],
        "minpoly": [1, 1, 1, 0, 0, 1],
        "shape": "a+c,a,b,0,0;b,c,a+b,0,0;a,b,c,0,0;0,0,0,1,d;0,0,0,0,1",
        "order": 14,
        "sylow_gen": [(4, 5)],
        "h1_coords_sylow": [(4, 5)],
    },
    {
        "id": "other-v",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,0,1,0;0,0,1,1,0;0,0,0,0,0",
        "charpoly": [0, 1, 0, 1, 0, 1],  # (x^2+x+1)^2 x
        "minpoly": [0, 1, 1, 1],  # (x^2+x+1) x
        "shape": "a+b,a,c+d,c,0;a,b,c,d,0;e+f,e,g+h,g,0;e,f,g,h,0;0,0,0,0,1",
        "order": 180,
        "stab_shape": "1,0,c+d,c,0;0,1,c,d,0;0,0,g+h,g,0;0,0,g,h,0;0,0,0,0,1",
        "sylow_shape": "1,0,c+d,c,0;0,1,c,d,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1",
        "transitive_on_nonzero": True,
        "h1_coords_sylow": [(1, 3), (2, 3)],
        "sylow_in_v3": True,
        "char_relation": ((1, 3), [(2, 3), (2, 4)]),
    },
    {
        "id": "other-vi",
        "matrix": "0,1,1,0,0;1,1,0,1,0;0,0,0,1,0;0,0,1,1,0;0,0,0,0,0",
        "charpoly": [0, 1, 0, 1, 0, 1],
        "minpoly": [0, 1, 0, 1, 0, 1],  # (x^2+x+1)^2 x
        "shape": "a+b,a,c+d,c,0;a,b,c,d,0;0,0,a+b,a,0;0,0,a,b,0;0,0,0,0,1",
        "order": 12,
        "sylow_shape": "1,0,c+d,c,0;0,1,c,d,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1",
        "sylow_unique": True,
        "h1_coords_sylow": [(1, 3), (2, 3)],
        "sylow_in_v3": True,
        "char_relation": ((1, 3), [(2, 3), (2, 4)]),
    },
    {
        "id": "other-vii",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,0,0,0;0,0,0,0,0;0,0,0,0,1",
        "charpoly": [0, 0, 1, 0, 0, 1],  # (x^2+x+1) x^2 (x+1)
        "minpoly": [0, 1, 0, 0, 1],  # (x^2+x+1) x (x+1)
        "shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,c,d,0;0,0,e,g,0;0,0,0,0,1",
        "order": 18,
        "sylow_gen": [(3, 4)],
        "sylow_nonunique": True,
        "h1_coords_sylow": [(3, 4)],
    },
    {
        "id": "other-viii",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,0,1,0;0,0,0,0,0;0,0,0,0,1",
        "charpoly": [0, 0, 1, 0, 0, 1],
        "minpoly": [0, 0, 1, 0, 0, 1],
        "shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,0;0,0,0,1,0;0,0,0,0,1",
        "order": 6,
        "sylow_gen": [(3, 4)],
        "sylow_unique": True,
        "h1_coords_sylow": [(3, 4)],
    },
    {
        "id": "other-ix",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,1",
        "charpoly": [1, 0, 1, 1, 0, 1],  # (x^2+x+1)(x+1)^3
        "minpoly": [1, 0, 0, 1],  # (x^2+x+1)(x+1)
        "shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,c,d,e;0,0,f,g,h;0,0,i,j,k",
        "order": 504,
        "ab_odd": True,
    },
    {
        "id": "other-x",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,1,1,0;0,0,0,1,0;0,0,0,0,1",
        "charpoly": [1, 0, 1, 1, 0, 1],
        "minpoly": [1, 1, 0, 1, 1],  # (x^2+x+1)(x+1)^2
        "pre_shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,d;0,0,0,1,0;0,0,0,e,1",
        "perm": "(45)",
        "shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,1,d,c;0,0,0,1,e;0,0,0,0,1",
        "order": 24,
        "sylow_shape": "1,0,0,0,0;0,1,0,0,0;0,0,1,d,c;0,0,0,1,e;0,0,0,0,1",
        "sylow_unique": True,
        "h1_coords_sylow": [(3, 4), (4, 5)],
    },
    {
        "id": "other-xi",
        "matrix": "0,1,0,0,0;1,1,0,0,0;0,0,1,1,0;0,0,0,1,1;0,0,0,0,1",
        "charpoly": [1, 0, 1, 1, 0, 1],
        "minpoly": [1, 0, 1, 1, 0, 1],
        "shape": "a+b,a,0,0,0;a,b,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1",
        "order": 12,
        "sylow_shape": "1,0,0,0,0;0,1,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1",
        "sylow_unique": True,
        "K_shape": "1,e,0,0,0;0,1,0,0,0;0,0,1,c,d;0,0,0,1,c;0,0,0,0,1",
        "sigma": [(1, 2)],
        "norm_sigma_value": [(1, 1), (2, 2)],  # N_sigma(A), fixed by all of K
    },
]


__all__ = [
    "F2",
    "F4",
    "R2",
    "R4",
    "materialize",
    "shape_group",
    "shape_span_basis",
    "uni",
    "unitriangular_gens",
    "klein_sigma_tau",
    "jordan_sum",
    "perm_from_cycles",
    "fixture_group",
    "fixture_names",
    "SHAPE_GA_J5",
    "SHAPE_K_J5",
    "SHAPE_G_E15",
    "SHAPE_K_U5",
    "SHAPE_KPRIME_U5",
    "SHAPE_GA_DIAG2",
    "SHAPE_P_DIAG2",
    "SHAPE_M_SIGMA12",
    "SHAPE_M_SIGMA23",
    "JORDAN_CASES",
    "OTHER_CASES",
]
