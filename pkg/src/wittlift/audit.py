"""Conjugacy-class coverage audit for 5x5 matrices over F_2.

Classes of M_5(F_2) are classified by invariant-factor signatures,
equivalently by an assignment of a partition to each irreducible polynomial
with total weighted degree 5.  This module constructs every signature
directly from that combinatorial description, and independently recovers the
signature of any concrete matrix from its nullity profile: the nullities of
pi(A)^j for every irreducible pi of degree <= 5 determine the partition
attached to pi.  The audit cross-checks the two descriptions, partitions the
trace-zero signatures into the four case families handled by the check
catalog, and validates the construction against a large random sample (and,
in heavy mode, against a census of all 2^25 matrices).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import gf2
from .errors import CheckFailure
from .fixtures import JORDAN_CASES, OTHER_CASES, R2, jordan_sum
from .gfq import Poly, enumerate_monic, fq_make, poly_is_irreducible
from .linalg import Mat, block_diag

N = 5
F2 = fq_make(2, 1)

_GL5_ORDER = 9_999_360


def irreducible_polys(max_degree: int = N) -> List[Poly]:
    """All monic irreducible polynomials over F_2 of degree <= max_degree."""
    out: List[Poly] = []
    for d in range(1, max_degree + 1):
        for f in enumerate_monic(F2, d):
            if poly_is_irreducible(f):
                out.append(f)
    return out


_IRR: List[Poly] = irreducible_polys()
# nullity profile layout: for each irreducible pi of degree d, the powers
# pi(A)^j for j = 1..floor(5/d); every entry is an XOR-combination of
# I, A, ..., A^5 because pi^j has degree <= 5
_PROFILE: List[Tuple[int, int]] = [
    (k, j)
    for k, pi in enumerate(_IRR)
    for j in range(1, N // pi.degree + 1)
]


def _partitions(weight: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if weight == 0:
        yield ()
        return
    top = min(weight, max_part) if max_part else weight
    for first in range(top, 0, -1):
        for rest in _partitions(weight - first, first):
            yield (first,) + rest


def companion(f: Poly) -> Mat:
    """Companion matrix of a monic polynomial over F_2."""
    d = f.degree
    entries = [0] * (d * d)
    for i in range(1, d):
        entries[i * d + (i - 1)] = 1
    for i in range(d):
        entries[i * d + (d - 1)] = f.coeffs[i] % 2
    return Mat(R2, d, d, entries)


@dataclass(frozen=True)
class ClassSignature:
    """Invariant factors of a conjugacy class of M_5(F_2).

    ``factors`` is the divisibility chain f_1 | f_2 | ... | f_k (coefficient
    tuples, constant term first) with f_k the minimal polynomial and the
    product of all factors the characteristic polynomial.
    """

    factors: Tuple[Tuple[int, ...], ...]
    trace: int

    def __post_init__(self):
        polys = self.polys()
        total = sum(f.degree for f in polys)
        if total != N:
            raise ValueError(f"invariant factor degrees sum to {total}, not {N}")
        for small, big in zip(polys, polys[1:]):
            if not (big % small).is_zero():
                raise ValueError("invariant factors do not form a divisibility chain")

    def polys(self) -> List[Poly]:
        return [Poly(F2, c) for c in self.factors]

    def charpoly(self) -> Poly:
        p = Poly.one(F2)
        for f in self.polys():
            p = p * f
        return p

    def minpoly(self) -> Poly:
        return self.polys()[-1]

    def representative(self) -> Mat:
        """Rational canonical form: direct sum of companion blocks."""
        return block_diag(R2, [companion(f) for f in self.polys()])


def _assignment_signature(asgn: Dict[int, Tuple[int, ...]]) -> ClassSignature:
    depth = max(len(lam) for lam in asgn.values())
    factors = []
    for slot in range(depth - 1, -1, -1):  # smallest invariant factor first
        f = Poly.one(F2)
        for k, lam in asgn.items():
            if slot < len(lam):
                for _ in range(lam[slot]):
                    f = f * _IRR[k]
        factors.append(f.coeffs)
    trace = 0
    for k, lam in asgn.items():
        pi = _IRR[k]
        d = pi.degree
        # trace of the companion block of pi^m is m * (second-highest coeff)
        coeff = pi.coeffs[d - 1] if d >= 1 else 0
        trace ^= (sum(lam) * coeff) % 2
    return ClassSignature(tuple(factors), trace)


def _assignment_code(asgn: Dict[int, Tuple[int, ...]]) -> int:
    """Expected nullity profile of the class, packed base 6."""
    code = 0
    for k, j in _PROFILE:
        lam = asgn.get(k, ())
        d = _IRR[k].degree
        nullity = d * sum(min(part, j) for part in lam)
        code = code * 6 + nullity
    return code


def _all_assignments() -> List[Dict[int, Tuple[int, ...]]]:
    out: List[Dict[int, Tuple[int, ...]]] = []

    def rec(idx: int, remaining: int, acc: Dict[int, Tuple[int, ...]]):
        if remaining == 0:
            out.append(dict(acc))
            return
        if idx == len(_IRR):
            return
        d = _IRR[idx].degree
        rec(idx + 1, remaining, acc)
        for w in range(1, remaining // d + 1):
            for lam in _partitions(w):
                acc[idx] = lam
                rec(idx + 1, remaining - w * d, acc)
            del acc[idx]

    rec(0, N, {})
    return out


class ClassTable:
    """All conjugacy-class signatures of M_5(F_2) with their profile codes."""

    def __init__(self):
        self.assignments = _all_assignments()
        self.signatures = [_assignment_signature(a) for a in self.assignments]
        self.codes = [_assignment_code(a) for a in self.assignments]
        self.by_code: Dict[int, int] = {}
        for i, c in enumerate(self.codes):
            if c in self.by_code:
                raise CheckFailure("audit: duplicate nullity profile code")
            self.by_code[c] = i

    def __len__(self) -> int:
        return len(self.signatures)

    def index_of_code(self, code: int) -> int:
        return self.by_code[code]

    def translate_index(self, i: int) -> int:
        """Index of the class of I + A given the class of A."""
        shift = Poly(F2, (1, 1))  # x + 1
        asgn = self.assignments[i]
        out: Dict[int, Tuple[int, ...]] = {}
        for k, lam in asgn.items():
            moved = (_IRR[k].compose(shift)).monic()
            out[_IRR.index(moved)] = lam
        return self.index_of_code(_assignment_code(out))

    def is_diagonalizable(self, i: int) -> bool:
        q = self.signatures[i].minpoly()
        return (Poly(F2, (0, 1, 1)) % q).is_zero()  # q divides x^2 + x

    def is_squarefree(self, i: int) -> bool:
        return all(sum(lam) <= 1 for lam in self.assignments[i].values())

    def splits(self, i: int) -> bool:
        return all(_IRR[k].degree == 1 for k in self.assignments[i])

    def centralizer_order(self, i: int) -> int:
        """Units of the centralizer algebra (order formula per irreducible)."""
        total = 1
        for k, lam in self.assignments[i].items():
            q = 2 ** _IRR[k].degree
            exp = sum(min(a, b) for a in lam for b in lam)
            factor = q**exp
            for part, mult in itertools.groupby(lam):
                m = len(list(mult))
                for t in range(1, m + 1):
                    factor = factor // q**t * (q**t - 1)
            total *= factor
        return total


# ---------------------------------------------------------------------------
# nullity-profile oracle (batched over packed keys)


def batch_codes(keys: np.ndarray) -> np.ndarray:
    """Nullity-profile code of every packed 5x5 matrix in the array."""
    ident = np.full(keys.shape, gf2.identity_key(N), dtype=np.uint32)
    powers = [ident, keys.astype(np.uint32)]
    for _ in range(2, N + 1):
        powers.append(gf2.batch_mul(powers[-1], powers[1], N))
    codes = np.zeros(keys.shape, dtype=np.int64)
    for k, j in _PROFILE:
        f = Poly.one(F2)
        for _ in range(j):
            f = f * _IRR[k]
        val = np.zeros(keys.shape, dtype=np.uint32)
        for deg, c in enumerate(f.coeffs):
            if c % 2:
                val ^= powers[deg]
        nullity = N - gf2.batch_rank(val, N)
        codes = codes * 6 + nullity.astype(np.int64)
    return codes


def signature_of(A: Mat) -> ClassSignature:
    """Invariant-factor signature of a single 5x5 matrix over F_2."""
    if A.rows != N or A.cols != N:
        raise ValueError("signature_of expects a 5x5 matrix")
    code = int(batch_codes(np.array([A.key()], dtype=np.uint32))[0])
    table = _shared_table()
    return table.signatures[table.index_of_code(code)]


_TABLE: Optional[ClassTable] = None


def _shared_table() -> ClassTable:
    global _TABLE
    if _TABLE is None:
        _TABLE = ClassTable()
    return _TABLE


# ---------------------------------------------------------------------------
# the audit


def _case_representatives() -> Tuple[Dict[str, Mat], Dict[str, Mat]]:
    jordan = {c["id"]: jordan_sum(R2, c["jordan"]) for c in JORDAN_CASES}
    other = {c["id"]: Mat.parse(R2, c["matrix"]) for c in OTHER_CASES}
    return jordan, other


def class_coverage_audit(
    samples: int = 1_000_000,
    seed: int = 20260825,
    heavy: bool = False,
    chunk: int = 1 << 19,
) -> dict:
    """Full class audit; raises CheckFailure on any mismatch, returns evidence."""
    table = _shared_table()
    ev: dict = {"classes": len(table)}

    # round trip: the profile code computed from each representative matrix
    # must equal the code predicted from its partition data
    rep_keys = np.array(
        [sig.representative().key() for sig in table.signatures], dtype=np.uint32
    )
    got = batch_codes(rep_keys)
    for i, code in enumerate(table.codes):
        if int(got[i]) != code:
            raise CheckFailure(f"audit: representative {i} profile mismatch")

    # translation A <-> I+A is a trace-flipping involution on signatures
    zero_trace = []
    for i in range(len(table)):
        j = table.translate_index(i)
        if table.translate_index(j) != i:
            raise CheckFailure("audit: translation is not an involution")
        ti, tj = table.signatures[i].trace, table.signatures[j].trace
        if (i == j) or {ti, tj} != {0, 1}:
            raise CheckFailure("audit: translation does not flip the trace")
        if ti == 0:
            zero_trace.append(i)
    if 2 * len(zero_trace) != len(table):
        raise CheckFailure("audit: trace-zero classes are not half of all classes")
    ev["zero_trace_classes"] = len(zero_trace)

    # partition the trace-zero classes into the four case families
    jordan_reps, other_reps = _case_representatives()
    jordan_codes = {
        int(batch_codes(np.array([m.key()], dtype=np.uint32))[0]): cid
        for cid, m in jordan_reps.items()
    }
    j5 = jordan_sum(R2, [(5, 0)])
    jordan_codes[int(batch_codes(np.array([j5.key()], dtype=np.uint32))[0])] = "jordan-i"
    other_codes = {
        int(batch_codes(np.array([m.key()], dtype=np.uint32))[0]): cid
        for cid, m in other_reps.items()
    }
    buckets = {"diagonalizable": [], "squarefree": [], "jordan": [], "other": []}
    for i in zero_trace:
        code = table.codes[i]
        if table.is_diagonalizable(i):
            buckets["diagonalizable"].append(i)
            if code in jordan_codes or code in other_codes:
                raise CheckFailure("audit: case families overlap")
        elif code in jordan_codes:
            if not table.splits(i) or table.is_diagonalizable(i):
                raise CheckFailure("audit: catalog matrix in the wrong family")
            buckets["jordan"].append(i)
        elif code in other_codes:
            if table.splits(i) or table.is_squarefree(i):
                raise CheckFailure("audit: catalog matrix in the wrong family")
            buckets["other"].append(i)
        elif table.is_squarefree(i):
            buckets["squarefree"].append(i)
        else:
            raise CheckFailure(
                f"audit: trace-zero class {table.signatures[i].factors} uncovered"
            )
    if len(buckets["diagonalizable"]) != 3:
        raise CheckFailure("audit: expected exactly 3 trace-zero diagonalizable classes")
    if len(buckets["jordan"]) != len(jordan_codes):
        raise CheckFailure("audit: split non-diagonalizable classes != catalog cases")
    if len(buckets["other"]) != len(other_codes):
        raise CheckFailure("audit: non-split classes != catalog cases")
    ev["family_sizes"] = {k: len(v) for k, v in buckets.items()}

    # each catalog case's stated (p_A, q_A) matches its signature
    for case in OTHER_CASES:
        sig = signature_of(Mat.parse(R2, case["matrix"]))
        if sig.charpoly().coeffs != tuple(case["charpoly"]):
            raise CheckFailure(f"audit: {case['id']} characteristic polynomial")
        if sig.minpoly().coeffs != tuple(case["minpoly"]):
            raise CheckFailure(f"audit: {case['id']} minimal polynomial")
    for case in JORDAN_CASES:
        sig = signature_of(jordan_sum(R2, case["jordan"]))
        mult = {0: [0, 0], 1: [0, 0]}  # eigenvalue -> [char mult, min mult]
        for size, eig in case["jordan"]:
            mult[eig][0] += size
            mult[eig][1] = max(mult[eig][1], size)
        x, x1 = Poly(F2, (0, 1)), Poly(F2, (1, 1))
        want_p, want_q = Poly.one(F2), Poly.one(F2)
        for eig, pi in ((0, x), (1, x1)):
            for _ in range(mult[eig][0]):
                want_p = want_p * pi
            for _ in range(mult[eig][1]):
                want_q = want_q * pi
        if sig.charpoly() != want_p or sig.minpoly() != want_q:
            raise CheckFailure(f"audit: {case['id']} polynomial data")

    # sampling oracle: every sampled profile appears in the constructed list
    rng = np.random.default_rng(seed)
    seen_codes: set = set()
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        keys = rng.integers(0, 1 << (N * N), size=size, dtype=np.uint32)
        codes = batch_codes(keys)
        for c in np.unique(codes):
            ci = int(c)
            if ci not in table.by_code:
                raise CheckFailure("audit: sampled matrix with unknown signature")
            seen_codes.add(ci)
        done += size
    ev["samples"] = samples
    ev["sampled_signatures"] = len(seen_codes)

    if heavy:
        counts: Dict[int, int] = {}
        for start in range(0, 1 << (N * N), chunk):
            keys = np.arange(start, start + chunk, dtype=np.uint32)
            codes = batch_codes(keys)
            vals, cnt = np.unique(codes, return_counts=True)
            for v, c in zip(vals, cnt):
                counts[int(v)] = counts.get(int(v), 0) + int(c)
        if set(counts) != set(table.by_code):
            raise CheckFailure("audit: census signatures differ from construction")
        for code, count in counts.items():
            i = table.index_of_code(code)
            expected = _GL5_ORDER // table.centralizer_order(i)
            if count != expected:
                raise CheckFailure(
                    f"audit: class size {count} != orbit formula {expected}"
                )
        ev["census_classes"] = len(counts)
        ev["census_total"] = sum(counts.values())
    return ev


__all__ = [
    "ClassSignature",
    "ClassTable",
    "batch_codes",
    "class_coverage_audit",
    "companion",
    "irreducible_polys",
    "signature_of",
]
