import numpy as np
import pytest

from wittlift.audit import (
    ClassSignature,
    batch_codes,
    class_coverage_audit,
    companion,
    irreducible_polys,
    signature_of,
)
from wittlift.fixtures import R2, jordan_sum
from wittlift.gfq import Poly, fq_make
from wittlift.linalg import Mat, char_min_poly

F2 = fq_make(2, 1)


def test_irreducible_counts_by_degree():
    counts = {}
    for f in irreducible_polys():
        counts[f.degree] = counts.get(f.degree, 0) + 1
    assert counts == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6}


def test_companion_matches_charpoly():
    f = Poly(F2, (1, 1, 0, 1))  # x^3 + x + 1
    C = companion(f)
    p, q = char_min_poly(C)
    assert p == f and q == f


def test_signature_round_trip_samples():
    rng = np.random.default_rng(3)
    keys = rng.integers(0, 1 << 25, size=500, dtype=np.uint32)
    codes = batch_codes(keys)
    for key, code in zip(keys, codes):
        A = Mat(R2, 5, 5, [(int(key) >> (24 - t)) & 1 for t in range(25)])
        sig = signature_of(A)
        p, q = char_min_poly(A)
        assert sig.charpoly() == p
        assert sig.minpoly() == q
        assert signature_of(sig.representative()) == sig


def test_signature_distinguishes_same_char_min():
    # x^4 * (x+1) with minimal polynomial x^2 * (x+1): two distinct classes
    a = jordan_sum(R2, [(2, 0), (2, 0), (1, 1)])
    b = jordan_sum(R2, [(2, 0), (1, 0), (1, 0), (1, 1)])
    pa, qa = char_min_poly(a)
    pb, qb = char_min_poly(b)
    assert (pa, qa) == (pb, qb)
    assert signature_of(a) != signature_of(b)


def test_class_signature_validation():
    with pytest.raises(ValueError):
        ClassSignature(((0, 1),), 0)  # degree sum 1
    with pytest.raises(ValueError):
        ClassSignature(((1, 1), (0, 0, 0, 1)), 0)  # not a divisibility chain


def test_audit_small_sample():
    ev = class_coverage_audit(samples=50_000, seed=5)
    assert ev["classes"] == 74
    assert ev["zero_trace_classes"] == 37
    assert ev["family_sizes"] == {
        "diagonalizable": 3,
        "squarefree": 8,
        "jordan": 15,
        "other": 11,
    }
