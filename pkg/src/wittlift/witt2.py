"""The ring W2(F_q) of p-typical length-2 Witt vectors.

Elements are pairs (a, b) over the residue field with

    (a1,b1) + (a2,b2) = (a1+a2, b1+b2 - Phi(a1,a2))
    (a1,b1) * (a2,b2) = (a1*a2, a1^p*b2 + a2^p*b1)

where Phi(x,y) = ((x+y)^p - x^p - y^p)/p.  Phi must be expanded over the
integers first (dividing by p in characteristic p is meaningless), so it is
evaluated from the precomputed coefficients binom(p,i)/p mod p.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, List, Tuple

from .errors import FieldMismatch, NonUnit, NotPrimeField
from .gfq import FieldDesc, FqElem


class PhiData:
    """Coefficients of Phi(x,y) = sum_i c[i-1] x^i y^(p-i), c[i-1] = binom(p,i)/p mod p."""

    def __init__(self, p: int):
        self.p = p
        self.coeffs = tuple((comb(p, i) // p) % p for i in range(1, p))


@lru_cache(maxsize=None)
def _phi(p: int) -> PhiData:
    return PhiData(p)


def _phi_eval(f: FieldDesc, x: int, y: int) -> int:
    p = f.p
    acc = 0
    for i, c in enumerate(_phi(p).coeffs, start=1):
        if c:
            term = f.mul(f.pow(x, i), f.pow(y, p - i))
            # c is a prime-subfield scalar; its encoding is the integer itself
            acc = f.add(acc, f.mul(c, term))
    return acc


class W2Elem:
    """Witt vector (a, b); a and b are int-encoded elements of the field."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: FieldDesc, a: int, b: int):
        self.field = field
        self.a = a
        self.b = b

    def _coerce(self, other: "W2Elem") -> "W2Elem":
        if not isinstance(other, W2Elem):
            raise TypeError(f"cannot combine W2Elem with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other: "W2Elem") -> "W2Elem":
        return w2_add(self, self._coerce(other))

    def __mul__(self, other: "W2Elem") -> "W2Elem":
        return w2_mul(self, self._coerce(other))

    def __sub__(self, other: "W2Elem") -> "W2Elem":
        return w2_add(self, w2_neg(self._coerce(other)))

    def __neg__(self) -> "W2Elem":
        return w2_neg(self)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, W2Elem)
            and other.field == self.field
            and (other.a, other.b) == (self.a, self.b)
        )

    def __hash__(self) -> int:
        return hash((self.field, self.a, self.b))

    def __repr__(self) -> str:
        return f"({self.a},{self.b})"


def w2_add(u: W2Elem, v: W2Elem) -> W2Elem:
    f = u.field
    if v.field != f:
        raise FieldMismatch(f"{f} vs {v.field}")
    return W2Elem(f, f.add(u.a, v.a), f.sub(f.add(u.b, v.b), _phi_eval(f, u.a, v.a)))


def w2_mul(u: W2Elem, v: W2Elem) -> W2Elem:
    f = u.field
    if v.field != f:
        raise FieldMismatch(f"{f} vs {v.field}")
    return W2Elem(f, f.mul(u.a, v.a), f.add(f.mul(f.frob(u.a), v.b), f.mul(f.frob(v.a), u.b)))


def w2_neg(u: W2Elem) -> W2Elem:
    # -(a,b) = (-a, -b + Phi(a,-a)); for p=2 Phi(a,a)=a^2, for odd p Phi(a,-a)=0
    f = u.field
    na = f.neg(u.a)
    return W2Elem(f, na, f.add(f.neg(u.b), _phi_eval(f, u.a, na)))


def w2_inv(u: W2Elem) -> W2Elem:
    """Inverse of a unit: (a,b)^-1 = (a^-1, -b * a^(-2p))."""
    f = u.field
    if u.a == 0:
        raise NonUnit("not a unit in W2 (reduction is zero)")
    ai = f.inv(u.a)
    return W2Elem(f, ai, f.neg(f.mul(u.b, f.pow(ai, 2 * f.p))))


def w2_zero(field: FieldDesc) -> W2Elem:
    return W2Elem(field, 0, 0)


def w2_one(field: FieldDesc) -> W2Elem:
    return W2Elem(field, 1, 0)


def teichmuller(x: FqElem) -> W2Elem:
    return W2Elem(x.field, x.val, 0)


def iota(b: FqElem) -> W2Elem:
    return W2Elem(b.field, 0, b.val)


def pi(u: W2Elem) -> FqElem:
    return FqElem(u.field, u.a)


def enumerate_w2(field: FieldDesc) -> List[W2Elem]:
    return [W2Elem(field, a, b) for a in range(field.q) for b in range(field.q)]


@lru_cache(maxsize=None)
def _zp2_table(field: FieldDesc) -> Tuple[Dict[int, W2Elem], Dict[Tuple[int, int], int]]:
    if field.m != 1:
        raise NotPrimeField("bridge defined only over a prime field")
    p = field.p
    to: Dict[int, W2Elem] = {}
    cur = w2_zero(field)
    one = w2_one(field)
    for r in range(p * p):
        to[r] = cur
        cur = w2_add(cur, one)
    assert cur == w2_zero(field), "additive order of 1 must be p^2"
    frm = {(u.a, u.b): r for r, u in to.items()}
    assert len(frm) == p * p, "bridge must be a bijection"
    return to, frm


def zp2_to_w2(field: FieldDesc, r: int) -> W2Elem:
    """Canonical ring isomorphism Z/p^2 -> W2(F_p) with 1 -> (1,0)."""
    to, _ = _zp2_table(field)
    return to[r % (field.p**2)]


def w2_to_zp2(u: W2Elem) -> int:
    _, frm = _zp2_table(u.field)
    return frm[(u.a, u.b)]


def zp2_bridge(direction: str, field: FieldDesc, value):
    if direction == "to":
        return zp2_to_w2(field, value)
    if direction == "from":
        return w2_to_zp2(value)
    raise ValueError(f"unknown direction {direction!r}")


__all__ = [
    "PhiData",
    "W2Elem",
    "w2_add",
    "w2_mul",
    "w2_neg",
    "w2_inv",
    "w2_zero",
    "w2_one",
    "teichmuller",
    "iota",
    "pi",
    "enumerate_w2",
    "zp2_bridge",
    "zp2_to_w2",
    "w2_to_zp2",
]
