"""Exact arithmetic in small finite fields F_{p^m} and polynomials over them.

Elements are encoded as integers in [0, p^m): the base-p digits are the
polynomial-basis coordinates, constant digit least significant.  All field
operations go through precomputed tables, so they are cheap enough to use
inside exhaustive loops.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
    UnsupportedSize,
    ZeroPolynomial,
)

MAX_FIELD_SIZE = 16

# fixed models for the extension fields used anywhere in the test corpus
_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),  # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),  # x^3 + x + 1
    (3, 2): (1, 0, 1),  # x^2 + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# mod-p coefficient vectors (used only while building field tables)


def _vec_trim(v: List[int]) -> List[int]:
    while v and v[-1] == 0:
        v.pop()
    return v


def _vec_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _vec_trim(out)


def _vec_mod(a: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * c) % p
        _vec_trim(a)
        if not a:
            break
    return a


def _enc(v: Sequence[int], p: int) -> int:
    out = 0
    for c in reversed(v):
        out = out * p + c
    return out


def _dec(e: int, p: int, m: int) -> List[int]:
    out = []
    for _ in range(m):
        out.append(e % p)
        e //= p
    return out


class FieldDesc:
    """Descriptor of F_{p^m}: modulus plus lazily built operation tables."""

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # monic, constant term first, length m+1
        self._tables_built = False

    # table construction -----------------------------------------------------

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        mod = self.modulus
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        neg = [0] * q
        for x in range(q):
            vx = _dec(x, p, m)
            neg[x] = _enc([(-c) % p for c in vx], p)
            for y in range(x, q):
                vy = _dec(y, p, m)
                s = _enc([(a + b) % p for a, b in zip(vx, vy)], p)
                add[x][y] = add[y][x] = s
                pr = _enc(_vec_mod(_vec_mul(vx, vy, p), mod, p), p)
                mul[x][y] = mul[y][x] = pr
        inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    inv[x] = y
                    break
            else:
                raise ReducibleModulus(f"no inverse for element {x}; modulus not irreducible")
        frob = [mul[x][x] for x in range(q)]
        for _ in range(2, p):  # x^p, not x^2, when p > 2
            frob = [mul[frob[x]][x] for x in range(q)]
        self.add_t, self.mul_t, self.neg_t, self.inv_t, self.frob_t = add, mul, neg, inv, frob
        self._tables_built = True

    def _ensure(self) -> None:
        if not self._tables_built:
            self._build_tables()

    # raw int-encoded ops ----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        self._ensure()
        return self.add_t[x][y]

    def sub(self, x: int, y: int) -> int:
        self._ensure()
        return self.add_t[x][self.neg_t[y]]

    def mul(self, x: int, y: int) -> int:
        self._ensure()
        return self.mul_t[x][y]

    def neg(self, x: int) -> int:
        self._ensure()
        return self.neg_t[x]

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        self._ensure()
        return self.inv_t[x]

    def frob(self, x: int) -> int:
        self._ensure()
        return self.frob_t[x]

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            e >>= 1
        return out

    def elem(self, val: int) -> "FqElem":
        return FqElem(self, val % self.q)

    def __repr__(self) -> str:
        return f"F_{self.p}^{self.m}" if self.m > 1 else f"F_{self.p}"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldDesc)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))


class FqElem:
    """Field element; thin wrapper over the int encoding."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldDesc, val: int):
        self.field = field
        self.val = val

    @property
    def coeffs(self) -> List[int]:
        return _dec(self.val, self.field.p, self.field.m)

    def _coerce(self, other: "FqElem") -> int:
        if not isinstance(other, FqElem):
            raise TypeError(f"cannot combine FqElem with {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other.val

    def __add__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.field, self.field.add(self.val, self._coerce(other)))

    def __sub__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.field, self.field.sub(self.val, self._coerce(other)))

    def __mul__(self, other: "FqElem") -> "FqElem":
        return FqElem(self.field, self.field.mul(self.val, self._coerce(other)))

    def __neg__(self) -> "FqElem":
        return FqElem(self.field, self.field.neg(self.val))

    def inv(self) -> "FqElem":
        return FqElem(self.field, self.field.inv(self.val))

    def __pow__(self, e: int) -> "FqElem":
        return FqElem(self.field, self.field.pow(self.val, e))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FqElem) and other.field == self.field and other.val == self.val
        )

    def __hash__(self) -> int:
        return hash((self.field, self.val))

    def __repr__(self) -> str:
        return f"{self.val}:{self.field!r}"


@lru_cache(maxsize=None)
def _fq_make_cached(p: int, m: int, modulus: Tuple[int, ...]) -> FieldDesc:
    fld = FieldDesc(p, m, modulus)
    fld._ensure()  # forces the inverse-table scan, which proves irreducibility
    return fld


def fq_make(
    p: int, m: int, modulus: Optional[Sequence[int]] = None, max_size: int = MAX_FIELD_SIZE
) -> FieldDesc:
    """Build (and cache) a field descriptor, validating the modulus."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise UnsupportedSize("m must be >= 1")
    if p**m > max_size:
        raise UnsupportedSize(f"p^m = {p ** m} exceeds bound {max_size}")
    if modulus is None:
        if m == 1:
            mod = (0, 1)  # x
        else:
            mod = _BUILTIN_MODULI.get((p, m))
            if mod is None:
                raise UnsupportedSize(f"no built-in modulus for p={p}, m={m}")
    else:
        mod = tuple(c % p for c in modulus)
    if len(mod) != m + 1 or mod[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {m}")
    if m > 1 and _has_nontrivial_factor(mod, p):
        raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    return _fq_make_cached(p, m, mod)


def _has_nontrivial_factor(mod: Tuple[int, ...], p: int) -> bool:
    # trial division by all monic polynomials of degree <= deg/2
    deg = len(mod) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cand = _dec(code, p, d) + [1]
            if not _vec_mod(mod, cand, p):
                return True
    return False


def frobenius(x: FqElem) -> FqElem:
    return FqElem(x.field, x.field.frob(x.val))


def enumerate_field(F: FieldDesc, max_size: int = MAX_FIELD_SIZE) -> List[FqElem]:
    if F.q > max_size:
        raise UnsupportedSize(f"field of size {F.q} beyond bound {max_size}")
    return [FqElem(F, v) for v in range(F.q)]


# ---------------------------------------------------------------------------
# polynomials over a field


class Poly:
    """Univariate polynomial; coeffs int-encoded field elements, constant first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs: Sequence[int]):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field: FieldDesc) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldDesc) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldDesc) -> "Poly":
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial -> -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return Poly.zero(f), self
        quo = [0] * (len(rem) - db)
        lead_inv = f.inv(other.coeffs[-1])
        for k in range(len(rem) - 1, db - 1, -1):
            c = f.mul(rem[k], lead_inv)
            if c:
                quo[k - db] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b))
        return Poly(f, quo), Poly(f, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __call__(self, x: int) -> int:
        # evaluate at an int-encoded field element (Horner)
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        f = self.field
        acc = Poly.zero(f)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(f, (c,))
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if c == 1 else f"{c}*{xs}")
        return " + ".join(reversed(parts))


def enumerate_monic(field: FieldDesc, degree: int) -> Iterator[Poly]:
    """All monic polynomials of the given degree, in encoding order."""
    q = field.q
    for code in range(q**degree):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % q)
            c //= q
        yield Poly(field, coeffs + [1])


@lru_cache(maxsize=None)
def _irreducibles(field: FieldDesc, degree: int) -> Tuple[Poly, ...]:
    out = []
    for f in enumerate_monic(field, degree):
        if all(
            not (f % g).is_zero()
            for d in range(1, degree // 2 + 1)
            for g in _irreducibles(field, d)
        ):
            out.append(f)
    return tuple(out)


def poly_is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    g = f.monic()
    return g in _irreducibles(f.field, f.degree)


def poly_factor(f: Poly, max_degree: int = 8) -> List[Tuple[Poly, int]]:
    """Factor a monic polynomial into (irreducible, multiplicity) pairs.

    Pairs are sorted by (degree, coefficient encoding) of the factor.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise DegreeTooLarge(f"degree {f.degree} > {max_degree}")
    if not f.is_monic():
        f = f.monic()
    out: List[Tuple[Poly, int]] = []
    rem = f
    d = 1
    while rem.degree >= 1 and d <= rem.degree:
        for g in _irreducibles(f.field, d):
            mult = 0
            while True:
                quo, r = divmod(rem, g)
                if not r.is_zero():
                    break
                rem = quo
                mult += 1
            if mult:
                out.append((g, mult))
            if rem.degree < d:
                break
        d += 1
    assert rem.degree == 0, "trial division must exhaust the polynomial"
    return out


__all__ = [
    "FieldDesc",
    "FqElem",
    "Poly",
    "fq_make",
    "frobenius",
    "enumerate_field",
    "enumerate_monic",
    "poly_factor",
    "poly_is_irreducible",
    "MAX_FIELD_SIZE",
]
