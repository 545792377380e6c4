"""Coefficient-ring descriptors for exact matrices.

Four rings are supported: F_q (entries = int encodings), W2(F_q) (entries =
(a, b) int pairs), Z/N (canonical residues) and Z (plain integers).  A ring
descriptor knows how to do entry arithmetic, decide unit-ness, and serialize
entries for the matrix text format.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from .errors import NonUnit, Singular
from .gfq import FieldDesc
from . import witt2


class Ring:
    zero = 0
    one = 1

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        raise NotImplementedError

    def is_unit(self, x) -> bool:
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    # number of bits needed to pack one entry, or None if unbounded
    entry_bits: Optional[int] = None

    def pack(self, x) -> int:
        raise NotImplementedError

    def text(self, x) -> str:
        return str(x)

    def parse(self, s: str):
        raise NotImplementedError


class FqRing(Ring):
    def __init__(self, field: FieldDesc):
        self.field = field
        self.entry_bits = max(1, (field.q - 1).bit_length())

    def add(self, x, y):
        return self.field.add(x, y)

    def neg(self, x):
        return self.field.neg(x)

    def sub(self, x, y):
        return self.field.sub(x, y)

    def mul(self, x, y):
        return self.field.mul(x, y)

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x):
        if x == 0:
            raise NonUnit("zero is not a unit")
        return self.field.inv(x)

    def pack(self, x) -> int:
        return x

    def parse(self, s: str):
        # accept plain integers or polynomial-basis terms like "x^2+x+1"
        s = s.strip()
        out = 0
        for term in s.split("+"):
            term = term.strip()
            if "x" not in term:
                out = self.field.add(out, int(term) % self.field.p)
                continue
            coef, _, rest = term.partition("x")
            c = int(coef.rstrip("*")) if coef.strip() else 1
            e = int(rest.lstrip("^")) if rest.strip() else 1
            xe = 1
            for _ in range(e):
                xe = self.field.mul(xe, self.field.p)
            out = self.field.add(out, self.field.mul(c % self.field.p, xe))
        return out

    def __repr__(self):
        return f"FqRing({self.field!r})"


class W2Ring(Ring):
    zero = (0, 0)
    one = (1, 0)

    def __init__(self, field: FieldDesc):
        self.field = field
        self.entry_bits = 2 * max(1, (field.q - 1).bit_length())

    def _w(self, x) -> witt2.W2Elem:
        return witt2.W2Elem(self.field, x[0], x[1])

    def add(self, x, y):
        u = witt2.w2_add(self._w(x), self._w(y))
        return (u.a, u.b)

    def neg(self, x):
        u = witt2.w2_neg(self._w(x))
        return (u.a, u.b)

    def mul(self, x, y):
        u = witt2.w2_mul(self._w(x), self._w(y))
        return (u.a, u.b)

    def is_unit(self, x) -> bool:
        return x[0] != 0

    def inv(self, x):
        u = witt2.w2_inv(self._w(x))
        return (u.a, u.b)

    def pack(self, x) -> int:
        return x[0] * self.field.q + x[1]

    def text(self, x) -> str:
        return f"({x[0]},{x[1]})"

    def parse(self, s: str):
        s = s.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"bad W2 entry {s!r}")
        a, b = s[1:-1].split("|") if "|" in s else s[1:-1].split(",")
        return (int(a) % self.field.q, int(b) % self.field.q)

    def __repr__(self):
        return f"W2Ring({self.field!r})"


class IntModRing(Ring):
    def __init__(self, n: int):
        self.n = n
        self.entry_bits = max(1, (n - 1).bit_length())

    def add(self, x, y):
        return (x + y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def is_unit(self, x) -> bool:
        from math import gcd

        return gcd(x, self.n) == 1

    def inv(self, x):
        try:
            return pow(x, -1, self.n)
        except ValueError:
            raise NonUnit(f"{x} not a unit mod {self.n}")

    def pack(self, x) -> int:
        return x

    def parse(self, s: str):
        return int(s) % self.n

    def __repr__(self):
        return f"Z/{self.n}"


class IntRing(Ring):
    entry_bits = None

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inv(self, x):
        if x not in (1, -1):
            raise NonUnit(f"{x} not a unit in Z")
        return x

    def parse(self, s: str):
        return int(s)

    def __repr__(self):
        return "Z"


@lru_cache(maxsize=None)
def fq_ring(field: FieldDesc) -> FqRing:
    return FqRing(field)


@lru_cache(maxsize=None)
def w2_ring(field: FieldDesc) -> W2Ring:
    return W2Ring(field)


@lru_cache(maxsize=None)
def zmod_ring(n: int) -> IntModRing:
    return IntModRing(n)


_INT_RING = IntRing()


def int_ring() -> IntRing:
    return _INT_RING


__all__ = [
    "Ring",
    "FqRing",
    "W2Ring",
    "IntModRing",
    "IntRing",
    "fq_ring",
    "w2_ring",
    "zmod_ring",
    "int_ring",
]
