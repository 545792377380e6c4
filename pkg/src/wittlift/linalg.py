"""Exact dense matrices over F_q, W2(F_q), Z/N, Z.

Provides ring-generic arithmetic, inverses (with the nilpotent-kernel
correction trick over W2 and Z/p^2), affine linear solving over fields,
characteristic/minimal polynomials, Frobenius (rational) and Jordan canonical
forms via polynomial Smith normal form, and conjugacy testing.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import (
    NotSplit,
    RingMismatch,
    ShapeMismatch,
    Singular,
)
from .gfq import FieldDesc, Poly, poly_factor
from .rings import FqRing, IntModRing, IntRing, Ring, W2Ring, fq_ring, w2_ring, zmod_ring


class Mat:
    """Immutable dense matrix; entries row-major in the ring's value encoding."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} needs {rows * cols} entries")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    # constructors -----------------------------------------------------------

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [x for row in rows for x in row]
        return cls(ring, r, c, flat)

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Mat":
        e = [ring.zero] * (n * n)
        for i in range(n):
            e[i * n + i] = ring.one
        return cls(ring, n, n, e)

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: Optional[int] = None) -> "Mat":
        c = rows if cols is None else cols
        return cls(ring, rows, c, [ring.zero] * (rows * c))

    @classmethod
    def unit(cls, ring: Ring, n: int, i: int, j: int, value=None) -> "Mat":
        """E_ij (1-indexed), optionally scaled."""
        e = [ring.zero] * (n * n)
        e[(i - 1) * n + (j - 1)] = ring.one if value is None else value
        return cls(ring, n, n, e)

    @classmethod
    def parse(cls, ring: Ring, text: str) -> "Mat":
        def split_entries(row: str):
            # split on commas not nested in parentheses ("(a,b)" Witt pairs)
            out, depth, cur = [], 0, []
            for ch in row:
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                if ch == "," and depth == 0:
                    out.append("".join(cur))
                    cur = []
                else:
                    cur.append(ch)
            out.append("".join(cur))
            return out

        rows = [
            [ring.parse(entry) for entry in split_entries(row)]
            for row in text.strip().split(";")
        ]
        return cls.from_rows(ring, rows)

    # accessors --------------------------------------------------------------

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def text(self) -> str:
        return ";".join(
            ",".join(self.ring.text(self[i, j]) for j in range(self.cols))
            for i in range(self.rows)
        )

    def __repr__(self) -> str:
        return f"Mat[{self.text()}]"

    # equality / hashing -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and other.ring is self.ring
            and (other.rows, other.cols) == (self.rows, self.cols)
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.rows, self.cols, self.entries))

    def key(self):
        """Canonical encoding: packed int when entries are bounded, else tuple."""
        bits = self.ring.entry_bits
        if bits is None:
            return self.entries
        out = 0
        for x in self.entries:
            out = (out << bits) | self.ring.pack(x)
        return out

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Mat", same_shape: bool) -> None:
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        if same_shape and (other.rows, other.cols) != (self.rows, self.cols):
            raise ShapeMismatch("shape mismatch in addition")
        if not same_shape and self.cols != other.rows:
            raise ShapeMismatch("inner dimensions disagree")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other, True)
        rg = self.ring
        return Mat(
            self.ring,
            self.rows,
            self.cols,
            [rg.add(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other, True)
        rg = self.ring
        return Mat(
            self.ring,
            self.rows,
            self.cols,
            [rg.sub(a, b) for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> "Mat":
        rg = self.ring
        return Mat(self.ring, self.rows, self.cols, [rg.neg(a) for a in self.entries])

    def scale(self, c) -> "Mat":
        rg = self.ring
        return Mat(self.ring, self.rows, self.cols, [rg.mul(c, a) for a in self.entries])

    def __mul__(self, other: "Mat") -> "Mat":
        self._check(other, False)
        rg = self.ring
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = rg.zero
                for t in range(k):
                    x = arow[t]
                    if x != rg.zero:
                        acc = rg.add(acc, rg.mul(x, b[t * m + j]))
                out.append(acc)
        return Mat(self.ring, n, m, out)

    def __pow__(self, e: int) -> "Mat":
        if self.rows != self.cols:
            raise ShapeMismatch("power of non-square matrix")
        base = self if e >= 0 else mat_inv(self)
        e = abs(e)
        out = Mat.identity(self.ring, self.rows)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def transpose(self) -> "Mat":
        return Mat(
            self.ring,
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self):
        rg = self.ring
        acc = rg.zero
        for i in range(self.rows):
            acc = rg.add(acc, self[i, i])
        return acc

    def is_zero(self) -> bool:
        return all(x == self.ring.zero for x in self.entries)

    def is_identity(self) -> bool:
        return self == Mat.identity(self.ring, self.rows)

    def is_upper_triangular(self, unipotent: bool = False) -> bool:
        for i in range(self.rows):
            for j in range(i):
                if self[i, j] != self.ring.zero:
                    return False
            if unipotent and self[i, i] != self.ring.one:
                return False
        return True

    def map_entries(self, ring: Ring, fn: Callable) -> "Mat":
        return Mat(ring, self.rows, self.cols, [fn(x) for x in self.entries])

    def commutator(self, other: "Mat") -> "Mat":
        return self * other * mat_inv(self) * mat_inv(other)


def mat_ring_ops(op: str, *operands):
    if op == "add":
        return operands[0] + operands[1]
    if op == "mul":
        return operands[0] * operands[1]
    if op == "neg":
        return -operands[0]
    if op == "scalar":
        return operands[1].scale(operands[0])
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# ring crossings


def w2_reduce(A: Mat) -> Mat:
    """Reduction GL_n(W2(k)) -> GL_n(k), entrywise pi."""
    if not isinstance(A.ring, W2Ring):
        raise RingMismatch("expected a W2 matrix")
    return A.map_entries(fq_ring(A.ring.field), lambda x: x[0])


def teich_lift(A: Mat) -> Mat:
    """Entrywise Teichmuller lift GL_n(k) -> GL_n(W2(k))."""
    if not isinstance(A.ring, FqRing):
        raise RingMismatch("expected a field matrix")
    return A.map_entries(w2_ring(A.ring.field), lambda x: (x, 0))


def iota_embed(M: Mat) -> Mat:
    """M_n(k) -> ker(pi), M -> I + iota(M)."""
    if not isinstance(M.ring, FqRing):
        raise RingMismatch("expected a field matrix")
    wr = w2_ring(M.ring.field)
    return Mat.identity(wr, M.rows) + M.map_entries(wr, lambda x: (0, x))


def iota_extract(U: Mat) -> Mat:
    """Inverse of iota_embed on the kernel; raises if U is not I + iota(M)."""
    from .errors import KernelEscape

    if not isinstance(U.ring, W2Ring):
        raise RingMismatch("expected a W2 matrix")
    fr = fq_ring(U.ring.field)
    if not w2_reduce(U).is_identity():
        raise KernelEscape("matrix does not reduce to the identity")
    out = U.map_entries(fr, lambda x: x[1])
    # the b-part of the diagonal already contains the whole deviation from I
    return out


def zmod_reduce(A: Mat, m: int) -> Mat:
    if not isinstance(A.ring, IntModRing):
        raise RingMismatch("expected a Z/N matrix")
    return A.map_entries(zmod_ring(m), lambda x: x % m)


def int_to_zmod(A: Mat, n: int) -> Mat:
    return A.map_entries(zmod_ring(n), lambda x: x % n)


def frobenius_twist(A: Mat) -> Mat:
    if not isinstance(A.ring, FqRing):
        raise RingMismatch("Frobenius twist needs a field matrix")
    f = A.ring.field
    return A.map_entries(A.ring, f.frob)


# ---------------------------------------------------------------------------
# inverses


def _gauss_inv(A: Mat) -> Mat:
    """Inverse over a ring where every nonzero element is a unit (F_q, Z/p)."""
    rg = A.ring
    n = A.rows
    work = [list(A.row(i)) + [rg.one if j == i else rg.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != rg.zero), None)
        if piv is None:
            raise Singular("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = rg.inv(work[col][col])
        work[col] = [rg.mul(inv, x) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != rg.zero:
                c = work[r][col]
                work[r] = [rg.sub(x, rg.mul(c, y)) for x, y in zip(work[r], work[col])]
    return Mat.from_rows(rg, [row[n:] for row in work])


def _lift_correct_inv(A: Mat, reduce_fn, lift_fn) -> Mat:
    """Invert by lifting the inverse of the reduction and one Newton step.

    Valid when the kernel ideal of the reduction squares to zero: with
    B0 = lift(reduce(A)^-1), B = B0(2I - A B0) satisfies AB = I exactly.
    """
    rg = A.ring
    n = A.rows
    B0 = lift_fn(_gauss_inv(reduce_fn(A)))
    two_i = Mat.identity(rg, n) + Mat.identity(rg, n)
    B = B0 * (two_i - A * B0)
    if not (A * B).is_identity() or not (B * A).is_identity():
        raise Singular("correction step failed; matrix not invertible")
    return B


def det_int(A: Mat) -> int:
    """Exact determinant over Z (fraction-free Bareiss elimination)."""
    n = A.rows
    m = [list(A.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _adjugate(A: Mat) -> Mat:
    rg = A.ring
    n = A.rows

    def minor_det(rows: List[int], cols: List[int]):
        if not rows:
            return rg.one
        acc = rg.zero
        r0 = rows[0]
        for idx, c in enumerate(cols):
            x = A[r0, c]
            if x != rg.zero:
                sub = minor_det(rows[1:], cols[:idx] + cols[idx + 1 :])
                term = rg.mul(x, sub)
                acc = rg.add(acc, term) if idx % 2 == 0 else rg.sub(acc, term)
        return acc

    all_idx = list(range(n))
    cof = [
        [
            minor_det([r for r in all_idx if r != i], [c for c in all_idx if c != j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    # adjugate = transposed cofactor matrix with checkerboard signs
    ent = []
    for i in range(n):
        for j in range(n):
            v = cof[j][i]
            ent.append(v if (i + j) % 2 == 0 else rg.neg(v))
    return Mat(rg, n, n, ent)


def mat_inv(A: Mat) -> Mat:
    if A.rows != A.cols:
        raise ShapeMismatch("inverse of non-square matrix")
    rg = A.ring
    if isinstance(rg, FqRing):
        return _gauss_inv(A)
    if isinstance(rg, W2Ring):
        return _lift_correct_inv(A, w2_reduce, teich_lift)
    if isinstance(rg, IntModRing):
        n = rg.n
        root = _prime_square_root(n)
        if _is_prime(n):
            return _gauss_inv(A)
        if root is not None:
            return _lift_correct_inv(
                A, lambda M: zmod_reduce(M, root), lambda M: M.map_entries(rg, lambda x: x)
            )
        det = det_int(A.map_entries(IntRing(), lambda x: x))
        if not rg.is_unit(det % n):
            raise Singular("determinant not a unit")
        return _adjugate(A).scale(rg.inv(det % n))
    if isinstance(rg, IntRing):
        det = det_int(A)
        if det not in (1, -1):
            raise Singular(f"determinant {det} is not a unit in Z")
        return _adjugate(A).scale(det)
    raise RingMismatch(f"no inverse strategy for {rg!r}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_square_root(n: int) -> Optional[int]:
    r = round(n**0.5)
    return r if r * r == n and _is_prime(r) else None


# ---------------------------------------------------------------------------
# affine solving over a field


@dataclass
class AffineSolution:
    feasible: bool
    witness: Optional[List[Mat]] = None
    kernel_basis: List[List[Mat]] = dc_field(default_factory=list)
    certificate: Optional[str] = None

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis)


def solve_affine(
    system: Sequence[Tuple[Callable[..., Mat], Mat]],
    unknown_shapes: Sequence[Tuple[int, int]],
    ring: FqRing,
) -> AffineSolution:
    """Solve a system of affine matrix equations fn(X1..Xk) = rhs over F_q.

    Each fn must be affine in the unknowns (built from ring ops and fixed
    matrices).  Feasibility, one witness, and an echelonized kernel basis are
    returned; infeasibility carries a human-readable certificate.
    """
    f = ring.field
    shapes = list(unknown_shapes)
    var_offsets = []
    total = 0
    for r, c in shapes:
        var_offsets.append(total)
        total += r * c

    zeros = [Mat.zeros(ring, r, c) for r, c in shapes]

    def evaluate(coords: List[int]) -> List[Mat]:
        mats = []
        for (r, c), off in zip(shapes, var_offsets):
            mats.append(Mat(ring, r, c, coords[off : off + r * c]))
        return mats

    offsets = [fn(*zeros) for fn, _ in system]
    rows: List[List[int]] = []
    rhs_vec: List[int] = []

    # column for each unknown coordinate: fn(e) - fn(0) stacked over equations
    cols: List[List[int]] = []
    for v in range(total):
        coords = [0] * total
        coords[v] = 1
        mats = evaluate(coords)
        col: List[int] = []
        for (fn, _), off in zip(system, offsets):
            val = fn(*mats) - off
            col.extend(val.entries)
        cols.append(col)

    for (fn, rhs), off in zip(system, offsets):
        if (rhs.rows, rhs.cols) != (off.rows, off.cols):
            raise ShapeMismatch("rhs shape disagrees with map output")
        rhs_vec.extend((rhs - off).entries)

    n_eq = len(rhs_vec)
    rows = [[cols[v][e] for v in range(total)] for e in range(n_eq)]

    # gaussian elimination with augmented rhs
    aug = [row + [rhs_vec[i]] for i, row in enumerate(rows)]
    pivots: List[int] = []
    r = 0
    for col in range(total):
        piv = next((i for i in range(r, n_eq) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = f.inv(aug[r][col])
        aug[r] = [f.mul(inv, x) for x in aug[r]]
        for i in range(n_eq):
            if i != r and aug[i][col] != 0:
                c = aug[i][col]
                aug[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == n_eq:
            break

    for i in range(r, n_eq):
        if aug[i][total] != 0:
            cert = f"inconsistent row: 0 = {aug[i][total]} (field encoding)"
            return AffineSolution(feasible=False, certificate=cert)

    particular = [0] * total
    for i, col in enumerate(pivots):
        particular[col] = aug[i][total]

    free_cols = [c for c in range(total) if c not in set(pivots)]
    kernel: List[List[Mat]] = []
    for fc in free_cols:
        vec = [0] * total
        vec[fc] = 1
        for i, col in enumerate(pivots):
            vec[col] = f.neg(aug[i][fc])
        kernel.append(evaluate(vec))

    return AffineSolution(feasible=True, witness=evaluate(particular), kernel_basis=kernel)


def rank(A: Mat) -> int:
    """Rank over a field."""
    rg = A.ring
    f = rg.field
    work = [list(A.row(i)) for i in range(A.rows)]
    rk = 0
    for col in range(A.cols):
        piv = next((i for i in range(rk, A.rows) if work[i][col] != 0), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        inv = f.inv(work[rk][col])
        work[rk] = [f.mul(inv, x) for x in work[rk]]
        for i in range(A.rows):
            if i != rk and work[i][col] != 0:
                c = work[i][col]
                work[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[i], work[rk])]
        rk += 1
    return rk


# ---------------------------------------------------------------------------
# characteristic / minimal polynomials


def charpoly(A: Mat) -> Poly:
    """det(xI - A) by column expansion with subset memoization."""
    if not isinstance(A.ring, FqRing):
        raise RingMismatch("charpoly needs a field matrix")
    f = A.ring.field
    n = A.rows
    # entries of xI - A as polynomials
    ent = [
        [
            Poly(f, ((f.neg(A[i, j]),) if i != j else (f.neg(A[i, j]), 1)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo = {}

    def rec(rows: Tuple[int, ...]) -> Poly:
        if not rows:
            return Poly.one(f)
        if rows in memo:
            return memo[rows]
        col = n - len(rows)
        acc = Poly.zero(f)
        for idx, r in enumerate(rows):
            e = ent[r][col]
            if not e.is_zero():
                sub = rec(rows[:idx] + rows[idx + 1 :])
                term = e * sub
                acc = acc + term if idx % 2 == 0 else acc - term
        memo[rows] = acc
        return acc

    return rec(tuple(range(n)))


def poly_eval_mat(p: Poly, A: Mat) -> Mat:
    rg = A.ring
    out = Mat.zeros(rg, A.rows)
    for c in reversed(p.coeffs):
        out = out * A
        if c:
            out = out + Mat.identity(rg, A.rows).scale(c)
    return out


def minpoly(A: Mat, p_A: Optional[Poly] = None) -> Poly:
    """Minimal monic divisor q of the characteristic polynomial with q(A) = 0."""
    if p_A is None:
        p_A = charpoly(A)
    f = A.ring.field
    factors = poly_factor(p_A)
    # enumerate exponent vectors, ordered by total degree then encoding
    import itertools

    cands = []
    for exps in itertools.product(*[range(m + 1) for _, m in factors]):
        deg = sum(e * g.degree for (g, _), e in zip(factors, exps))
        cands.append((deg, exps))
    cands.sort()
    for deg, exps in cands:
        if deg == 0:
            continue
        q = Poly.one(f)
        for (g, _), e in zip(factors, exps):
            for _ in range(e):
                q = q * g
        if poly_eval_mat(q, A).is_zero():
            return q
    raise AssertionError("Cayley-Hamilton guarantees a divisor annihilates A")


def char_min_poly(A: Mat) -> Tuple[Poly, Poly]:
    p = charpoly(A)
    return p, minpoly(A, p)


# ---------------------------------------------------------------------------
# canonical forms via polynomial Smith normal form


def _poly_mat_identity(f: FieldDesc, n: int) -> List[List[Poly]]:
    return [[Poly.one(f) if i == j else Poly.zero(f) for j in range(n)] for i in range(n)]


def _smith_with_uinv(M: List[List[Poly]], f: FieldDesc) -> Tuple[List[Poly], List[List[Poly]]]:
    """Diagonalize M over k[x] by elementary operations.

    Returns (diagonal entries d_0 | d_1 | ..., Uinv) where the row operations
    applied to M compose to U and Uinv tracks U^{-1} (column operations on M
    need no tracking: only the left transform is needed to read off module
    generators of coker(M)).
    """
    n = len(M)
    uinv = _poly_mat_identity(f, n)

    def row_axpy(i: int, j: int, c: Poly) -> None:
        # row_i += c * row_j on M; uinv col_j -= c * col_i
        for k in range(n):
            M[i][k] = M[i][k] + c * M[j][k]
        for k in range(n):
            uinv[k][j] = uinv[k][j] - c * uinv[k][i]

    def row_swap(i: int, j: int) -> None:
        M[i], M[j] = M[j], M[i]
        for k in range(n):
            uinv[k][i], uinv[k][j] = uinv[k][j], uinv[k][i]

    def row_scale(i: int, c: int) -> None:
        # scale by a unit constant c; uinv col_i scaled by c^-1
        ci = f.inv(c)
        M[i] = [p.scale(c) for p in M[i]]
        for k in range(n):
            uinv[k][i] = uinv[k][i].scale(ci)

    def col_swap(i: int, j: int) -> None:
        for k in range(n):
            M[k][i], M[k][j] = M[k][j], M[k][i]

    def col_axpy(i: int, j: int, c: Poly) -> None:
        for k in range(n):
            M[k][i] = M[k][i] + c * M[k][j]

    for t in range(n):
        while True:
            # find nonzero entry of minimal degree in the remaining block
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    p = M[i][j]
                    if not p.is_zero() and (best is None or p.degree < M[best[0]][best[1]].degree):
                        best = (i, j)
            if best is None:
                break  # block is zero; done with all remaining pivots
            if best != (t, t):
                if best[0] != t:
                    row_swap(t, best[0])
                if best[1] != t:
                    col_swap(t, best[1])
            dirty = False
            for i in range(t + 1, n):
                if not M[i][t].is_zero():
                    q = M[i][t] // M[t][t]
                    row_axpy(i, t, -q)
                    if not M[i][t].is_zero():
                        dirty = True
            for j in range(t + 1, n):
                if not M[t][j].is_zero():
                    q = M[t][j] // M[t][t]
                    col_axpy(j, t, -q)
                    if not M[t][j].is_zero():
                        dirty = True
            if dirty:
                continue
            # pivot clears its row and column; enforce global divisibility
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if not (M[i][j] % M[t][t]).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_axpy(t, offender, Poly.one(f))
        if not M[t][t].is_zero() and M[t][t].coeffs[-1] != 1:
            row_scale(t, f.inv(M[t][t].coeffs[-1]))
    diag = [M[i][i] for i in range(n)]
    return diag, uinv


@dataclass
class CyclicPiece:
    generator: Mat  # column vector n x 1
    factor: Poly  # its annihilator; the pieces form a divisibility chain


def cyclic_decomposition(A: Mat) -> List[CyclicPiece]:
    """Decompose k^n into cyclic k[A]-modules with invariant-factor annihilators."""
    if not isinstance(A.ring, FqRing):
        raise RingMismatch("cyclic decomposition needs a field matrix")
    f = A.ring.field
    rg = A.ring
    n = A.rows
    M = [
        [
            Poly(f, ((f.neg(A[i, j]),) if i != j else (f.neg(A[i, j]), 1)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    diag, uinv = _smith_with_uinv(M, f)
    max_deg = max((p.degree for col in uinv for p in col), default=0)
    powers = [Mat.identity(rg, n)]
    for _ in range(max_deg):
        powers.append(powers[-1] * A)
    pieces = []
    for j in range(n):
        d = diag[j]
        if d.degree < 1:
            continue
        vec = [0] * n
        for i in range(n):
            p = uinv[i][j]
            for t, c in enumerate(p.coeffs):
                if c:
                    for r in range(n):
                        vec[r] = f.add(vec[r], f.mul(c, powers[t][r, i]))
        pieces.append(CyclicPiece(Mat(rg, n, 1, vec), d))
    assert sum(p.factor.degree for p in pieces) == n
    return pieces


@dataclass
class CanonicalForm:
    kind: str  # "jordan" | "frobenius"
    blocks: List[Tuple[object, int]]  # (eigenvalue | invariant factor Poly, size)
    conjugator: Mat  # g with g A g^-1 = assembled blocks

    def assembled(self, ring: FqRing, n: int) -> Mat:
        out = [[ring.zero] * n for _ in range(n)]
        pos = 0
        for val, size in self.blocks:
            if self.kind == "jordan":
                for i in range(size):
                    out[pos + i][pos + i] = val
                    if i + 1 < size:
                        out[pos + i][pos + i + 1] = ring.one
            else:
                f = ring.field
                coeffs = val.coeffs
                for i in range(size - 1):
                    out[pos + i + 1][pos + i] = ring.one
                for i in range(size):
                    out[pos + i][pos + size - 1] = f.neg(coeffs[i])
            pos += size
        return Mat.from_rows(ring, out)


def _columns_to_mat(cols: List[Mat], ring: FqRing, n: int) -> Mat:
    ent = []
    for i in range(n):
        for c in cols:
            ent.append(c[i, 0])
    return Mat(ring, n, n, ent)


def canonical_form(A: Mat, kind: str) -> CanonicalForm:
    if kind not in ("jordan", "frobenius"):
        raise ValueError(f"unknown kind {kind!r}")
    rg = A.ring
    if not isinstance(rg, FqRing):
        raise RingMismatch("canonical forms need a field matrix")
    n = A.rows
    pieces = cyclic_decomposition(A)

    if kind == "frobenius":
        cols: List[Mat] = []
        blocks: List[Tuple[object, int]] = []
        for piece in pieces:
            v = piece.generator
            blocks.append((piece.factor, piece.factor.degree))
            for _ in range(piece.factor.degree):
                cols.append(v)
                v = A * v
        P = _columns_to_mat(cols, rg, n)
        conj = mat_inv(P)
        form = CanonicalForm("frobenius", blocks, conj)
    else:
        f = rg.field
        jordan_blocks = []  # (eigenvalue, size, chain columns)
        for piece in pieces:
            fac = poly_factor(piece.factor)
            for g, mult in fac:
                if g.degree != 1:
                    raise NotSplit(f"irreducible factor {g!r} of degree > 1")
            for g, mult in fac:
                lam = f.neg(g.coeffs[0])  # g = x - lam
                cof = Poly.one(f)
                for h, m2 in fac:
                    if h != g:
                        for _ in range(m2):
                            cof = cof * h
                u = poly_eval_mat(cof, A) * piece.generator
                nil = A - Mat.identity(rg, n).scale(lam)
                chain = [u]
                for _ in range(mult - 1):
                    chain.append(nil * chain[-1])
                chain.reverse()  # eigenvector first: A w_i = lam w_i + w_{i-1}
                jordan_blocks.append((lam, mult, chain))
        jordan_blocks.sort(key=lambda b: (b[0], -b[1]))
        cols = [c for _, _, chain in jordan_blocks for c in chain]
        P = _columns_to_mat(cols, rg, n)
        conj = mat_inv(P)
        form = CanonicalForm("jordan", [(lam, sz) for lam, sz, _ in jordan_blocks], conj)

    # round-trip verification is part of the contract
    assert form.conjugator * A * mat_inv(form.conjugator) == form.assembled(rg, n)
    return form


def invariant_factors(A: Mat) -> List[Poly]:
    return [p.factor for p in cyclic_decomposition(A)]


def is_conjugate(A: Mat, B: Mat):
    """Return a witness g with g A g^-1 = B, or False."""
    if A.ring is not B.ring or A.rows != B.rows:
        raise RingMismatch("conjugacy needs matching ambient")
    fa = canonical_form(A, "frobenius")
    fb = canonical_form(B, "frobenius")
    if [b for b in fa.blocks] != [b for b in fb.blocks]:
        return False
    g = mat_inv(fb.conjugator) * fa.conjugator
    assert g * A * mat_inv(g) == B
    return g


def jordan_type(A: Mat) -> List[Tuple[int, int]]:
    """(eigenvalue, size) list of the Jordan form, sorted as in canonical_form."""
    return [(lam, sz) for lam, sz in canonical_form(A, "jordan").blocks]


# convenience builders -------------------------------------------------------


def jordan_block(ring: FqRing, lam: int, size: int) -> Mat:
    out = [[ring.zero] * size for _ in range(size)]
    for i in range(size):
        out[i][i] = lam
        if i + 1 < size:
            out[i][i + 1] = ring.one
    return Mat.from_rows(ring, out)


def block_diag(ring: Ring, blocks: Sequence[Mat]) -> Mat:
    n = sum(b.rows for b in blocks)
    out = [[ring.zero] * n for _ in range(n)]
    pos = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[pos + i][pos + j] = b[i, j]
        pos += b.rows
    return Mat.from_rows(ring, out)


def perm_matrix(ring: Ring, n: int, images: Sequence[int]) -> Mat:
    """Permutation matrix sending basis vector e_j to e_{images[j-1]} (1-indexed)."""
    out = [[ring.zero] * n for _ in range(n)]
    for j, i in enumerate(images, start=1):
        out[i - 1][j - 1] = ring.one
    return Mat.from_rows(ring, out)


def cycle_to_images(n: int, cycle: Sequence[int]) -> List[int]:
    images = list(range(1, n + 1))
    for idx, a in enumerate(cycle):
        images[a - 1] = cycle[(idx + 1) % len(cycle)]
    return images


__all__ = [
    "Mat",
    "AffineSolution",
    "CanonicalForm",
    "CyclicPiece",
    "mat_ring_ops",
    "mat_inv",
    "det_int",
    "solve_affine",
    "rank",
    "frobenius_twist",
    "charpoly",
    "minpoly",
    "char_min_poly",
    "poly_eval_mat",
    "canonical_form",
    "cyclic_decomposition",
    "invariant_factors",
    "is_conjugate",
    "jordan_type",
    "jordan_block",
    "block_diag",
    "perm_matrix",
    "cycle_to_images",
    "w2_reduce",
    "teich_lift",
    "iota_embed",
    "iota_extract",
    "zmod_reduce",
    "int_to_zmod",
]
