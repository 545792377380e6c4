"""Bit-packed linear algebra over F_2 for n <= 8, plus numpy batch kernels.

A square matrix is one machine integer, one bit per entry, row-major with
entry (0,0) in the most significant bit — identical to Mat.key() so the two
representations are interchangeable.  The numpy kernels operate on arrays of
packed keys (uint32, so n <= 5) and power the large closures and the
conjugacy-class census.
"""

from __future__ import annotations

from typing import List, Sequence

import numpy as np

from .linalg import Mat
from .rings import FqRing


def pack(A: Mat) -> int:
    return A.key()


def unpack(key: int, ring: FqRing, n: int) -> Mat:
    bits = [(key >> (n * n - 1 - t)) & 1 for t in range(n * n)]
    return Mat(ring, n, n, bits)


def row_of(key: int, i: int, n: int) -> int:
    """Row i as an n-bit int (column j at bit n-1-j)."""
    return (key >> ((n - 1 - i) * n)) & ((1 << n) - 1)


def from_rows(rows: Sequence[int], n: int) -> int:
    key = 0
    for r in rows:
        key = (key << n) | r
    return key


def identity_key(n: int) -> int:
    return from_rows([1 << (n - 1 - i) for i in range(n)], n)


def mul_key(a: int, b: int, n: int) -> int:
    """Product of two packed matrices: fold rows of b selected by bits of a."""
    brows = [row_of(b, j, n) for j in range(n)]
    out = 0
    for i in range(n):
        arow = row_of(a, i, n)
        acc = 0
        j = 0
        while arow:
            if arow & (1 << (n - 1 - j)):
                acc ^= brows[j]
                arow &= ~(1 << (n - 1 - j))
            j += 1
        out = (out << n) | acc
    return out


def transpose_key(key: int, n: int) -> int:
    rows = [row_of(key, i, n) for i in range(n)]
    out_rows = []
    for j in range(n):
        r = 0
        for i in range(n):
            r |= ((rows[i] >> (n - 1 - j)) & 1) << (n - 1 - i)
        out_rows.append(r)
    return from_rows(out_rows, n)


def rank_key(key: int, n: int) -> int:
    rows = [row_of(key, i, n) for i in range(n)]
    rk = 0
    for col in range(n):
        bit = 1 << (n - 1 - col)
        piv = next((i for i in range(rk, n) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(n):
            if i != rk and rows[i] & bit:
                rows[i] ^= rows[rk]
        rk += 1
    return rk


def inv_key(key: int, n: int) -> int:
    """Inverse of a packed invertible matrix (Gauss-Jordan on 2n-bit rows)."""
    rows = [(row_of(key, i, n) << n) | (1 << (n - 1 - i)) for i in range(n)]
    rk = 0
    for col in range(n):
        bit = 1 << (2 * n - 1 - col)
        piv = next((i for i in range(rk, n) if rows[i] & bit), None)
        if piv is None:
            raise ValueError("matrix not invertible")
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(n):
            if i != rk and rows[i] & bit:
                rows[i] ^= rows[rk]
        rk += 1
    mask = (1 << n) - 1
    return from_rows([r & mask for r in rows], n)


# ---------------------------------------------------------------------------
# numpy batch kernels (keys as uint32, n <= 5)


def _right_mul_table(g: int, n: int) -> np.ndarray:
    """table[r] = r * g for every n-bit row r."""
    grows = [row_of(g, j, n) for j in range(n)]
    table = np.zeros(1 << n, dtype=np.uint32)
    for r in range(1 << n):
        acc = 0
        for j in range(n):
            if r & (1 << (n - 1 - j)):
                acc ^= grows[j]
        table[r] = acc
    return table


def batch_mul_right(keys: np.ndarray, g: int, n: int) -> np.ndarray:
    """Elementwise keys[i] * g."""
    table = _right_mul_table(g, n)
    mask = np.uint32((1 << n) - 1)
    out = np.zeros_like(keys)
    for i in range(n):
        shift = np.uint32((n - 1 - i) * n)
        rows = (keys >> shift) & mask
        out |= table[rows] << shift
    return out


def batch_mul_left(keys: np.ndarray, g: int, n: int) -> np.ndarray:
    """Elementwise g * keys[i]."""
    mask = np.uint32((1 << n) - 1)
    rows = [(keys >> np.uint32((n - 1 - j) * n)) & mask for j in range(n)]
    out = np.zeros_like(keys)
    for i in range(n):
        grow = row_of(g, i, n)
        acc = np.zeros_like(keys)
        for j in range(n):
            if grow & (1 << (n - 1 - j)):
                acc ^= rows[j]
        out |= acc << np.uint32((n - 1 - i) * n)
    return out


def batch_mul(akeys: np.ndarray, bkeys: np.ndarray, n: int) -> np.ndarray:
    """Elementwise akeys[i] * bkeys[i] for aligned arrays."""
    mask = np.uint32((1 << n) - 1)
    brows = [(bkeys >> np.uint32((n - 1 - j) * n)) & mask for j in range(n)]
    out = np.zeros_like(akeys)
    for i in range(n):
        arow = (akeys >> np.uint32((n - 1 - i) * n)) & mask
        acc = np.zeros_like(akeys)
        for j in range(n):
            sel = ((arow >> np.uint32(n - 1 - j)) & np.uint32(1)).astype(bool)
            acc[sel] ^= brows[j][sel]
        out |= acc << np.uint32((n - 1 - i) * n)
    return out


def batch_rank(keys: np.ndarray, n: int) -> np.ndarray:
    """Rank of every packed matrix in the array."""
    mask = np.uint32((1 << n) - 1)
    rows = np.stack(
        [(keys >> np.uint32((n - 1 - i) * n)) & mask for i in range(n)]
    )  # shape (n, B)
    rk = np.zeros(keys.shape, dtype=np.int8)
    for col in range(n):
        bit = np.uint32(1 << (n - 1 - col))
        placed = np.zeros(keys.shape, dtype=bool)
        for i in range(n):
            cand = ((rows[i] & bit) != 0) & (~placed)
            if not cand.any():
                continue
            # swap candidate row into position rk (per matrix)
            pivot_row = np.where(cand, rows[i], 0).astype(np.uint32)
            # eliminate this column from every other row of the selected matrices
            for j in range(n):
                if j == i:
                    continue
                hit = cand & ((rows[j] & bit) != 0)
                rows[j][hit] ^= pivot_row[hit]
            # mark the pivot row as consumed by zeroing it out of future pivots
            rows[i][cand] = 0
            placed |= cand
        rk += placed.astype(np.int8)
    return rk


def batch_closure(
    gen_keys: Sequence[int], n: int, bound: int
) -> np.ndarray:
    """All products of the generators (subgroup closure), as a sorted key array.

    Breadth-first over a dense seen-bitmap of size 2^(n*n); suitable for n <= 5.
    """
    size = 1 << (n * n)
    seen = np.zeros(size, dtype=bool)
    ident = identity_key(n)
    seen[ident] = True
    frontier = np.array([ident], dtype=np.uint32)
    count = 1
    tables = [_right_mul_table(g, n) for g in gen_keys]
    mask = np.uint32((1 << n) - 1)
    shifts = [np.uint32((n - 1 - i) * n) for i in range(n)]
    while frontier.size:
        prods = []
        for table in tables:
            out = np.zeros_like(frontier)
            for sh in shifts:
                rows = (frontier >> sh) & mask
                out |= table[rows] << sh
            prods.append(out)
        cand = np.unique(np.concatenate(prods))
        new = cand[~seen[cand]]
        seen[new] = True
        count += new.size
        if count > bound:
            from .errors import BoundExceeded

            raise BoundExceeded(f"closure exceeded bound {bound}")
        frontier = new
    return np.flatnonzero(seen).astype(np.uint32)


def batch_conjugate(keys: np.ndarray, g: int, n: int) -> np.ndarray:
    """Elementwise g * keys[i] * g^-1."""
    return batch_mul_right(batch_mul_left(keys, g, n), inv_key(g, n), n)


def normal_closure_size_at_least(
    seed_keys: Sequence[int],
    group_gen_keys: Sequence[int],
    n: int,
    threshold: int,
) -> bool:
    """True iff the normal closure of the seeds reaches the threshold size.

    BFS under (a) right multiplication by each seed and (b) conjugation by each
    ambient generator; stops early once the threshold is hit.
    """
    size = 1 << (n * n)
    seen = np.zeros(size, dtype=bool)
    ident = identity_key(n)
    seen[ident] = True
    frontier = np.array(sorted(set(seed_keys) | {ident}), dtype=np.uint32)
    seen[frontier] = True
    count = int(seen.sum())
    inv_gens = [inv_key(g, n) for g in group_gen_keys]
    while frontier.size:
        if count >= threshold:
            return True
        prods = [batch_mul_right(frontier, s, n) for s in seed_keys]
        for g, gi in zip(group_gen_keys, inv_gens):
            prods.append(batch_mul_right(batch_mul_left(frontier, g, n), gi, n))
        cand = np.unique(np.concatenate(prods))
        new = cand[~seen[cand]]
        seen[new] = True
        count += new.size
        frontier = new
    return count >= threshold


__all__ = [
    "pack",
    "unpack",
    "row_of",
    "from_rows",
    "identity_key",
    "mul_key",
    "inv_key",
    "rank_key",
    "transpose_key",
    "batch_mul_right",
    "batch_mul_left",
    "batch_mul",
    "batch_rank",
    "batch_closure",
    "batch_conjugate",
    "normal_closure_size_at_least",
]
