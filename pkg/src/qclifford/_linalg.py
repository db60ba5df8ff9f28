"""Fraction-free exact linear algebra over Z[q].

Entries are integer-coefficient polynomial lists (see _polyarith).  The
Bareiss/Montante recurrences keep every intermediate entry a minor of the
input matrix, so all divisions are exact and coefficient growth stays
polynomial; pivots are chosen with minimal q-degree to keep them small.
"""

from __future__ import annotations

from . import _polyarith as pa
from .errors import SingularSystem


def _pick_pivot(rows, candidates, col):
    best = None
    best_deg = None
    for r in candidates:
        entry = rows[r][col]
        if entry:
            d = len(entry)
            if best is None or d < best_deg:
                best, best_deg = r, d
    return best


def invert_ff(matrix):
    """Gauss-Jordan Bareiss inverse of a square matrix over Z[q].

    Returns (B, d) with B = d * A^(-1) exactly, d the determinant of the
    row-permuted matrix (sign included, harmless for solving).  Raises
    SingularSystem if the matrix is singular.
    """
    n = len(matrix)
    rows = [list(row) + [[1] if i == j else [] for j in range(n)]
            for i, row in enumerate(matrix)]
    width = 2 * n
    prev = [1]
    for c in range(n):
        r = _pick_pivot(rows, range(c, n), c)
        if r is None:
            raise SingularSystem("matrix is singular over Q(q)")
        if r != c:
            rows[c], rows[r] = rows[r], rows[c]
        pivot = rows[c][c]
        for i in range(n):
            if i == c:
                continue
            row = rows[i]
            factor = row[c]
            if factor:
                lead = rows[c]
                for j in range(width):
                    num = pa.sub(pa.mul(row[j], pivot), pa.mul(factor, lead[j]))
                    row[j] = pa.divexact(num, prev) if num else []
            else:
                # the Bareiss recurrence rescales by pivot/prev even when
                # nothing is eliminated from the row
                for j in range(width):
                    if row[j]:
                        row[j] = pa.divexact(pa.mul(row[j], pivot), prev)
        prev = pivot
    det = rows[n - 1][n - 1]
    return [row[n:] for row in rows], det


def rank_ff(matrix):
    """Rank over Q(q) by forward fraction-free elimination."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if not n:
        return 0
    ncols = len(rows[0])
    prev = [1]
    rank = 0
    for c in range(ncols):
        if rank == n:
            break
        r = _pick_pivot(rows, range(rank, n), c)
        if r is None:
            continue
        if r != rank:
            rows[rank], rows[r] = rows[r], rows[rank]
        pivot = rows[rank][c]
        lead = rows[rank]
        for i in range(rank + 1, n):
            row = rows[i]
            factor = row[c]
            if factor:
                for j in range(c, ncols):
                    num = pa.sub(pa.mul(row[j], pivot), pa.mul(factor, lead[j]))
                    row[j] = pa.divexact(num, prev) if num else []
                row[c] = []
            else:
                for j in range(c, ncols):
                    if row[j]:
                        row[j] = pa.divexact(pa.mul(row[j], pivot), prev)
        prev = pivot
        rank += 1
    return rank
