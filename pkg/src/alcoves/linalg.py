"""Exact linear algebra over the rationals.

Rank computations use fraction-free (Bareiss) elimination on integer
matrices; rational input rows are cleared of denominators first, which
does not change the row space.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _integerize_row(row):
    """Scale a row of ints/Fractions to integers (lcm of denominators)."""
    denom = 1
    for x in row:
        if isinstance(x, Fraction):
            d = x.denominator
            denom = denom // gcd(denom, d) * d
    if denom == 1:
        return [int(x) for x in row]
    return [int(x * denom) for x in row]


def exact_rank(rows) -> int:
    """Rank of a matrix given as an iterable of rows of ints/Fractions."""
    mat = [_integerize_row(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        pv = mat[row][col]
        for r in range(row + 1, len(mat)):
            if not any(mat[r][col:]):
                continue
            rv = mat[r][col]
            for c in range(col, ncols):
                # Bareiss step: division by the previous pivot is exact.
                mat[r][c] = (pv * mat[r][c] - rv * mat[row][c]) // prev
        prev = pv
        rank += 1
        row += 1
        if row == len(mat):
            break
    return rank


def nullity(rows, ncols: int) -> int:
    return ncols - exact_rank(rows)


def invert_rational(mat):
    """Inverse of a square matrix over the rationals (Gauss-Jordan).

    Raises ValueError on a singular matrix.
    """
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
