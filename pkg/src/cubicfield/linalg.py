"""Dense exact matrices as tuples of tuples of Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rational import to_q

Matrix = tuple[tuple[Fraction, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = tuple(tuple(to_q(v) for v in row) for row in rows)
    if len({len(r) for r in out}) > 1:
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch {len(a)}x{len(a[0])} @ {len(b)}x{len(b[0])}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matvec(a: Matrix, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(sum((x * to_q(y) for x, y in zip(row, v)), Fraction(0)) for row in a)


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def is_zero(m: Matrix) -> bool:
    return all(v == 0 for row in m for v in row)


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(m)
    work = [list(row) for row in m]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        p = work[col][col]
        result *= p
        for r in range(col + 1, n):
            f = work[r][col] / p
            if f:
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return sign * result


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError for singular input."""
    n = len(m)
    work = [list(row) + list(e) for row, e in zip(m, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)
