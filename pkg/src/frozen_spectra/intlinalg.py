"""Exact linear algebra on small dense integer matrices.

Everything here runs on Python ints (arbitrary precision), never floats.
Matrices are sequences of row sequences; results are lists of lists.
"""

from __future__ import annotations

from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_copy(a: IntMatrix) -> list[list[int]]:
    return [list(row) for row in a]


def mat_add(a: IntMatrix, b: IntMatrix) -> list[list[int]]:
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        raise ValueError("matrix shapes differ")
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s: int, a: IntMatrix) -> list[list[int]]:
    return [[s * x for x in row] for row in a]


def matmul(a: IntMatrix, b: IntMatrix) -> list[list[int]]:
    n, p = len(a), len(a[0])
    if len(b) != p:
        raise ValueError(f"cannot multiply {n}x{p} by {len(b)}x{len(b[0])}")
    q = len(b[0])
    bt = [[b[i][j] for i in range(p)] for j in range(q)]  # column access
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: IntMatrix, x: Sequence[int]) -> list[int]:
    if len(a[0]) != len(x):
        raise ValueError("dimension mismatch")
    return [sum(r * v for r, v in zip(row, x)) for row in a]


def mat_eq(a: IntMatrix, b: IntMatrix) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def _exact_div(num: int, den: int) -> int:
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("fraction-free elimination produced a non-integer")
    return quot


def bareiss_det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = mat_copy(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for p in range(n - 1):
        if m[p][p] == 0:
            for r in range(p + 1, n):
                if m[r][p] != 0:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                m[i][j] = _exact_div(m[i][j] * piv - m[i][p] * m[p][j], prev)
            m[i][p] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def bareiss_rank(a: IntMatrix) -> int:
    """Exact rank by fraction-free elimination with column pivoting."""
    m = mat_copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    r = 0
    for c in range(cols):
        piv_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv_row is None:
            continue
        m[r], m[piv_row] = m[piv_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = _exact_div(m[i][j] * piv - m[i][c] * m[r][j], prev)
            m[i][c] = 0
        prev = piv
        r += 1
        if r == rows:
            break
    return r
