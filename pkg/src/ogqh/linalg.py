"""Fraction-free (Bareiss) elimination for exact integer linear systems."""

from __future__ import annotations

from fractions import Fraction

from .errors import InvariantViolation


def solve_exact(matrix: list[list[int]], rhs: list[list[int]]) -> list[list[Fraction]]:
    """Solve ``matrix @ X = rhs`` for a square nonsingular integer matrix.

    ``rhs`` holds one column per right-hand side, given as rows
    (``rhs[i][k]`` is row i of column k).  Returns X in the same layout.
    Elimination uses Bareiss' one-step division so every intermediate
    entry stays an integer.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    k_cols = len(rhs[0]) if rhs else 0
    a = [list(map(int, matrix[i])) + list(map(int, rhs[i])) for i in range(n)]
    width = n + k_cols
    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            raise InvariantViolation("singular system in exact solve")
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, width):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    x = [[Fraction(0)] * k_cols for _ in range(n)]
    for col in range(k_cols):
        for i in range(n - 1, -1, -1):
            s = Fraction(a[i][n + col])
            for j in range(i + 1, n):
                if a[i][j]:
                    s -= a[i][j] * x[j][col]
            x[i][col] = s / a[i][i]
    return x
