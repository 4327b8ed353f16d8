"""Exact determinants over integral domains.

Both routines only need ``+``, ``-``, ``*``, a zero test and (for Bareiss) an
exact division, so they work for Python ints and for Laurent elements alike.
"""

from __future__ import annotations

from typing import Callable, Sequence


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def bareiss_det(matrix: Sequence[Sequence], exact_div: Callable = _int_exact_div, one=1):
    """Fraction-free Gaussian elimination with row pivoting.

    Every division performed is exact by Sylvester's identity, so the
    intermediate entries stay in the ring.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return a[k][k] - a[k][k]  # zero of the ring
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = exact_div(pivot * a[i][j] - aik * a[k][j], prev)
            a[i][k] = aik - aik
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def cofactor_det(matrix: Sequence[Sequence], zero=0):
    """Laplace expansion along the first row; exponential, for small n only."""
    n = len(matrix)
    if n == 0:
        return zero + 1
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = zero
    for c in range(n):
        entry = matrix[0][c]
        if not entry:
            continue
        minor = [row[:c] + row[c + 1 :] for row in (list(r) for r in matrix[1:])]
        term = entry * cofactor_det(minor, zero)
        total = total + term if c % 2 == 0 else total - term
    return total
