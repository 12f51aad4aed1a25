"""Exact linear algebra over Fractions."""


from __future__ import annotations

from typing import List, Sequence, Union
from fractions import Fraction


__all__ = ["SingularMatrixError", "identity", "inverse", "solve", "matmul",
    "lagrange_eval"]


Matrix = List[List[Fraction]]
Number = Union[int, Fraction]


class SingularMatrixError(RuntimeError):
    pass


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _check_square(X: Sequence[Sequence[Number]]) -> int:
    n = len(X)
    if any(len(row) != n for row in X):
        raise ValueError("Matrix must be square.")
    return n


def inverse(X: Sequence[Sequence[Number]]) -> Matrix:
    """Invert a square matrix by Gauss-Jordan elimination."""

    n = _check_square(X)
    A = [[Fraction(v) for v in row] for row in X]
    Y = identity(n)

    # downward elimination: zero the lower triangle, unit diagonal.
    for i in range(n):
        for j in range(i, n):
            if A[j][i] != 0:
                if i != j:
                    A[i], A[j] = A[j], A[i]
                    Y[i], Y[j] = Y[j], Y[i]
                break
        else:
            raise SingularMatrixError("Matrix is not invertible.")

        p = A[i][i]
        A[i] = [v / p for v in A[i]]
        Y[i] = [v / p for v in Y[i]]

        for j in range(i + 1, n):
            f = A[j][i]
            if f:
                A[j] = [a - f * b for a, b in zip(A[j], A[i])]
                Y[j] = [a - f * b for a, b in zip(Y[j], Y[i])]

    # upward elimination: zero the upper triangle.
    for j in range(n - 2, -1, -1):
        for i in range(j + 1, n):
            f = A[j][i]
            if f:
                A[j] = [a - f * b for a, b in zip(A[j], A[i])]
                Y[j] = [a - f * b for a, b in zip(Y[j], Y[i])]

    return Y


def matmul(
    X: Sequence[Sequence[Number]], Y: Sequence[Sequence[Number]]
) -> Matrix:
    cols = list(zip(*Y))
    return [[sum((Fraction(a) * b for a, b in zip(row, col)), Fraction(0))
        for col in cols] for row in X]


def solve(
    X: Sequence[Sequence[Number]], b: Sequence[Number]
) -> List[Fraction]:
    """Solve X v = b exactly for square invertible X."""

    Xi = inverse(X)
    return [sum((a * Fraction(c) for a, c in zip(row, b)), Fraction(0))
        for row in Xi]


def lagrange_eval(
    xs: Sequence[Number], ys: Sequence[Number], x: Number
) -> Fraction:
    """
    Evaluate at x the unique polynomial of degree < len(xs) through (xs, ys).

    :param xs: Distinct sample abscissae.
    :param ys: Sample values.
    :param x: Evaluation point.
    """

    if len(xs) != len(ys):
        raise ValueError("Need one value per sample point.")
    if len(set(xs)) != len(xs):
        raise ValueError("Sample points must be distinct.")
    x = Fraction(x)
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi: continue
        term = Fraction(yi)
        for j, xj in enumerate(xs):
            if i != j:
                term *= (x - xj) / Fraction(xi - xj)
        total += term
    return total
