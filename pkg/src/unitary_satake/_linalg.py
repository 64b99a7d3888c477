"""Thin exact linear-algebra layer over sympy, speaking ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy


def _to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                          if isinstance(x, Fraction) else sympy.Rational(x)
                          for x in row] for row in rows])


def _from_sympy(m: sympy.Matrix) -> list[list[Fraction]]:
    return [[Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols)]
            for i in range(m.rows)]


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    m = _to_sympy(rows)
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    if m.det() == 0:
        raise ValueError("matrix is singular")
    return _from_sympy(m.inv())


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return _to_sympy(rows).rank()


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    return [[sum((row[k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(cols)] for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def solve_columns(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Coefficients ``c`` with ``sum(c_i * columns[i]) == target``, or ``None``.

    ``columns`` must be linearly independent.
    """
    if not columns:
        return () if all(t == 0 for t in target) else None
    a = _to_sympy(columns).T
    b = _to_sympy([target]).T
    aug = a.row_join(b)
    if aug.rank() != a.rank():
        return None
    sol = (a.T * a).LUsolve(a.T * b)
    return tuple(Fraction(int(x.p), int(x.q)) for x in sol)


def nullspace(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    basis = _to_sympy(rows).nullspace()
    out = []
    for v in basis:
        out.append(tuple(Fraction(int(x.p), int(x.q)) for x in v))
    return out
