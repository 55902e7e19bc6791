"""Exact nullspace of a rational matrix via fraction-free integer elimination."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence


def _integer_row(row: Sequence) -> list[int]:
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def normalize_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Divide by the content and make the first nonzero entry positive."""
    v = _primitive([int(x) for x in v])
    for x in v:
        if x:
            if x < 0:
                v = [-y for y in v]
            break
    return tuple(v)


def rref_integer(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form with integer rows (each pivot column zero elsewhere).

    Rows are scaled, never divided, except by their content, so all
    intermediate entries stay integral.
    """
    mat = [_primitive(_integer_row(r)) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pick = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pick is None:
            continue
        mat[rank], mat[pick] = mat[pick], mat[rank]
        prow = mat[rank]
        pv = prow[col]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = _primitive([pv * x - c * y for x, y in zip(mat[i], prow)])
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of {x : rows @ x = 0}, one vector per free column, normalized."""
    if not rows:
        return [tuple(int(i == j) for i in range(ncols)) for j in range(ncols)]
    echelon, pivots = rref_integer(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        m = lcm(*(echelon[i][pc] for i, pc in enumerate(pivots))) if pivots else 1
        v = [0] * ncols
        v[fc] = m
        for i, pc in enumerate(pivots):
            v[pc] = -echelon[i][fc] * m // echelon[i][pc]
        basis.append(normalize_vector(v))
    return basis
