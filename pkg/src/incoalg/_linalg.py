"""Exact Gaussian elimination over a FieldSpec."""

from __future__ import annotations

from typing import List, Sequence

from .scalars import FieldSpec, Scalar


def rank(rows: Sequence[Sequence[Scalar]], field: FieldSpec) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        row_r = [v * inv for v in m[r]]
        m[r] = row_r
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], row_r)]
        r += 1
        if r == len(m):
            break
    return r


def solve_square(rows: List[List[Scalar]], rhs: List[Scalar], field: FieldSpec) -> List[Scalar]:
    """Solve ``rows @ x = rhs`` for a nonsingular square system."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]
