"""Small exact linear-algebra helpers shared by the diagram and polyhedral code.

Everything works over Python integers and `fractions.Fraction`; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "content",
    "primitive",
    "det_int",
    "rank_int",
    "solve_fraction",
    "invert_fraction",
    "mat_vec",
    "mat_mul",
]


def content(vec) -> int:
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
        if g == 1:
            return 1
    return g


def primitive(vec) -> tuple[int, ...]:
    """Divide an integer vector by its content (zero vector passes through)."""
    g = content(vec)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row = a[i]
            krow = a[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pivot - aik * krow[j]) // prev
            row[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank_int(rows) -> int:
    """Rank of an integer (or Fraction) matrix, by incremental elimination."""
    basis: list[list] = []
    ncols = None
    for row in rows:
        v = list(row)
        if ncols is None:
            ncols = len(v)
        for b in basis:
            p = next(i for i, x in enumerate(b) if x != 0)
            if v[p] != 0:
                f = Fraction(v[p], 1) / b[p] if not isinstance(v[p], Fraction) else v[p] / b[p]
                v = [x - f * y for x, y in zip(v, b)]
        if any(x != 0 for x in v):
            basis.append(v)
            if len(basis) == ncols:
                break
    return len(basis)


def solve_fraction(a_rows, rhs):
    """Solve ``A x = rhs`` exactly; returns None if inconsistent.

    For underdetermined systems returns one solution (free variables at 0).
    """
    m = len(a_rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a_rows, rhs)]
    n = len(a_rows[0]) if m else 0
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for pr, pc in pivots:
        x[pc] = aug[pr][n]
    return tuple(x)


def invert_fraction(a_rows):
    """Exact inverse of a square matrix; returns None when singular."""
    n = len(a_rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a_rows)
    ]
    for c in range(n):
        pr = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pr is None:
            return None
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def mat_vec(rows, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in rows)


def mat_mul(a_rows, b_rows):
    bt = list(zip(*b_rows))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a_rows)
