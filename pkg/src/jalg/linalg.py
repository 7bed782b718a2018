"""Exact dense linear algebra over a Field.

Matrices are lists of row lists of raw field values; vectors are lists of raw
values.  Everything is Gauss-Jordan on exact arithmetic.  Dimensions here are
single digits, so no pivoting strategy or sparsity is needed.
"""

from __future__ import annotations

from .errors import DimensionError
from .fields import Field


def zeros(field: Field, n: int) -> list:
    return [field.zero] * n


def identity(field: Field, n: int) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_vec(field: Field, rows: list[list], v: list) -> list:
    if rows and len(rows[0]) != len(v):
        raise DimensionError(f"matrix width {len(rows[0])} vs vector length {len(v)}")
    out = []
    for row in rows:
        s = field.zero
        for a, b in zip(row, v):
            s = field.add(s, field.mul(a, b))
        out.append(s)
    return out


def mat_mul(field: Field, a: list[list], b: list[list]) -> list[list]:
    if a and b and len(a[0]) != len(b):
        raise DimensionError(f"inner dimensions {len(a[0])} vs {len(b)}")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            s = field.zero
            for k, x in enumerate(row):
                s = field.add(s, field.mul(x, b[k][j]))
            new.append(s)
        out.append(new)
    return out


def rref(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(field: Field, rows: list[list]) -> int:
    return len(rref(field, rows)[0])


def solve(field: Field, rows: list[list], b: list) -> list | None:
    """One solution x of (rows) x = b, or None if inconsistent."""
    if len(rows) != len(b):
        raise DimensionError(f"{len(rows)} equations vs {len(b)} right-hand sides")
    if not rows:
        return []
    n = len(rows[0])
    aug = [list(r) + [bi] for r, bi in zip(rows, b)]
    red, pivots = rref(field, aug)
    x = zeros(field, n)
    for row, p in zip(red, pivots):
        if p == n:
            return None
        x[p] = row[n]
    return x


def express(field: Field, basis: list[list], v: list) -> list | None:
    """Coordinates of v in terms of the given vectors, or None if outside the span."""
    if not basis:
        return [] if all(field.is_zero(c) for c in v) else None
    cols = [[vec[i] for vec in basis] for i in range(len(v))]
    return solve(field, cols, v)


def nullspace(field: Field, rows: list[list]) -> list[list]:
    """Basis of {x : (rows) x = 0}."""
    if not rows:
        return []
    n = len(rows[0])
    red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = zeros(field, n)
        vec[fc] = field.one
        for row, p in zip(red, pivots):
            vec[p] = field.neg(row[fc])
        basis.append(vec)
    return basis


def invert(field: Field, rows: list[list]) -> list[list] | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("matrix is not square")
    aug = [list(r) + e for r, e in zip(rows, identity(field, n))]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def is_invertible(field: Field, rows: list[list]) -> bool:
    n = len(rows)
    return rank(field, rows) == n
