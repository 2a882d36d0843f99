"""Exact dense linear algebra over a number field (small matrices only)."""

from __future__ import annotations

from ..scalar import FieldElement, NumberField

Matrix = list[list[FieldElement]]


def identity(field: NumberField, n: int) -> Matrix:
    return [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum((row[k] * b[k][j] for k in range(len(b))), row[0] * 0) for j in range(m)])
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def kron(a: Matrix, b: Matrix) -> Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Matrix, ncols: int, field: NumberField) -> list[list[FieldElement]]:
    """Basis of {x : rows x = 0}, each vector scaled to clear denominators."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero() for _ in range(ncols)]
        v[fcol] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fcol]
        basis.append(v)
    return basis


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    field = a[0][0].field
    aug = [list(r) + identity(field, n)[i] for i, r in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [r[n:] for r in red]
