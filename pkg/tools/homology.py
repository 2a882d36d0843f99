"""Integral first homology of a triangulation, used to certify built-in data."""

from __future__ import annotations

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from statesum.triangulation import Triangulation


def _edge_sign(tri: Triangulation, s: int, a: int, b: int) -> tuple[int, int]:
    cid, order = tri.skeleton.face(1, s, (a, b))
    return cid, (1 if order == (a, b) else -1)


def first_homology(tri: Triangulation) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion coefficients) of H_1(tri; Z)."""
    sk = tri.skeleton
    nv, ne, nt = sk.count(0), sk.count(1), sk.count(2)
    d1 = [[0] * ne for _ in range(nv)]
    for e, members in enumerate(sk.classes[1]):
        s, (a, b) = members[0]
        d1[sk.face(0, s, (b,))[0]][e] += 1
        d1[sk.face(0, s, (a,))[0]][e] -= 1
    d2 = [[0] * nt for _ in range(ne)]
    for t, members in enumerate(sk.classes[2]):
        s, (a, b, c) = members[0]
        for (x, y), sign in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            e, es = _edge_sign(tri, s, x, y)
            d2[e][t] += sign * es
    rank_d1 = Matrix(d1).rank() if nv and ne else 0
    kernel_dim = ne - rank_d1
    if nt == 0 or ne == 0:
        return kernel_dim, ()
    snf = smith_normal_form(Matrix(d2), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    torsion = tuple(x for x in diag if x != 1)
    return kernel_dim - len(diag), torsion
