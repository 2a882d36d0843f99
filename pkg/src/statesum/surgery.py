"""Surgery invariants from pointed modular data.

A framed link is given by its linking matrix ``B``.  For pointed data the
colored invariant of a coloring ``c`` is

    J(c) = prod_i q(c_i)^B_ii * prod_{i<j} b(c_i, c_j)^B_ij

and the surgery sum is ``sum_c (prod_i lambda d_{c_i}) * lambda J(c)`` with
every ``d = 1``.  All values of ``q`` and ``b`` are roots of unity, so the
sum is accumulated as a histogram of exponents of one generator.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .catdata.pointed import PointedModularData
from .scalar import FieldElement

__all__ = ["SurgeryError", "FramedLink", "colored_invariant", "surgery_sum", "kirby_slide", "block_sum", "unknot"]

SIZE_GUARD = 10 ** 6


class SurgeryError(ValueError):
    pass


@dataclass(frozen=True)
class FramedLink:
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, matrix=()):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        m = len(rows)
        for row in rows:
            if len(row) != m:
                raise SurgeryError("linking matrix must be square")
        for i in range(m):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise SurgeryError(f"linking matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "matrix", rows)

    @property
    def components(self) -> int:
        return len(self.matrix)

    def framing(self, i: int) -> int:
        return self.matrix[i][i]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def unknot(framing: int) -> FramedLink:
    return FramedLink([[framing]])


def block_sum(a: FramedLink, b: FramedLink) -> FramedLink:
    """Disjoint union: block-diagonal linking matrix."""
    m, n = a.components, b.components
    rows = [list(r) + [0] * n for r in a.matrix] + [[0] * m + list(r) for r in b.matrix]
    return FramedLink(rows)


def colored_invariant(d: PointedModularData, L: FramedLink, coloring) -> FieldElement:
    coloring = list(coloring)
    if len(coloring) != L.components:
        raise SurgeryError(f"coloring has {len(coloring)} colors for {L.components} components")
    B = L.matrix
    out = d.field.one()
    for i, x in enumerate(coloring):
        out = out * d.q[x] ** B[i][i]
        for j in range(i + 1, len(coloring)):
            if B[i][j]:
                out = out * d.b(x, coloring[j]) ** B[i][j]
    return out


class _Roots:
    """Discrete logarithms in the cyclic group generated by the q values."""

    def __init__(self, d: PointedModularData):
        one = d.field.one()
        gens = [v for v in d.q if v != one]
        group = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in group:
                        group.add(y)
                        nxt.append(y)
            frontier = nxt
            if len(group) > 10000:
                raise SurgeryError("q values generate too large a group of roots of unity")
        self.order = len(group)
        # a finite subgroup of a field's units is cyclic; find a generator
        for z in group:
            powers = [one]
            for _ in range(self.order - 1):
                powers.append(powers[-1] * z)
            if len(set(powers)) == self.order:
                self.powers = powers
                self.log = {v: k for k, v in enumerate(powers)}
                return
        raise SurgeryError("no generator found for the roots of unity")  # unreachable


def surgery_sum(d: PointedModularData, L: FramedLink) -> FieldElement:
    """sum over colorings of (lambda^m) * lambda * J, exactly."""
    m = L.components
    n = d.group.order
    if n ** m > SIZE_GUARD:
        raise SurgeryError(f"size guard: {n}^{m} colorings exceed {SIZE_GUARD}")
    lam = d.lam
    if m == 0:
        return lam
    R = _Roots(d)
    M = R.order
    eq = [R.log[v] for v in d.q]
    eb = [[R.log[d.b(x, y)] for y in range(n)] for x in range(n)]
    B = L.matrix
    hist = [0] * M
    for c in itertools.product(range(n), repeat=m):
        e = 0
        for i in range(m):
            e += B[i][i] * eq[c[i]]
            row = eb[c[i]]
            for j in range(i + 1, m):
                if B[i][j]:
                    e += B[i][j] * row[c[j]]
        hist[e % M] += 1
    total = d.field.zero()
    for k, cnt in enumerate(hist):
        if cnt:
            total = total + R.powers[k] * cnt
    return lam ** (m + 1) * total


def kirby_slide(L: FramedLink, i: int, j: int, sign: int) -> FramedLink:
    """Slide component ``i`` over component ``j`` (0-based): B' = E B E^T with E = 1 + sign * e_ij."""
    m = L.components
    if i == j:
        raise SurgeryError("cannot slide a component over itself")
    if not (0 <= i < m and 0 <= j < m):
        raise SurgeryError(f"components {i}, {j} out of range for a {m}-component link")
    if sign not in (1, -1):
        raise SurgeryError("slide sign must be +1 or -1")
    B = [list(r) for r in L.matrix]
    # rows, then columns
    B[i] = [B[i][k] + sign * B[j][k] for k in range(m)]
    for r in B:
        r[i] = r[i] + sign * r[j]
    return FramedLink(B)
