"""Rep(G) realized by explicit matrices and invariant tensors.

Each irreducible ``a`` is a matrix representation ``V_a``.  A trivalent
vertex with outgoing labels ``(a, b, c)`` is an invariant vector of
``V_a ⊗ V_b ⊗ V_c``, and an edge joining outgoing ``a`` to outgoing ``a*``
contracts the two indices with an invariant pairing ``P_a``.  Vertices with
a unit leg are the coevaluation, the inverse transpose of ``P_a``, so a
closed loop evaluates to ``dim V_a``.

Evaluating a graph is plain tensor contraction.  It serves both to generate
Rep(G) category data and as an independent oracle for the planar evaluator.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from ..scalar import QQ, FieldElement, NumberField, cyclotomic_field
from . import linalg
from .fusion import FusionData, canonical_rotation
from .groups import GroupData, GroupError

__all__ = ["UnsupportedGroupError", "Irrep", "RepModel", "irreps_for", "contract", "rationalize"]


class UnsupportedGroupError(GroupError):
    pass


@dataclass
class Irrep:
    name: str
    generator_images: list[list[list[FieldElement]]]


# sparse tensor networks -----------------------------------------------------------


def contract(factors: list[tuple[tuple, dict]], zero: FieldElement) -> FieldElement:
    """Sum over all variables of the product of sparse factors.

    Each factor is ``(variables, {assignment tuple: value})``; variables are
    hashable names, each appearing in exactly two factors or fewer.
    """
    factors = [(tuple(v), dict(t)) for v, t in factors]
    while True:
        counts: dict = {}
        for vs, _ in factors:
            for x in vs:
                counts[x] = counts.get(x, 0) + 1
        if not counts:
            break
        # eliminate the variable whose merged scope is smallest
        best = None
        for x in counts:
            scope = set()
            for vs, _ in factors:
                if x in vs:
                    scope.update(vs)
            if best is None or len(scope) < best[0]:
                best = (len(scope), x)
        x = best[1]
        touching = [f for f in factors if x in f[0]]
        rest = [f for f in factors if x not in f[0]]
        merged_vars: list = []
        for vs, _ in touching:
            for v in vs:
                if v not in merged_vars:
                    merged_vars.append(v)
        out_vars = tuple(v for v in merged_vars if v != x)
        merged = {(): None}
        cur_vars: tuple = ()
        table: dict = {(): zero + 1}
        for vs, t in touching:
            new_vars = cur_vars + tuple(v for v in vs if v not in cur_vars)
            pos = [new_vars.index(v) for v in vs]
            new_table: dict = {}
            for key, val in table.items():
                for tkey, tval in t.items():
                    ok = True
                    full = list(key) + [None] * (len(new_vars) - len(cur_vars))
                    for p, tv in zip(pos, tkey):
                        if full[p] is None:
                            full[p] = tv
                        elif full[p] != tv:
                            ok = False
                            break
                    if ok:
                        k = tuple(full)
                        new_table[k] = new_table.get(k, zero) + val * tval
            cur_vars, table = new_vars, new_table
        del merged
        keep = [cur_vars.index(v) for v in out_vars]
        reduced: dict = {}
        for key, val in table.items():
            k = tuple(key[p] for p in keep)
            reduced[k] = reduced.get(k, zero) + val
        rest.append((out_vars, {k: v for k, v in reduced.items() if not v.is_zero()}))
        factors = rest
    total = zero + 1
    for _, t in factors:
        total = total * t.get((), zero)
    return total


# representations ---------------------------------------------------------------------


def _all_matrices(group: GroupData, images: list, field: NumberField) -> list:
    n = len(images[0])
    mats: list = [None] * group.order
    mats[group.identity] = linalg.identity(field, n)
    queue = deque([group.identity])
    while queue:
        g = queue.popleft()
        for s, m in zip(group.generators, images):
            h = group.mul(g, s)
            if mats[h] is None:
                mats[h] = linalg.matmul(mats[g], m)
                queue.append(h)
    if any(m is None for m in mats):
        raise GroupError("generator images do not reach every element")
    for a, b in itertools.product(range(group.order), repeat=2):
        if linalg.matmul(mats[a], mats[b]) != mats[group.mul(a, b)]:
            raise GroupError("generator images do not define a homomorphism")
    return mats


def _mat(field: NumberField, rows) -> list[list[FieldElement]]:
    return [[field(x) for x in r] for r in rows]


def irreps_for(group: GroupData) -> tuple[NumberField, list[Irrep]]:
    """Irreducible representations over a small field for the supported groups."""
    name = group.name
    if name.startswith("z") and name[1:].isdigit():
        n = int(name[1:])
        field = QQ if n <= 2 else cyclotomic_field(n)
        z = field.gen() if n > 2 else field(-1 if n == 2 else 1)
        return field, [Irrep(f"chi{k}", [[[z ** k]]]) for k in range(n)]
    if name == "s3":
        f = QQ
        # generators: transposition (0 1) and 3-cycle 0->1->2->0; standard rep on the
        # sum-zero plane with basis e0-e2, e1-e2
        return f, [
            Irrep("1", [_mat(f, [[1]]), _mat(f, [[1]])]),
            Irrep("sgn", [_mat(f, [[-1]]), _mat(f, [[1]])]),
            Irrep("rho", [_mat(f, [[0, 1], [1, 0]]), _mat(f, [[-1, -1], [1, 0]])]),
        ]
    if name == "d4":
        f = QQ
        return f, [
            Irrep("1", [_mat(f, [[1]]), _mat(f, [[1]])]),
            Irrep("a", [_mat(f, [[1]]), _mat(f, [[-1]])]),
            Irrep("b", [_mat(f, [[-1]]), _mat(f, [[1]])]),
            Irrep("c", [_mat(f, [[-1]]), _mat(f, [[-1]])]),
            Irrep("E", [_mat(f, [[0, -1], [1, 0]]), _mat(f, [[1, 0], [0, -1]])]),
        ]
    if name == "q8":
        raise UnsupportedGroupError(
            "q8: the two-dimensional irreducible is quaternionic, so its self-duality "
            "pairing is antisymmetric and the symmetric vertex gauge does not apply"
        )
    raise UnsupportedGroupError(f"Rep({name}) is not supported; supported: zN, s3, d4")


class RepModel:
    def __init__(self, group: GroupData, field: NumberField, irreps: list[Irrep]):
        self.group = group
        self.field = field
        self.names = [r.name for r in irreps]
        self.mats = [_all_matrices(group, r.generator_images, field) for r in irreps]
        self.dims = [len(m[group.identity]) for m in self.mats]
        L = len(irreps)
        self._inv_cache: dict = {}
        # duals and pairings from invariants of V_a ⊗ V_b
        self.dual = [-1] * L
        self.coev: list = [None] * L
        for a in range(L):
            for b in range(L):
                inv = self.invariants((a, b))
                if inv:
                    if len(inv) != 1 or self.dual[a] != -1:
                        raise GroupError("irreducibles are not pairwise non-isomorphic")
                    self.dual[a] = b
                    da, db = self.dims[a], self.dims[b]
                    self.coev[a] = [[inv[0][i * db + j] for j in range(db)] for i in range(da)]
        for a in range(L):
            b = self.dual[a]
            if b < a:
                # the coevaluation of a* is the transpose of that of a
                self.coev[a] = linalg.transpose(self.coev[b])
            elif b == a and linalg.transpose(self.coev[a]) != self.coev[a]:
                raise UnsupportedGroupError(f"{self.names[a]} has an antisymmetric self-pairing")
        self.pairing = [linalg.transpose(linalg.inverse(c)) for c in self.coev]
        self._tensors: dict[tuple[int, int, int], list[dict]] = {}

    # invariants --------------------------------------------------------------------

    def invariants(self, labels: Sequence[int]) -> list[list[FieldElement]]:
        key = tuple(labels)
        if key in self._inv_cache:
            return self._inv_cache[key]
        field = self.field
        size = 1
        for a in key:
            size *= self.dims[a]
        rows = []
        for s in self.group.generators:
            m = [[field.one()]]
            for a in key:
                m = linalg.kron(m, self.mats[a][s])
            for i in range(size):
                rows.append([m[i][j] - (field.one() if i == j else field.zero()) for j in range(size)])
        basis = linalg.nullspace(rows, size, field) if rows else [
            [field.one() if j == i else field.zero() for j in range(size)] for i in range(size)
        ]
        self._inv_cache[key] = basis
        return basis

    def vertex_tensors(self, word: tuple[int, int, int]) -> list[dict]:
        """Declared basis of Hom(1, a⊗b⊗c) for the canonical rotation ``word``."""
        if word in self._tensors:
            return self._tensors[word]
        dims = [self.dims[a] for a in word]
        units = [k for k, a in enumerate(word) if a == 0]
        out: list[dict] = []
        if units:
            k = units[0]
            x, y = word[(k + 1) % 3], word[(k + 2) % 3]
            if self.dual[x] == y:
                t = {}
                for i in range(dims[(k + 1) % 3]):
                    for j in range(dims[(k + 2) % 3]):
                        v = self.coev[x][i][j]
                        if not v.is_zero():
                            idx = [0, 0, 0]
                            idx[(k + 1) % 3], idx[(k + 2) % 3] = i, j
                            t[tuple(idx)] = v
                out.append(t)
        else:
            for vec in self.invariants(word):
                t = {}
                for idx in itertools.product(*(range(d) for d in dims)):
                    flat = (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]
                    if not vec[flat].is_zero():
                        t[idx] = vec[flat]
                out.append(t)
        if len(out) > 1:
            raise UnsupportedGroupError("fusion multiplicity above 1 is not supported by the tensor model")
        for t in out:
            for r in range(1, 3):
                rot = word[r:] + word[:r]
                if rot == word:
                    moved = {idx[r:] + idx[:r]: v for idx, v in t.items()}
                    if moved != t:
                        raise UnsupportedGroupError(f"vertex {word} is not rotation invariant")
        self._tensors[word] = out
        return out

    def vertex_dim(self, word) -> int:
        return len(self.vertex_tensors(canonical_rotation(word)))

    def rotated_tensor(self, word: tuple[int, int, int], alpha: int = 0) -> dict:
        can = canonical_rotation(word)
        r = next(r for r in range(3) if can[r:] + can[:r] == tuple(word))
        t = self.vertex_tensors(can)[alpha]
        # position k of ``word`` is position (k + r) % 3 of the canonical word
        return {tuple(idx[(k + r) % 3] for k in range(3)): v for idx, v in t.items()}

    # evaluation ----------------------------------------------------------------------

    def evaluate(self, vertices: Sequence[tuple[Sequence[int], int]], edges: Sequence[tuple]) -> FieldElement:
        """Contract a closed trivalent graph.

        ``vertices[v] = (outgoing labels, alpha)`` and each edge joins darts
        ``(v, i)`` and ``(w, j)``.  Two-valent vertices ``(a, a*)`` are strands.
        """
        factors = []
        for v, (word, alpha) in enumerate(vertices):
            word = tuple(word)
            if len(word) == 3:
                factors.append((tuple(("d", v, i) for i in range(3)), self.rotated_tensor(word, alpha)))
            elif len(word) == 2:
                a, b = word
                if self.dual[a] != b:
                    return self.field.zero()
                t = {(i, j): x for i, row in enumerate(self.coev[a]) for j, x in enumerate(row) if not x.is_zero()}
                factors.append(((("d", v, 0), ("d", v, 1)), t))
            else:
                raise ValueError("only two- and three-valent vertices are supported")
        for (v, i), (w, j) in edges:
            a = vertices[v][0][i]
            if vertices[w][0][j] != self.dual[a]:
                return self.field.zero()
            p = self.pairing[a]
            t = {(x, y): p[x][y] for x in range(len(p)) for y in range(len(p[0])) if not p[x][y].is_zero()}
            factors.append(((("d", v, i), ("d", w, j)), t))
        return contract(factors, self.field.zero())

    def theta(self, word, alpha: int = 0) -> FieldElement:
        w = tuple(word)
        c = tuple(self.dual[x] for x in reversed(w))
        return self.evaluate([(w, alpha), (c, alpha)], [((0, 0), (1, 2)), ((0, 1), (1, 1)), ((0, 2), (1, 0))])

    def tet(self, a, b, c, d, e, f) -> FieldElement:
        """H(e) closed against the mirror of I(f)."""
        du = self.dual
        verts = [
            ((e, a, b), 0),
            ((du[e], c, d), 0),
            ((du[c], du[b], du[f]), 0),
            ((du[a], du[d], f), 0),
        ]
        edges = [((0, 0), (1, 0)), ((0, 1), (3, 0)), ((0, 2), (2, 1)), ((1, 1), (2, 0)), ((1, 2), (3, 1)), ((2, 2), (3, 2))]
        return self.evaluate(verts, edges)

    # category data ----------------------------------------------------------------------

    def fusion_data(self, name: str) -> FusionData:
        L = len(self.names)
        F = self.field
        r = range(L)
        du = self.dual
        fusion = {}
        for a, b, c in itertools.product(r, r, r):
            n = self.vertex_dim((a, b, du[c]))
            if n:
                fusion[(a, b, c)] = n
        qdim = [F(x) for x in self.dims]
        theta = {}
        for w in itertools.product(r, r, r):
            if canonical_rotation(w) == w and self.vertex_dim(w):
                theta[w + (0,)] = self.theta(w)
        fs = {}
        for a, b, c, d, e, f in itertools.product(r, repeat=6):
            if not (self.vertex_dim((e, a, b)) and self.vertex_dim((du[e], c, d))
                    and self.vertex_dim((f, b, c)) and self.vertex_dim((du[f], d, a))):
                continue
            th = theta[canonical_rotation((f, b, c)) + (0,)] * theta[canonical_rotation((du[f], d, a)) + (0,)]
            fs[(a, b, c, d, e, f, 0, 0, 0, 0)] = self.tet(a, b, c, d, e, f) * qdim[f] / th
        data = FusionData(name, F, list(self.names), list(du), fusion, qdim, theta, fs, F.one())
        return rationalize(data)


def rationalize(d: FusionData) -> FusionData:
    """Move data into QQ when every value is rational."""
    vals = list(d.qdim) + list(d.theta_table.values()) + list(d.fsymbols.values()) + [d.lam]
    if d.field == QQ or not all(v.is_rational() for v in vals):
        return d

    def q(v):
        return QQ(v.to_fraction())

    return FusionData(
        d.name, QQ, d.labels, d.dual, d.fusion, [q(x) for x in d.qdim],
        {k: q(v) for k, v in d.theta_table.items()}, {k: q(v) for k, v in d.fsymbols.items()}, q(d.lam),
        d.description,
    )
