"""Spherical fusion category data in a fixed vertex gauge.

Labels are indices ``0..L-1`` with ``0`` the unit.  A trivalent vertex is
named by the cyclic triple of its outgoing labels read counterclockwise,
``Hom(1, a⊗b⊗c)``, whose dimension is ``N_{ab}^{c*}``.  Each cyclic class
has one declared basis (multiplicity index ``alpha``); the conjugate of a
vertex is the declared vertex of the reversed dual triple ``(c*, b*, a*)``.
Vertices with a unit leg are the plain strand, so ``theta(a, a*, 1) = d_a``.

The recoupling convention: let ``H(e)`` be the four-legged tree with
vertices ``(e, a, b)`` and ``(e*, c, d)`` and legs ``a, b, c, d`` in
counterclockwise order, and ``I(f)`` the tree with vertices ``(f, b, c)``
and ``(f*, d, a)``.  Then ``H(e) = sum_f F[a,b,c,d; e,f] I(f)``.
The tetrahedral symbol ``tet(a,b,c,d,e,f)`` is the evaluation of
``H(e)`` closed against the mirror image of ``I(f)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from ..scalar import FieldElement, NumberField

__all__ = ["FusionError", "FusionData", "ConsistencyReport", "verify_consistency", "canonical_rotation"]


class FusionError(ValueError):
    pass


def canonical_rotation(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(w)
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


@dataclass
class FusionData:
    name: str
    field: NumberField
    labels: list[str]
    dual: list[int]
    fusion: dict[tuple[int, int, int], int]
    qdim: list[FieldElement]
    theta_table: dict[tuple[int, int, int, int], FieldElement]
    fsymbols: dict[tuple[int, ...], FieldElement]
    lam: FieldElement
    description: str = ""
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {name: i for i, name in enumerate(self.labels)}
        self._admissible_cache: dict[tuple[int, int, int], int] = {}

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: int | str) -> int:
        if isinstance(label, str):
            try:
                return self._index[label]
            except KeyError:
                raise FusionError(f"unknown label {label!r}") from None
        if not 0 <= label < self.rank:
            raise FusionError(f"label index {label} out of range")
        return label

    def N(self, a: int, b: int, c: int) -> int:
        return self.fusion.get((a, b, c), 0)

    def vertex_dim(self, a: int, b: int, c: int) -> int:
        """dim Hom(1, a⊗b⊗c)."""
        key = (a, b, c)
        v = self._admissible_cache.get(key)
        if v is None:
            v = self._admissible_cache[key] = self.fusion.get((a, b, self.dual[c]), 0)
        return v

    def conj(self, w: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.dual[x] for x in reversed(w))

    def multiplicity_free(self) -> bool:
        return all(n <= 1 for n in self.fusion.values())

    def global_dimension(self) -> FieldElement:
        return sum((d * d for d in self.qdim), self.field.zero())

    def theta(self, a: int, b: int, c: int, alpha: int = 0) -> FieldElement:
        """Theta graph of the declared vertex on ``(a, b, c)`` with its conjugate (no λ)."""
        if alpha >= self.vertex_dim(a, b, c):
            raise FusionError(f"inadmissible vertex ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})")
        key = canonical_rotation((a, b, c)) + (alpha,)
        try:
            return self.theta_table[key]
        except KeyError:
            raise FusionError(f"theta value missing for {self._names(key[:3])}") from None

    def F(self, a: int, b: int, c: int, d: int, e: int, f: int, mult: Sequence[int] = (0, 0, 0, 0)) -> FieldElement:
        key = (a, b, c, d, e, f) + tuple(mult)
        v = self.fsymbols.get(key)
        if v is None:
            if self.f_admissible(a, b, c, d, e, f, mult):
                raise FusionError(f"F-symbol missing for {self._names((a, b, c, d, e, f))}")
            raise FusionError(f"inadmissible F-symbol {self._names((a, b, c, d, e, f))}")
        return v

    def f_admissible(self, a, b, c, d, e, f, mult=(0, 0, 0, 0)) -> bool:
        de, df = self.dual[e], self.dual[f]
        m = tuple(mult)
        return (
            m[0] < self.vertex_dim(e, a, b)
            and m[1] < self.vertex_dim(de, c, d)
            and m[2] < self.vertex_dim(f, b, c)
            and m[3] < self.vertex_dim(df, d, a)
        )

    def tet(self, a: int, b: int, c: int, d: int, e: int, f: int, mult: Sequence[int] = (0, 0, 0, 0)) -> FieldElement:
        """Tetrahedral symbol by the table path: ``F * theta(f,b,c) * theta(f*,d,a) / d_f``."""
        if not self.f_admissible(a, b, c, d, e, f, mult):
            raise FusionError(f"inadmissible tetrahedron {self._names((a, b, c, d, e, f))}")
        m = tuple(mult)
        return (
            self.F(a, b, c, d, e, f, m)
            * self.theta(f, b, c, m[2])
            * self.theta(self.dual[f], d, a, m[3])
            / self.qdim[f]
        )

    def _names(self, labels) -> str:
        return "(" + ", ".join(self.labels[x] for x in labels) + ")"

    def admissible_triples(self) -> list[tuple[int, int, int]]:
        r = range(self.rank)
        return [(a, b, c) for a in r for b in r for c in r if self.vertex_dim(a, b, c)]


@dataclass
class ConsistencyReport:
    problems: list[str] = field(default_factory=list)
    checked: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def add(self, check: str, problem: str) -> None:
        self.problems.append(f"{check}: {problem}")

    def __str__(self) -> str:
        lines = [f"{k}: {v} instances checked" for k, v in self.checked.items()]
        lines += [f"note: {n}" for n in self.notes]
        lines += self.problems or ["no violations"]
        return "\n".join(lines)


def _pentagon_tuples(d: FusionData):
    r = range(d.rank)
    du = d.dual
    for l1, l2, p in itertools.product(r, r, r):
        if not d.vertex_dim(p, l1, l2):
            continue
        for l3, q in itertools.product(r, r):
            if not d.vertex_dim(du[p], l3, q):
                continue
            for l4, l5 in itertools.product(r, r):
                if not d.vertex_dim(du[q], l4, l5):
                    continue
                for rr in r:
                    if not (d.vertex_dim(rr, l2, l3) and d.vertex_dim(du[rr], q, l1)):
                        continue
                    for s in r:
                        if d.vertex_dim(s, du[rr], l4) and d.vertex_dim(du[s], l5, l1):
                            yield l1, l2, l3, l4, l5, p, q, rr, s


def pentagon_defect(d: FusionData, l1, l2, l3, l4, l5, p, q, r, s) -> FieldElement:
    """LHS - RHS of the pentagon identity for one admissible labeling."""
    du = d.dual
    fa = d.fsymbols.get
    zero = d.field.zero()
    lhs = (fa((l1, l2, l3, q, p, r, 0, 0, 0, 0)) or zero) * (fa((l1, du[r], l4, l5, q, s, 0, 0, 0, 0)) or zero)
    rhs = zero
    for t in range(d.rank):
        x = fa((du[p], l3, l4, l5, q, t, 0, 0, 0, 0))
        if x is None:
            continue
        y = fa((l1, l2, du[t], l5, p, s, 0, 0, 0, 0))
        if y is None:
            continue
        z = fa((l3, l4, s, l2, t, du[r], 0, 0, 0, 0))
        if z is None:
            continue
        rhs = rhs + x * y * z
    return lhs - rhs


def verify_consistency(d: FusionData, pentagon: bool = True) -> ConsistencyReport:
    """Check unit, duality, dimension, theta, loop and pentagon constraints."""
    rep = ConsistencyReport()
    L = d.rank
    r = range(L)
    du = d.dual
    nm = d.labels
    one = d.field.one()

    # unit and duality
    n = 0
    if du[0] != 0:
        rep.add("unit", "label 0 is not self-dual")
    if d.qdim[0] != one:
        rep.add("unit", f"d_{nm[0]} = {d.qdim[0]}, expected 1")
    for a in r:
        n += 1
        if du[du[a]] != a:
            rep.add("duality", f"dual is not an involution at {nm[a]}")
        if d.qdim[a] != d.qdim[du[a]]:
            rep.add("duality", f"d_{nm[a]} != d_{nm[du[a]]}")
        if d.qdim[a].is_zero():
            rep.add("dimension", f"d_{nm[a]} = 0")
        for b in r:
            want = 1 if a == b else 0
            if d.N(0, a, b) != want or d.N(a, 0, b) != want:
                rep.add("unit", f"N_(1,{nm[a]})^{nm[b]} != {want}")
        # Hom(a a*, 1) = End(a) must be one-dimensional for a simple label
        if d.N(a, du[a], 0) != 1:
            rep.add("simple", f"End({nm[a]}) has dimension {d.N(a, du[a], 0)}, expected 1")
    for (a, b, c), m in d.fusion.items():
        if m < 0:
            rep.add("fusion", f"negative multiplicity at {d._names((a, b, c))}")
        if d.N(du[b], du[a], du[c]) != m:
            rep.add("duality", f"N_{d._names((a, b))}^{nm[c]} != N_(b*,a*)^(c*)")
    rep.checked["unit/duality"] = n
    if not d.multiplicity_free():
        rep.notes.append("fusion multiplicities above 1: loop and pentagon checks skipped")

    # dimensions are a character of the fusion ring
    for a, b in itertools.product(r, r):
        lhs = d.qdim[a] * d.qdim[b]
        rhs = sum((d.N(a, b, c) * d.qdim[c] for c in r), d.field.zero())
        if lhs != rhs:
            rep.add("dimension", f"d_{nm[a]} d_{nm[b]} != sum_c N_ab^c d_c")
    rep.checked["dimension"] = L * L

    if d.lam.is_zero():
        rep.add("lambda", "lambda is zero")

    # theta values: present, nonzero, conjugation symmetric, unit-normalized
    n = 0
    for a, b, c in d.admissible_triples():
        for alpha in range(d.vertex_dim(a, b, c)):
            n += 1
            try:
                th = d.theta(a, b, c, alpha)
            except ValueError as exc:
                rep.add("theta", str(exc))
                continue
            if th.is_zero():
                rep.add("theta", f"theta{d._names((a, b, c))} is zero (degenerate pairing)")
            cw = d.conj((a, b, c))
            if d.vertex_dim(*cw) > alpha and d.theta(*cw, alpha) != th:
                rep.add("theta", f"theta{d._names((a, b, c))} != theta of the conjugate triple")
    for a in r:
        if d.vertex_dim(a, du[a], 0) and d.theta(a, du[a], 0) != d.qdim[a]:
            rep.add("theta", f"theta({nm[a]}, {nm[du[a]]}, 1) != d_{nm[a]}")
    rep.checked["theta"] = n

    for key in d.fsymbols:
        if not d.f_admissible(*key[:6], key[6:]):
            rep.add("fsymbol", f"entry for inadmissible labels {d._names(key[:6])}")
    if not d.multiplicity_free():
        return rep
    n = 0
    for a, b, c, dd, e, f in itertools.product(r, repeat=6):
        if d.f_admissible(a, b, c, dd, e, f) and (a, b, c, dd, e, f, 0, 0, 0, 0) not in d.fsymbols:
            rep.add("fsymbol", f"missing entry {d._names((a, b, c, dd, e, f))}")
        n += 1
    rep.checked["fsymbol coverage"] = n

    # closing H(1) on legs (a, a*, c, c*) gives two loops
    n = 0
    for a, c in itertools.product(r, r):
        n += 1
        total = d.field.zero()
        for f in r:
            if d.f_admissible(a, du[a], c, du[c], 0, f):
                total += d.F(a, du[a], c, du[c], 0, f) * d.theta(f, du[a], c)
        if total != d.qdim[a] * d.qdim[c]:
            rep.add("loop", f"closing H(1) on {d._names((a, c))} gives {total}, not d_a d_c")
    rep.checked["loop"] = n

    if pentagon:
        n = 0
        for tup in _pentagon_tuples(d):
            n += 1
            if not pentagon_defect(d, *tup).is_zero():
                l1, l2, l3, l4, l5, p, q, rr, s = tup
                rep.add("pentagon", f"fails at (l1..l5, p, q, r, s) = {d._names(tup)}, involving "
                        f"F{d._names((l1, l2, l3, q, p, rr))} and F{d._names((l1, du[rr], l4, l5, q, s))}")
                if len(rep.problems) > 50:
                    break
        rep.checked["pentagon"] = n
    return rep
