"""Exact evaluation of labeled planar graphs on the 2-sphere.

A diagram is a rotation system: vertices list their darts counterclockwise,
edges pair darts, and every dart carries its outgoing label.  Vertices of
valence k carry a basis element of Hom(1, w_0 ⊗ ... ⊗ w_{k-1}), a left comb
fusion tree ``(z, alpha)``:

    T_1 = (w_0, w_1, z_1), T_i = (z_{i-1}*, w_i, z_i), ..., T_{k-2} = (z_{k-3}*, w_{k-2}, w_{k-1})

A mirrored vertex carries the conjugate tree, the mirror image of the comb
with every trivalent piece replaced by its conjugate.

Evaluation expands vertices into trivalent pieces and then reduces locally:
unit strands are erased, components evaluate independently, a bridge
vanishes, a bigon collapses to ``theta / d`` times a strand, and any larger
face is shrunk by an F-move on one of its edges.  The ``sweep`` argument
picks which minimal face and which edge are used, so different sweeps take
genuinely different reduction paths.  No lambda factor is applied.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .catdata.fusion import FusionData, FusionError, canonical_rotation
from .scalar import FieldElement

__all__ = [
    "EvaluationError",
    "Basis",
    "SphereVertex",
    "SphereGraph",
    "LabeledSphereDiagram",
    "evaluate",
    "evaluate_graph",
    "evaluate_circle",
    "tree_norm",
    "pairing",
    "gram_matrix",
    "sweep_check",
    "SweepReport",
    "theta_graph",
    "tetrahedron_graph",
]

Basis = tuple[tuple[int, ...], tuple[int, ...]]


class EvaluationError(ValueError):
    pass


# vertex bases -----------------------------------------------------------------------


def evaluate_circle(word: Sequence[int], d: FusionData) -> list[Basis]:
    """All comb fusion trees for the cyclic word, in a fixed order (possibly empty)."""
    w = tuple(word)
    k = len(w)
    du = d.dual
    if k == 0:
        return [((), ())]
    if k == 1:
        return [((), ())] if w[0] == 0 else []
    if k == 2:
        return [((), ())] if w[1] == du[w[0]] else []
    out: list[Basis] = []
    for z in itertools.product(range(d.rank), repeat=k - 3):
        pieces = _comb_words(w, z, du)
        dims = [d.vertex_dim(*p) for p in pieces]
        if all(dims):
            for alpha in itertools.product(*(range(n) for n in dims)):
                out.append((tuple(z), tuple(alpha)))
    return out


def _comb_words(w: tuple[int, ...], z: Sequence[int], du: Sequence[int]) -> list[tuple[int, int, int]]:
    k = len(w)
    if k == 3:
        return [w]
    out = [(w[0], w[1], z[0])]
    for i in range(1, k - 3):
        out.append((du[z[i - 1]], w[i + 1], z[i]))
    out.append((du[z[-1]], w[k - 2], w[k - 1]))
    return out


def tree_norm(d: FusionData, word: Sequence[int], basis: Basis) -> FieldElement:
    """Closed form of the pairing of a comb tree with its conjugate: prod theta / prod d_z."""
    w = tuple(word)
    one = d.field.one()
    if len(w) < 3:
        if basis != ((), ()) or basis not in evaluate_circle(w, d):
            raise EvaluationError(f"invalid basis element {basis} for word {d._names(w)}")
        return d.qdim[w[0]] if len(w) == 2 else one
    z, alpha = basis
    val = one
    for piece, al in zip(_comb_words(w, z, d.dual), alpha):
        if al >= d.vertex_dim(*piece):
            raise EvaluationError(f"invalid basis element {basis} for word {d._names(w)}")
        val = val * d.theta(*piece, al)
    for x in z:
        val = val / d.qdim[x]
    return val


# diagrams ---------------------------------------------------------------------------


@dataclass
class SphereVertex:
    """A vertex; ``darts[i]`` carries ``word[i]`` (or ``word[-i]*`` when mirrored)."""

    darts: list[int]
    word: tuple[int, ...]
    basis: Basis = ((), ())
    mirrored: bool = False


@dataclass
class SphereGraph:
    vertices: list[SphereVertex] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    loops: list[int] = field(default_factory=list)

    def dart_labels(self, d: FusionData) -> dict[int, int]:
        du = d.dual
        lab = {}
        for v in self.vertices:
            k = len(v.word)
            if len(v.darts) != k:
                raise EvaluationError("vertex word length differs from its valence")
            for i, dart in enumerate(v.darts):
                lab[dart] = du[v.word[(-i) % k]] if v.mirrored else v.word[i]
        return lab


# kept as an alias: a labeled diagram is exactly a graph with labels resolved
LabeledSphereDiagram = SphereGraph


class _State:
    """Mutable trivalent graph under reduction."""

    __slots__ = ("rot", "twin", "lab", "alpha", "vert", "next_dart", "next_vertex")

    def __init__(self):
        self.rot: dict[int, list[int]] = {}
        self.twin: dict[int, int] = {}
        self.lab: dict[int, int] = {}
        self.alpha: dict[int, int] = {}
        self.vert: dict[int, int] = {}
        self.next_dart = 0
        self.next_vertex = 0

    def copy(self) -> "_State":
        s = _State()
        s.rot = {v: list(ds) for v, ds in self.rot.items()}
        s.twin = dict(self.twin)
        s.lab = dict(self.lab)
        s.alpha = dict(self.alpha)
        s.vert = dict(self.vert)
        s.next_dart = self.next_dart
        s.next_vertex = self.next_vertex
        return s

    def new_dart(self) -> int:
        self.next_dart += 1
        return self.next_dart - 1

    def add_vertex(self, darts: list[int], alpha: int = 0) -> int:
        v = self.next_vertex
        self.next_vertex += 1
        self.rot[v] = list(darts)
        self.alpha[v] = alpha
        for x in darts:
            self.vert[x] = v
        return v

    def remove_vertex(self, v: int) -> None:
        for x in self.rot.pop(v):
            self.vert.pop(x, None)
        self.alpha.pop(v, None)

    def link(self, x: int, y: int) -> None:
        self.twin[x] = y
        self.twin[y] = x


def _build(g: SphereGraph, d: FusionData) -> tuple[_State, FieldElement]:
    """Expand vertices into trivalent pieces; returns the state and a scalar factor."""
    du = d.dual
    lab = g.dart_labels(d)
    st = _State()
    st.next_dart = max(lab, default=-1) + 1
    for x, y in g.edges:
        if x not in lab or y not in lab:
            raise EvaluationError(f"edge ({x}, {y}) ends at an unknown dart")
        if lab[y] != du[lab[x]]:
            raise EvaluationError(
                f"edge ({x}, {y}) joins outgoing labels {d.labels[lab[x]]} and {d.labels[lab[y]]}, which are not dual"
            )
        if x in st.twin or y in st.twin:
            raise EvaluationError("a dart is used by two edges")
        st.link(x, y)
    if len(st.twin) != len(lab):
        raise EvaluationError("some dart is not the end of any edge")
    st.lab = dict(lab)
    scalar = d.field.one()
    for v in g.vertices:
        w = tuple(v.word)
        k = len(w)
        if v.basis not in evaluate_circle(w, d):
            raise EvaluationError(f"basis element {v.basis} is not valid for the word {d._names(w)}")
        if k < 3:
            st.add_vertex(list(v.darts))
            continue
        # boundary dart carrying w_j
        bd = [v.darts[(-j) % k] if v.mirrored else v.darts[j] for j in range(k)]
        z, alpha = v.basis
        pieces = _comb_words(w, z, du)
        darts_of: list[list[int]] = []
        inner_prev = None
        for i, piece in enumerate(pieces):
            if k == 3:
                ds = bd[:]
            elif i == 0:
                ds = [bd[0], bd[1], None]
            elif i == len(pieces) - 1:
                ds = [None, bd[k - 2], bd[k - 1]]
            else:
                ds = [None, bd[i + 1], None]
            if ds[0] is None:
                ds[0] = inner_prev
            if ds[2] is None:
                out, back = st.new_dart(), st.new_dart()
                ds[2] = out
                st.link(out, back)
                inner_prev = back
            darts_of.append(ds)
        for i, (piece, ds) in enumerate(zip(pieces, darts_of)):
            if v.mirrored:
                ds = ds[::-1]
                labs = [du[x] for x in piece[::-1]]
            else:
                labs = list(piece)
            for x, a in zip(ds, labs):
                st.lab[x] = a
            st.add_vertex(ds, alpha[i])
    for a in g.loops:
        scalar = scalar * d.qdim[a]
    return st, scalar


# reduction ------------------------------------------------------------------------------


def _normalize(st: _State, d: FusionData) -> FieldElement | None:
    """Erase unit strands and two-valent vertices; None means the value is zero."""
    du = d.dual
    val = d.field.one()
    changed = True
    while changed:
        changed = False
        for x in [x for x, a in st.lab.items() if a == 0]:
            if x not in st.lab:
                continue
            y = st.twin[x]
            for z in (x, y):
                v = st.vert.pop(z)
                st.rot[v].remove(z)
                del st.lab[z]
                del st.twin[z]
            changed = True
        for v in list(st.rot):
            ds = st.rot[v]
            if len(ds) == 0:
                st.remove_vertex(v)
                changed = True
            elif len(ds) == 1:
                return None
            elif len(ds) == 2:
                x, y = ds
                if st.lab[y] != du[st.lab[x]]:
                    return None
                tx, ty = st.twin[x], st.twin[y]
                st.remove_vertex(v)
                if tx == y:
                    val = val * d.qdim[st.lab[x]]
                else:
                    st.link(tx, ty)
                for z in (x, y):
                    del st.twin[z]
                    del st.lab[z]
                changed = True
    return val


def _components(st: _State) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for v0 in sorted(st.rot):
        if v0 in seen:
            continue
        comp, stack = [], [v0]
        seen.add(v0)
        while stack:
            v = stack.pop()
            comp.append(v)
            for x in st.rot[v]:
                w = st.vert[st.twin[x]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _sub(st: _State, verts: list[int]) -> _State:
    s = _State()
    for v in verts:
        s.rot[v] = list(st.rot[v])
        s.alpha[v] = st.alpha[v]
        for x in st.rot[v]:
            s.vert[x] = v
            s.twin[x] = st.twin[x]
            s.lab[x] = st.lab[x]
    s.next_dart = st.next_dart
    s.next_vertex = st.next_vertex
    return s


def _faces(st: _State) -> list[list[int]]:
    prev = {}
    for ds in st.rot.values():
        for i, x in enumerate(ds):
            prev[x] = ds[i - 1]
    seen: set[int] = set()
    faces = []
    for x0 in sorted(st.lab):
        if x0 in seen:
            continue
        face, x = [], x0
        while x not in seen:
            seen.add(x)
            face.append(x)
            x = prev[st.twin[x]]
        faces.append(face)
    return faces


def _rotated(ds: list[int], x: int) -> list[int]:
    i = ds.index(x)
    return ds[i:] + ds[:i]


def _reduce(st: _State, d: FusionData, sweep: int) -> FieldElement:
    zero = d.field.zero()
    val = _normalize(st, d)
    if val is None:
        return zero
    if not st.rot:
        return val
    comps = _components(st)
    if len(comps) > 1:
        for comp in comps:
            part = _reduce_connected(_sub(st, comp), d, sweep)
            if part.is_zero():
                return zero
            val = val * part
        return val
    return val * _reduce_connected(st, d, sweep)


def _reduce_connected(st: _State, d: FusionData, sweep: int) -> FieldElement:
    zero = d.field.zero()
    du = d.dual
    faces = _faces(st)
    face_of = {x: i for i, f in enumerate(faces) for x in f}
    for x in st.lab:
        if face_of[x] == face_of[st.twin[x]]:
            return zero  # bridge: a non-unit strand cut by a circle
    m = min(len(f) for f in faces)
    cands = [f for f in faces if len(f) == m]
    face = cands[sweep % len(cands)]
    start = face[(sweep // len(cands)) % m]
    if m == 2:
        d1 = start
        d2 = face[1] if face[0] == d1 else face[0]
        u, v = st.vert[d1], st.vert[d2]
        p, q = d1, st.twin[d2]
        ru = st.rot[u]
        dc = next(x for x in ru if x not in (p, q))
        dcp = next(x for x in st.rot[v] if x not in (d2, st.twin[d1]))
        c, cp = st.lab[dc], st.lab[dcp]
        wu = tuple(st.lab[x] for x in _rotated(ru, dc))
        if cp != du[c] or st.alpha[u] != st.alpha[v]:
            return zero
        wv = tuple(st.lab[x] for x in _rotated(st.rot[v], dcp))
        if canonical_rotation(wv) != canonical_rotation(tuple(du[x] for x in reversed(wu))):
            return zero
        factor = d.theta(*wu, st.alpha[u]) / d.qdim[c]
        tc, tcp = st.twin[dc], st.twin[dcp]
        st.remove_vertex(u)
        st.remove_vertex(v)
        for x in (p, q, d2, st.twin[d1], dc, dcp):
            st.lab.pop(x, None)
            st.twin.pop(x, None)
        if tc == dcp:
            return factor * d.qdim[c]
        st.link(tc, tcp)
        return factor * _reduce(st, d, sweep)
    # F-move on the edge through ``start``
    de = start
    u, v = st.vert[de], st.vert[st.twin[de]]
    dep = st.twin[de]
    _, x1, x2 = _rotated(st.rot[u], de)
    _, x3, x4 = _rotated(st.rot[v], dep)
    e, a, b, c, dd = st.lab[de], st.lab[x1], st.lab[x2], st.lab[x3], st.lab[x4]
    au, av = st.alpha[u], st.alpha[v]
    total = zero
    for f in range(d.rank):
        n1, n2 = d.vertex_dim(f, b, c), d.vertex_dim(du[f], dd, a)
        for g1 in range(n1):
            for g2 in range(n2):
                coeff = d.fsymbols.get((a, b, c, dd, e, f, au, av, g1, g2))
                if coeff is None or coeff.is_zero():
                    continue
                s = st.copy()
                s.remove_vertex(u)
                s.remove_vertex(v)
                for x in (de, dep):
                    del s.lab[x]
                    del s.twin[x]
                df, dfp = s.new_dart(), s.new_dart()
                s.link(df, dfp)
                s.lab[df], s.lab[dfp] = f, du[f]
                s.add_vertex([df, x2, x3], g1)
                s.add_vertex([dfp, x4, x1], g2)
                total = total + coeff * _reduce(s, d, sweep)
    return total


# public entry points ---------------------------------------------------------------------


def evaluate_graph(g: SphereGraph, d: FusionData, sweep: int = 0) -> FieldElement:
    """Evaluate a closed labeled graph on the sphere (no lambda factor)."""
    try:
        st, scalar = _build(g, d)
    except FusionError as exc:
        raise EvaluationError(str(exc)) from None
    if scalar.is_zero():
        return scalar
    return scalar * _reduce(st, d, sweep)


evaluate = evaluate_graph


def theta_graph(word: Sequence[int], basis: Basis | None = None, other: Basis | None = None) -> SphereGraph:
    """The mutant theta: a vertex over ``word`` paired with the mirror of ``other``.

    The default basis element is the only one for words of length at most 3
    in a multiplicity-free category.
    """
    w = tuple(word)
    k = len(w)
    if basis is None:
        basis = ((), (0,)) if k == 3 else ((), ())
    other = basis if other is None else other
    a = SphereVertex(list(range(k)), w, basis)
    b = SphereVertex(list(range(k, 2 * k)), w, other, mirrored=True)
    # dart j of ``a`` carries w_j; the mirrored vertex carries w_j* at position -j
    edges = [(j, k + ((-j) % k)) for j in range(k)]
    return SphereGraph([a, b], edges)


def pairing(d: FusionData, x: Basis, y: Basis, word: Sequence[int], sweep: int = 0) -> FieldElement:
    """<x, y> = ev(x̄ ∪ y)."""
    w = tuple(word)
    basis = evaluate_circle(w, d)
    if x not in basis or y not in basis:
        raise EvaluationError(f"basis elements must belong to the word {d._names(w)}")
    return evaluate_graph(theta_graph(w, y, x), d, sweep)


def gram_matrix(d: FusionData, word: Sequence[int]) -> list[list[FieldElement]]:
    basis = evaluate_circle(word, d)
    return [[pairing(d, x, y, word) for y in basis] for x in basis]


def tetrahedron_graph(labels: Sequence[int], mult: Sequence[int] = (0, 0, 0, 0), dual: Sequence[int] = ()) -> SphereGraph:
    """H(e) closed against the mirror of I(f) for labels ``(a, b, c, d, e, f)``."""
    a, b, c, dd, e, f = labels
    du = list(dual)
    m = tuple(mult)
    verts = [
        SphereVertex([0, 1, 2], (e, a, b), ((), (m[0],))),
        SphereVertex([3, 4, 5], (du[e], c, dd), ((), (m[1],))),
        # mirror of (f, b, c): darts read (f, c, b) counterclockwise
        SphereVertex([6, 7, 8], (f, b, c), ((), (m[2],)), mirrored=True),
        SphereVertex([9, 10, 11], (du[f], dd, a), ((), (m[3],)), mirrored=True),
    ]
    # mirrored (f, b, c) at darts [6, 7, 8] carries (f*, c*, b*); mirrored (f*, d, a) carries (f, a*, d*)
    edges = [(0, 3), (1, 10), (2, 8), (4, 7), (5, 11), (6, 9)]
    return SphereGraph(verts, edges)


@dataclass
class SweepReport:
    values: list[FieldElement]

    @property
    def ok(self) -> bool:
        return all(v == self.values[0] for v in self.values)

    def __str__(self) -> str:
        status = "equal" if self.ok else "MISMATCH"
        return f"{len(self.values)} sweeps, {status}: " + ", ".join(v.format() for v in self.values)


def sweep_check(g: SphereGraph, d: FusionData, sweeps: int = 4) -> SweepReport:
    return SweepReport([evaluate_graph(g, d, s) for s in range(max(sweeps, 4))])
