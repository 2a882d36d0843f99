"""Semi-simplicial triangulations of closed manifolds given by facet gluings.

A triangulation of dimension ``dim`` is a list of simplices (vertices
``0..dim``) and face pairings.  ``gluings[(s, f)] = (t, perm)`` glues the
facet of simplex ``s`` opposite vertex ``f`` to simplex ``t`` so that local
vertex ``i`` of ``s`` goes to ``perm[i]`` of ``t`` (so ``perm[f]`` is the
target facet).  Gluings are stored in both directions.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "TriangulationError",
    "Triangulation",
    "Skeleton",
    "perm_parity",
    "boundary_of_simplex",
    "kuhn_torus",
    "surface_from_word",
    "from_simplicial_complex",
]

Perm = tuple[int, ...]


class TriangulationError(ValueError):
    """Structural problem with a triangulation (not a closed manifold, bad gluing, ...)."""


def perm_parity(p: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


@dataclass
class Skeleton:
    """Face classes of every dimension.

    ``classes[k][c]`` lists the embeddings ``(simplex, local vertices)`` of the
    k-face class ``c``; the local vertex tuple is ordered by the class's
    canonical vertex order, so ``classes[k][c][0]`` defines that order.
    ``lookup[k][(s, frozenset)]`` returns ``(c, ordered local vertices)``.
    """

    dim: int
    classes: list[list[list[tuple[int, Perm]]]]
    lookup: list[dict[tuple[int, frozenset], tuple[int, Perm]]]
    self_identified: list[tuple[int, int]] = field(default_factory=list)

    def count(self, k: int) -> int:
        return len(self.classes[k])

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def face(self, k: int, simplex: int, verts: Iterable[int]) -> tuple[int, Perm]:
        return self.lookup[k][(simplex, frozenset(verts))]


class Triangulation:
    """Closed semi-simplicial triangulation (immutable by convention)."""

    def __init__(self, dim: int, size: int, gluings: dict[tuple[int, int], tuple[int, Perm]], name: str = ""):
        if dim < 1:
            raise TriangulationError("dimension must be at least 1")
        self.dim = dim
        self.size = size
        self.gluings = {k: (t, tuple(p)) for k, (t, p) in gluings.items()}
        self.name = name
        self._check_gluings()

    # construction -----------------------------------------------------------

    @classmethod
    def from_pairs(cls, dim: int, size: int, pairs: Iterable[Sequence], name: str = "") -> "Triangulation":
        """Build from ``[s, f, t, perm]`` records, each pairing given once or twice."""
        glu: dict[tuple[int, int], tuple[int, Perm]] = {}
        for rec in pairs:
            if len(rec) != 4:
                raise TriangulationError(f"gluing record must be [s, f, t, perm]: {rec!r}")
            s, f, t, perm = int(rec[0]), int(rec[1]), int(rec[2]), tuple(int(x) for x in rec[3])
            if perm[f] is None:
                raise TriangulationError("bad perm")
            back = (t, perm[f])
            inv = _inverse(perm)
            for key, val in (((s, f), (t, perm)), (back, (s, inv))):
                if key in glu and glu[key] != val:
                    raise TriangulationError(f"facet {key} glued twice inconsistently")
                glu[key] = val
        return cls(dim, size, glu, name=name)

    def _check_gluings(self) -> None:
        n = self.dim + 1
        for s in range(self.size):
            for f in range(n):
                if (s, f) not in self.gluings:
                    raise TriangulationError(f"facet {f} of simplex {s} is unglued (boundary not supported)")
        for (s, f), (t, perm) in self.gluings.items():
            if not (0 <= s < self.size and 0 <= t < self.size):
                raise TriangulationError(f"gluing references missing simplex: {(s, f, t)}")
            if sorted(perm) != list(range(n)):
                raise TriangulationError(f"gluing of {(s, f)} is not a permutation: {perm}")
            g = perm[f]
            if (t, g) == (s, f):
                raise TriangulationError(f"facet {f} of simplex {s} glued to itself")
            back = self.gluings.get((t, g))
            if back is None or back[0] != s or back[1] != _inverse(perm):
                raise TriangulationError(f"gluing of {(s, f)} is not involutive")

    # serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        recs = []
        for (s, f), (t, perm) in sorted(self.gluings.items()):
            if (s, f) <= (t, perm[f]):
                recs.append([s, f, t, list(perm)])
        out = {"dim": self.dim, "simplices": list(range(self.size)), "gluings": recs}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        unknown = set(data) - {"dim", "simplices", "gluings", "name", "description"}
        if unknown:
            raise TriangulationError(f"unknown triangulation keys: {sorted(unknown)}")
        simplices = data["simplices"]
        size = simplices if isinstance(simplices, int) else len(simplices)
        if not isinstance(simplices, int) and list(simplices) != list(range(size)):
            raise TriangulationError("simplex ids must be 0..N-1 in order")
        return cls.from_pairs(int(data["dim"]), size, data["gluings"], name=data.get("name", ""))

    @classmethod
    def load(cls, path: str | Path) -> "Triangulation":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self) -> str:
        return f"Triangulation(dim={self.dim}, size={self.size}{', ' + self.name if self.name else ''})"

    # combinatorics ------------------------------------------------------------

    @cached_property
    def skeleton(self) -> Skeleton:
        n = self.dim + 1
        classes: list[list[list[tuple[int, Perm]]]] = []
        lookup: list[dict] = []
        bad: list[tuple[int, int]] = []
        for k in range(self.dim + 1):
            cls_k: list[list[tuple[int, Perm]]] = []
            look: dict = {}
            for s in range(self.size):
                for verts in itertools.combinations(range(n), k + 1):
                    key = (s, frozenset(verts))
                    if key in look:
                        continue
                    cid = len(cls_k)
                    members = []
                    look[key] = (cid, verts)
                    queue = deque([(s, verts)])
                    while queue:
                        u, order = queue.popleft()
                        members.append((u, order))
                        oset = set(order)
                        for f in range(n):
                            if f in oset:
                                continue
                            t, perm = self.gluings[(u, f)]
                            img = tuple(perm[v] for v in order)
                            tkey = (t, frozenset(img))
                            seen = look.get(tkey)
                            if seen is None:
                                look[tkey] = (cid, img)
                                queue.append((t, img))
                            elif seen[1] != img:
                                bad.append((k, cid))
                    cls_k.append(members)
            classes.append(cls_k)
            lookup.append(look)
        # the top-dimensional classes are the simplices themselves
        return Skeleton(self.dim, classes, lookup, sorted(set(bad)))

    def f_vector(self) -> tuple[int, ...]:
        return self.skeleton.f_vector()

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector()))

    @cached_property
    def orientation(self) -> list[int] | None:
        """A coherent orientation sign per simplex, or None if non-orientable."""
        signs: list[int | None] = [None] * self.size
        for start in range(self.size):
            if signs[start] is not None:
                continue
            signs[start] = 1
            queue = deque([start])
            while queue:
                s = queue.popleft()
                for f in range(self.dim + 1):
                    t, perm = self.gluings[(s, f)]
                    want = -signs[s] * perm_parity(perm)
                    if signs[t] is None:
                        signs[t] = want
                        queue.append(t)
                    elif signs[t] != want:
                        return None
        return [int(x) for x in signs]  # type: ignore[arg-type]

    def is_orientable(self) -> bool:
        return self.orientation is not None

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            s = queue.popleft()
            for f in range(self.dim + 1):
                t = self.gluings[(s, f)][0]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return len(seen) == self.size

    def vertex_link_euler(self) -> list[int]:
        """Euler characteristic of each vertex link (dimension 3 only)."""
        if self.dim != 3:
            raise TriangulationError("vertex links are computed for 3-dimensional triangulations")
        sk = self.skeleton
        chi = [0] * sk.count(0)
        for members in sk.classes[1]:
            for s, (a, b) in members[:1]:
                chi[sk.face(0, s, (a,))[0]] += 1
                chi[sk.face(0, s, (b,))[0]] += 1
        for members in sk.classes[2]:
            s, tri = members[0]
            for v in tri:
                chi[sk.face(0, s, (v,))[0]] -= 1
        for s in range(self.size):
            for v in range(4):
                chi[sk.face(0, s, (v,))[0]] += 1
        return chi

    def check_manifold(self) -> list[str]:
        """Violations that stop this from being a closed combinatorial manifold."""
        problems = []
        sk = self.skeleton
        for k, cid in sk.self_identified:
            problems.append(f"{k}-face {cid} is identified with itself under a nontrivial permutation")
        if not self.is_connected():
            problems.append("triangulation is disconnected")
        if self.dim == 3:
            for v, chi in enumerate(self.vertex_link_euler()):
                if chi != 2:
                    problems.append(f"link of vertex {v} has Euler characteristic {chi}, not a 2-sphere")
        return problems

    def validate(self) -> None:
        problems = self.check_manifold()
        if problems:
            raise TriangulationError("; ".join(problems))

    def isomorphism_signature(self) -> str:
        """Relabelling-invariant canonical string (brute force over starting frames)."""
        best = None
        n = self.dim + 1
        for start in range(self.size):
            for p0 in itertools.permutations(range(n)):
                relabel = {start: 0}
                frames = {start: p0}  # frames[s][i] = canonical position of local vertex i
                order = [start]
                code = []
                i = 0
                while i < len(order):
                    s = order[i]
                    inv = _inverse(frames[s])
                    for cf in range(n):
                        f = inv[cf]
                        t, perm = self.gluings[(s, f)]
                        if t not in relabel:
                            relabel[t] = len(order)
                            order.append(t)
                            frames[t] = tuple(frames[s][_inverse(perm)[j]] for j in range(n))
                        tf = frames[t]
                        code.append((relabel[t], tuple(tf[perm[inv[j]]] for j in range(n))))
                    i += 1
                key = repr(code)
                if best is None or key < best:
                    best = key
        return best or ""


# library constructors ---------------------------------------------------------


def from_simplicial_complex(dim: int, simplices: Sequence[Sequence], name: str = "") -> Triangulation:
    """Glue top simplices given by vertex-label tuples along matching facets.

    Each facet label set must occur exactly twice.
    """
    facets: dict[frozenset, list[tuple[int, int]]] = {}
    for s, verts in enumerate(simplices):
        if len(set(verts)) != dim + 1:
            raise TriangulationError(f"simplex {s} has repeated vertices")
        for f in range(dim + 1):
            key = frozenset(v for i, v in enumerate(verts) if i != f)
            facets.setdefault(key, []).append((s, f))
    glu = {}
    for key, occ in facets.items():
        if len(occ) != 2:
            raise TriangulationError(f"facet {sorted(key, key=str)} occurs {len(occ)} times")
        (s, f), (t, g) = occ
        vs, vt = simplices[s], simplices[t]
        pos_t = {v: i for i, v in enumerate(vt)}
        perm = [0] * (dim + 1)
        for i, v in enumerate(vs):
            perm[i] = g if i == f else pos_t[v]
        perm_t = tuple(perm)
        glu[(s, f)] = (t, perm_t)
        glu[(t, g)] = (s, _inverse(perm_t))
    return Triangulation(dim, len(simplices), glu, name=name)


def boundary_of_simplex(dim: int) -> Triangulation:
    """The boundary of the (dim+1)-simplex, a triangulated dim-sphere."""
    verts = range(dim + 2)
    simplices = [tuple(v for v in verts if v != skip) for skip in verts]
    return from_simplicial_complex(dim, simplices, name=f"boundary of {dim + 1}-simplex")


def kuhn_torus(dim: int) -> Triangulation:
    """One-vertex triangulation of the dim-torus from the Kuhn subdivision of a cube.

    The cube [0,1]^dim is split into dim! simplices along monotone lattice
    paths; opposite faces are identified by translation.
    """
    simplices = []
    for order in itertools.permutations(range(dim)):
        pt = [0] * dim
        chain = [tuple(pt)]
        for axis in order:
            pt[axis] += 1
            chain.append(tuple(pt))
        simplices.append(chain)

    def facet_key(pts):
        # translate so the minimum corner is at the origin modulo the lattice
        base = tuple(min(p[i] for p in pts) for i in range(dim))
        return frozenset(tuple(p[i] - base[i] for i in range(dim)) for p in pts), base

    facets: dict[frozenset, list[tuple[int, int, tuple]]] = {}
    for s, chain in enumerate(simplices):
        for f in range(dim + 1):
            pts = [p for i, p in enumerate(chain) if i != f]
            key, base = facet_key(pts)
            facets.setdefault(key, []).append((s, f, base))
    glu = {}
    for key, occ in facets.items():
        if len(occ) != 2:
            raise TriangulationError("Kuhn facet pairing failed")
        (s, f, bs), (t, g, bt) = occ
        cs, ct = simplices[s], simplices[t]
        shift = tuple(bt[i] - bs[i] for i in range(dim))
        pos_t = {p: i for i, p in enumerate(ct)}
        perm = [0] * (dim + 1)
        for i, p in enumerate(cs):
            if i == f:
                perm[i] = g
            else:
                perm[i] = pos_t[tuple(p[j] + shift[j] for j in range(dim))]
        glu[(s, f)] = (t, tuple(perm))
        glu[(t, g)] = (s, _inverse(tuple(perm)))
    return Triangulation(dim, len(simplices), glu, name=f"T^{dim} (Kuhn)")


def surface_from_word(word: str, name: str = "") -> Triangulation:
    """Triangulated closed surface from a polygon edge word.

    ``word`` is a sequence like ``"a b A B"`` (capital = inverse).  The polygon
    is fan-triangulated from its first corner; each letter must appear twice.
    """
    letters = word.split()
    m = len(letters)
    if m < 3:
        raise TriangulationError("polygon word needs at least 3 edges")
    counts: dict[str, int] = {}
    for w in letters:
        counts[w.lower()] = counts.get(w.lower(), 0) + 1
    if any(c != 2 for c in counts.values()):
        raise TriangulationError("each edge letter must appear exactly twice")
    # triangle i has corners (0, i+1, i+2) for i = 0..m-3
    tris = [(0, i + 1, i + 2) for i in range(m - 2)]
    glu: dict[tuple[int, int], tuple[int, Perm]] = {}

    def pair(s, f, t, perm):
        glu[(s, f)] = (t, tuple(perm))
        glu[(t, perm[f])] = (s, _inverse(tuple(perm)))

    # interior diagonals (0, i+2) shared by triangles i and i+1
    for i in range(m - 3):
        # triangle i: local vertices 0->0, 2->i+2 ; opposite local 1
        # triangle i+1: local 0->0, 1->i+2 ; opposite local 2
        pair(i, 1, i + 1, (0, 2, 1))
    # boundary edges: polygon edge j runs from corner j to corner j+1
    where = {}
    for j in range(m):
        a, b = j, (j + 1) % m
        for t, tri in enumerate(tris):
            if a in tri and b in tri:
                la, lb = tri.index(a), tri.index(b)
                where[j] = (t, la, lb, 3 - la - lb)
                break
    seen: dict[str, int] = {}
    for j, w in enumerate(letters):
        key = w.lower()
        if key not in seen:
            seen[key] = j
            continue
        j0 = seen[key]
        t0, a0, b0, f0 = where[j0]
        t1, a1, b1, f1 = where[j]
        # edge j0 runs a0->b0 in the letter's direction if letter is lowercase
        start0, end0 = (a0, b0) if letters[j0].islower() else (b0, a0)
        start1, end1 = (a1, b1) if w.islower() else (b1, a1)
        perm = [0, 0, 0]
        perm[start0] = start1
        perm[end0] = end1
        perm[f0] = f1
        pair(t0, f0, t1, perm)
    return Triangulation(2, len(tris), glu, name=name or word)
