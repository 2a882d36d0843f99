"""Cell complexes with signed incidences and per-cell link diagrams.

Every cell carries a local orientation; every incidence and every link
element carries a sign relating two local orientations, and labels are
dualized (or, for surfaces, twisted by the involution) exactly when that
sign is -1.

Links by sphere dimension:

* ``-1``: empty (top cells).
* ``0``: two signed ``points`` (the cells on either side).
* ``1``: a cyclic ``word`` of signed cells; for surfaces also ``regions``,
  where ``regions[i]`` sits between ``word[i]`` and ``word[i + 1]``.
* ``2``: a planar graph given by a rotation system.  ``vertices[v]`` has a
  ``cell``, a ``sign`` and its ``darts`` in counterclockwise order, with
  ``darts[i]`` matching ``word[(sign * i) % k]`` of that cell's own link.
  ``edges[e]`` has a ``cell``, a ``sign`` and ``ends`` (two darts, or none
  for a closed loop); the outgoing label at ``ends[0]`` is ``a`` when the
  sign is +1 and ``a*`` otherwise.  ``regions`` are the traced faces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .triangulation import Triangulation, TriangulationError, perm_parity

__all__ = [
    "ComplexError",
    "Cell",
    "LinkVertex",
    "LinkEdge",
    "LinkDiagram",
    "CellComplex",
    "dual_complex",
    "trace_faces",
    "load_complex",
]


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    orientation: int = 1


@dataclass
class LinkVertex:
    cell: int
    sign: int
    darts: list[int]


@dataclass
class LinkEdge:
    cell: int
    sign: int
    ends: list[int]


@dataclass
class LinkDiagram:
    sphere: int
    points: list[tuple[int, int]] = field(default_factory=list)
    word: list[tuple[int, int]] = field(default_factory=list)
    regions: list = field(default_factory=list)
    vertices: list[LinkVertex] = field(default_factory=list)
    edges: list[LinkEdge] = field(default_factory=list)

    # planar graph helpers ----------------------------------------------------

    def dart_table(self) -> tuple[dict[int, tuple[int, int]], dict[int, tuple[int, int]]]:
        """dart -> (vertex, position) and dart -> (edge, end index)."""
        at_vertex = {}
        for v, vert in enumerate(self.vertices):
            for i, d in enumerate(vert.darts):
                if d in at_vertex:
                    raise ComplexError(f"dart {d} appears at two vertices")
                at_vertex[d] = (v, i)
        at_edge = {}
        for e, edge in enumerate(self.edges):
            for k, d in enumerate(edge.ends):
                if d in at_edge:
                    raise ComplexError(f"dart {d} is an end of two edges")
                at_edge[d] = (e, k)
        return at_vertex, at_edge

    def euler_components(self) -> list[int]:
        """V - E + F of each connected component (2 for every sphere graph)."""
        at_vertex, at_edge = self.dart_table()
        faces = trace_faces([v.darts for v in self.vertices], [e.ends for e in self.edges])
        parent = list(range(len(self.vertices)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge in self.edges:
            if len(edge.ends) == 2:
                a, b = (at_vertex[d][0] for d in edge.ends)
                parent[find(a)] = find(b)
        counts = {find(v): [0, 0, 0] for v in range(len(self.vertices))}
        for v in range(len(self.vertices)):
            counts[find(v)][0] += 1
        for edge in self.edges:
            if len(edge.ends) == 2:
                counts[find(at_vertex[edge.ends[0]][0])][1] += 1
        for face in faces:
            counts[find(at_vertex[face[0]][0])][2] += 1
        for v, vert in enumerate(self.vertices):
            if not vert.darts:
                counts[find(v)][2] += 1
        out = [c[0] - c[1] + c[2] for c in counts.values()]
        out += [2 for e in self.edges if not e.ends]
        return out

    # serialization -----------------------------------------------------------

    def to_json(self, cell: int) -> dict:
        out: dict = {"cell": cell, "sphere": self.sphere}
        if self.sphere == 0:
            out["points"] = [list(p) for p in self.points]
        elif self.sphere == 1:
            out["word"] = [list(p) for p in self.word]
            if self.regions:
                out["regions"] = [list(p) for p in self.regions]
        elif self.sphere == 2:
            out["vertices"] = [{"cell": v.cell, "sign": v.sign, "darts": list(v.darts)} for v in self.vertices]
            out["edges"] = [{"cell": e.cell, "sign": e.sign, "ends": list(e.ends)} for e in self.edges]
            out["regions"] = [{"cell": c, "darts": list(ds)} for c, ds in self.regions]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "LinkDiagram":
        allowed = {"cell", "sphere", "points", "word", "regions", "vertices", "edges"}
        _reject_unknown(data, allowed, "link")
        sphere = int(data["sphere"])
        diag = cls(sphere)
        if sphere == 0:
            diag.points = [(int(c), int(s)) for c, s in data.get("points", [])]
        elif sphere == 1:
            diag.word = [(int(c), int(s)) for c, s in data.get("word", [])]
            diag.regions = [(int(c), int(s)) for c, s in data.get("regions", [])]
        elif sphere == 2:
            for v in data.get("vertices", []):
                _reject_unknown(v, {"cell", "sign", "darts"}, "link vertex")
                diag.vertices.append(LinkVertex(int(v["cell"]), int(v["sign"]), [int(d) for d in v["darts"]]))
            for e in data.get("edges", []):
                _reject_unknown(e, {"cell", "sign", "ends"}, "link edge")
                diag.edges.append(LinkEdge(int(e["cell"]), int(e["sign"]), [int(d) for d in e["ends"]]))
            for r in data.get("regions", []):
                _reject_unknown(r, {"cell", "darts"}, "link region")
                diag.regions.append((int(r["cell"]), [int(d) for d in r["darts"]]))
        elif sphere != -1:
            raise ComplexError(f"unsupported link sphere dimension {sphere}")
        return diag


def _reject_unknown(data: dict, allowed: set[str], what: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ComplexError(f"unknown {what} fields: {sorted(unknown)}")


def trace_faces(rotations: list[list[int]], ends: list[list[int]]) -> list[list[int]]:
    """Faces of a planar map as cycles of darts.

    A face walk leaves along dart ``d``, arrives at the far end ``d'`` and
    continues with the dart preceding ``d'`` in counterclockwise order.
    """
    twin = {}
    for e in ends:
        if len(e) == 2:
            twin[e[0]], twin[e[1]] = e[1], e[0]
    where = {}
    for rot in rotations:
        for i, d in enumerate(rot):
            where[d] = rot
    seen: set[int] = set()
    faces = []
    for rot in rotations:
        for start in rot:
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                far = twin[d]
                r = where[far]
                d = r[(r.index(far) - 1) % len(r)]
            faces.append(face)
    return faces


class CellComplex:
    """A closed cell complex with signed incidences and link diagrams."""

    def __init__(
        self,
        dim: int,
        cells: Iterable[Cell],
        incidences: dict[int, list[tuple[int, int, int]]],
        links: dict[int, LinkDiagram],
        name: str = "",
        orientable: bool | None = None,
    ):
        self.dim = dim
        self.cells = list(cells)
        for i, c in enumerate(self.cells):
            if c.id != i:
                raise ComplexError("cell ids must be 0..N-1 in order")
        self.incidences = {int(k): [tuple(x) for x in v] for k, v in incidences.items()}
        self.links = dict(links)
        self.name = name
        self.orientable = orientable

    def __repr__(self) -> str:
        return f"CellComplex(dim={self.dim}, f={self.f_vector()}{', ' + self.name if self.name else ''})"

    def cells_of_dim(self, k: int) -> list[int]:
        return [c.id for c in self.cells if c.dim == k]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def link_of(self, cell_id: int) -> LinkDiagram:
        if not 0 <= cell_id < len(self.cells):
            raise ComplexError(f"unknown cell id {cell_id}")
        if cell_id not in self.links:
            if self.cells[cell_id].dim == self.dim:
                return LinkDiagram(-1)
            raise ComplexError(f"cell {cell_id} carries no link diagram")
        link = self.links[cell_id]
        problems = self._check_link(cell_id, link)
        if problems:
            raise ComplexError("; ".join(problems))
        return link

    def enumeration_order(self) -> list[int]:
        return [c.id for c in sorted(self.cells, key=lambda c: (-c.dim, c.id))]

    # validation ----------------------------------------------------------------

    def _above(self, cell_id: int) -> set[int]:
        """Cells whose closure contains ``cell_id``."""
        out: set[int] = set()
        stack = [cell_id]
        while stack:
            c = stack.pop()
            for h, _, _ in self.incidences.get(c, []):
                if h not in out:
                    out.add(h)
                    stack.append(h)
        return out

    def _check_link(self, cid: int, link: LinkDiagram) -> list[str]:
        problems = []
        above = self._above(cid)
        dim = self.cells[cid].dim

        def ref(c: int, want_dim: int, what: str) -> None:
            if not 0 <= c < len(self.cells):
                problems.append(f"cell {cid}: link {what} references missing cell {c}")
            elif c not in above:
                problems.append(f"cell {cid}: link {what} references cell {c}, which is not incident")
            elif self.cells[c].dim != want_dim:
                problems.append(f"cell {cid}: link {what} references cell {c} of dimension {self.cells[c].dim}")

        def sign(s: int, what: str) -> None:
            if s not in (1, -1):
                problems.append(f"cell {cid}: link {what} has sign {s}")

        for c, s in link.points:
            ref(c, dim + 1, "point")
            sign(s, "point")
        for c, s in link.word:
            ref(c, dim + 1, "word letter")
            sign(s, "word letter")
        if link.sphere == 1:
            for c, s in link.regions:
                ref(c, dim + 2, "region")
                sign(s, "region")
        if link.sphere == 2:
            for v in link.vertices:
                ref(v.cell, dim + 1, "vertex")
                sign(v.sign, "vertex")
            for e in link.edges:
                ref(e.cell, dim + 2, "edge")
                sign(e.sign, "edge")
                if len(e.ends) not in (0, 2):
                    problems.append(f"cell {cid}: link edge of cell {e.cell} has {len(e.ends)} ends")
            for c, _ in link.regions:
                ref(c, dim + 3, "region")
            if problems:
                return problems
            try:
                at_vertex, at_edge = link.dart_table()
            except ComplexError as exc:
                return [f"cell {cid}: {exc}"]
            if set(at_vertex) != set(at_edge):
                problems.append(f"cell {cid}: link darts do not match edge ends")
                return problems
            for chi in link.euler_components():
                if chi != 2:
                    problems.append(f"cell {cid}: link graph has V-E+F = {chi}, not 2")
                    break
            problems += self._check_vertex_words(cid, link, at_edge)
        return problems

    def _check_vertex_words(self, cid: int, link: LinkDiagram, at_edge) -> list[str]:
        problems = []
        for v in link.vertices:
            own = self.links.get(v.cell)
            if own is None or own.sphere != 1:
                continue
            word = own.word
            k = len(word)
            if k != len(v.darts):
                problems.append(f"cell {cid}: vertex for cell {v.cell} has {len(v.darts)} darts, word has {k}")
                continue
            for i, d in enumerate(v.darts):
                c, s = word[(v.sign * i) % k]
                e, end = at_edge[d]
                edge = link.edges[e]
                out = edge.sign if end == 0 else -edge.sign
                if edge.cell != c or out != s * v.sign:
                    problems.append(
                        f"cell {cid}: dart {d} of vertex {v.cell} disagrees with the word of cell {v.cell}"
                    )
                    break
        return problems

    def validate(self) -> list[str]:
        """Human-readable violations; empty when the complex is well formed."""
        problems = []
        for c, incs in self.incidences.items():
            if not 0 <= c < len(self.cells):
                problems.append(f"incidence list for missing cell {c}")
                continue
            for h, mult, s in incs:
                if not 0 <= h < len(self.cells):
                    problems.append(f"cell {c}: incidence references missing cell {h}")
                elif mult and self.cells[h].dim != self.cells[c].dim + 1:
                    problems.append(f"cell {c}: incidence to cell {h} skips a dimension")
                elif self.cells[h].dim <= self.cells[c].dim:
                    problems.append(f"cell {c}: incidence to cell {h} of no higher dimension")
                # multiplicity 0 records an attachment with no boundary degree
                if mult < 0 or s not in (1, -1):
                    problems.append(f"cell {c}: malformed incidence {(h, mult, s)}")
        for c, link in self.links.items():
            if not 0 <= c < len(self.cells):
                problems.append(f"link for missing cell {c}")
                continue
            problems += self._check_link(c, link)
        problems += self._check_boundary_squared()
        return problems

    def _check_boundary_squared(self) -> list[str]:
        """Signed incidences must compose to zero (coboundary of coboundary)."""
        problems = []
        for c in self.cells:
            total: dict[int, int] = {}
            for h, m, s in self.incidences.get(c.id, []):
                for h2, m2, s2 in self.incidences.get(h, []):
                    total[h2] = total.get(h2, 0) + m * s * m2 * s2
            bad = [h for h, v in total.items() if v]
            if bad:
                problems.append(f"cell {c.id}: signed incidences do not cancel at cells {sorted(bad)}")
        return problems

    # serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "cells": [[c.id, c.dim, c.orientation] for c in self.cells],
            "incidences": [[c, [list(x) for x in incs]] for c, incs in sorted(self.incidences.items())],
            "links": [self.links[c].to_json(c) for c in sorted(self.links)],
        }
        if self.name:
            out["name"] = self.name
        if self.orientable is not None:
            out["orientable"] = self.orientable
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CellComplex":
        _reject_unknown(data, {"dim", "cells", "incidences", "links", "name", "description", "orientable"}, "complex")
        for key in ("dim", "cells", "incidences", "links"):
            if key not in data:
                raise ComplexError(f"complex is missing {key!r}")
        cells = [Cell(int(i), int(d), int(o)) for i, d, o in data["cells"]]
        inc = {int(c): [(int(h), int(m), int(s)) for h, m, s in incs] for c, incs in data["incidences"]}
        links = {int(l["cell"]): LinkDiagram.from_json(l) for l in data["links"]}
        return cls(int(data["dim"]), cells, inc, links, name=data.get("name", ""), orientable=data.get("orientable"))


def load_complex(path: str | Path) -> CellComplex:
    """Load a complex file, or dualize a triangulation file."""
    with open(path) as fh:
        data = json.load(fh)
    if "gluings" in data:
        return dual_complex(Triangulation.from_json(data))
    return CellComplex.from_json(data)


# dual complexes ------------------------------------------------------------------


def dual_complex(t: Triangulation) -> CellComplex:
    """Poincare dual cell complex of a closed manifold triangulation.

    A k-face class becomes a (dim - k)-cell.  Codimension-2 cells get circle
    links in every dimension; in dimension 3 the vertices of the dual get
    planar link graphs and in dimension 2 the links carry the frame signs
    used by the unoriented surface sum.
    """
    problems = t.check_manifold()
    if problems:
        raise ComplexError("not a closed manifold triangulation: " + "; ".join(problems))
    D = t.dim
    sk = t.skeleton
    ids: dict[tuple[int, int], int] = {}
    cells = []
    for k in range(D + 1):  # dual dimension
        for c in range(sk.count(D - k)):
            ids[(k, c)] = len(cells)
            cells.append(Cell(len(cells), k, 1))

    incidences: dict[int, list[tuple[int, int, int]]] = {}
    for k in range(D):
        fdim = D - k
        for c, members in enumerate(sk.classes[fdim]):
            s, order = members[0]
            tally: dict[tuple[int, int], int] = {}
            for i in range(len(order)):
                sub = order[:i] + order[i + 1:]
                sc, sorder = sk.face(fdim - 1, s, sub)
                rel = perm_parity([sub.index(v) for v in sorder])
                key = (ids[(k + 1, sc)], (-1) ** i * rel)
                tally[key] = tally.get(key, 0) + 1
            incidences[ids[(k, c)]] = [(h, m, sg) for (h, sg), m in sorted(tally.items())]

    links: dict[int, LinkDiagram] = {}
    if D == 2:
        _surface_links(t, ids, links)
    elif D == 3:
        if not t.is_orientable():
            raise ComplexError("dual complexes of non-orientable 3-manifolds are not supported")
        _solid_links(t, ids, links)
    else:
        for c, members in enumerate(sk.classes[2]):
            s, order = members[0]
            word = []
            for x, y in ((order[0], order[1]), (order[1], order[2]), (order[2], order[0])):
                ec, eorder = sk.face(1, s, (x, y))
                word.append((ids[(D - 1, ec)], 1 if eorder == (x, y) else -1))
            links[ids[(D - 2, c)]] = LinkDiagram(1, word=word)
    return CellComplex(D, cells, incidences, links, name=t.name, orientable=t.is_orientable())


def _surface_links(t: Triangulation, ids, links) -> None:
    sk = t.skeleton
    # frame of each corner relative to its triangle, propagated around vertices
    corner: dict[tuple[int, int], int] = {}
    for members in sk.classes[0]:
        s0, (x0,) = members[0]
        corner[(s0, x0)] = 1
        stack = [(s0, x0)]
        while stack:
            s, x = stack.pop()
            for f in range(3):
                if f == x:
                    continue
                u, perm = t.gluings[(s, f)]
                nxt = (u, perm[x])
                want = -corner[(s, x)] * perm_parity(perm)
                if nxt not in corner:
                    corner[nxt] = want
                    stack.append(nxt)
    # frame of each edge embedding relative to the edge's first triangle
    edge_sign: dict[tuple[int, int], int] = {}
    for members in sk.classes[1]:
        s0, order0 = members[0]
        f0 = ({0, 1, 2} - set(order0)).pop()
        edge_sign[(s0, f0)] = 1
        u, perm = t.gluings[(s0, f0)]
        edge_sign.setdefault((u, perm[f0]), -perm_parity(perm))
    for c, members in enumerate(sk.classes[1]):
        s0, (a, b) = members[0]
        points = [(ids[(2, sk.face(0, s0, (v,))[0])], corner[(s0, v)]) for v in (a, b)]
        links[ids[(1, c)]] = LinkDiagram(0, points=points)
    for s in range(t.size):
        word, regions = [], []
        for i in range(3):
            x, y = i, (i + 1) % 3
            f = 3 - x - y
            ec = sk.face(1, s, (x, y))[0]
            word.append((ids[(1, ec)], edge_sign[(s, f)]))
            vc = sk.face(0, s, (y,))[0]
            regions.append((ids[(2, vc)], corner[(s, y)]))
        links[ids[(0, s)]] = LinkDiagram(1, word=word, regions=regions)


def _ccw(t: Triangulation, s: int, f: int) -> tuple[int, int, int]:
    """Vertices of the face opposite ``f`` in counterclockwise order seen from outside ``s``."""
    a, b, c = (v for v in range(4) if v != f)
    return (a, b, c) if (-1) ** f * t.orientation[s] == 1 else (a, c, b)


def _out_sign(t: Triangulation, s: int, ccw: tuple[int, int, int], x: int, y: int) -> int:
    """Outgoing exponent at the dart of face ``ccw`` pointing at edge {x, y}."""
    i = ccw.index(x)
    u, v = (x, y) if ccw[(i + 1) % 3] == y else (y, x)
    eorder = t.skeleton.face(1, s, (x, y))[1]
    return 1 if eorder == (v, u) else -1


def _solid_links(t: Triangulation, ids, links) -> None:
    sk = t.skeleton
    # circle links of dual 1-cells, read at the first embedding
    words: dict[int, tuple[list, tuple[int, int, int]]] = {}
    for c, members in enumerate(sk.classes[2]):
        s, order = members[0]
        f = ({0, 1, 2, 3} - set(order)).pop()
        ccw = _ccw(t, s, f)
        i = ccw.index(order[0])
        ccw = ccw[i:] + ccw[:i]
        word = []
        for m in range(3):
            x, y = ccw[m], ccw[(m + 1) % 3]
            ec = sk.face(1, s, (x, y))[0]
            word.append((ids[(2, ec)], _out_sign(t, s, ccw, x, y)))
        positions = tuple(order.index(v) for v in ccw)
        words[c] = (word, positions)
        links[ids[(1, c)]] = LinkDiagram(1, word=word)
    # point links of dual 2-cells: tail then head of the edge
    for c, members in enumerate(sk.classes[1]):
        s, (a, b) = members[0]
        links[ids[(2, c)]] = LinkDiagram(
            0, points=[(ids[(3, sk.face(0, s, (a,))[0])], -1), (ids[(3, sk.face(0, s, (b,))[0])], 1)]
        )
    # planar link graphs of dual 0-cells
    for s in range(t.size):
        vertices = []
        dart_of: dict[tuple[int, frozenset], int] = {}
        out_of: dict[int, int] = {}
        for f in range(4):
            ccw = _ccw(t, s, f)
            tc, order = sk.face(2, s, ccw)
            word, pos_a = words[tc]
            here = [order.index(v) for v in ccw]
            i = here.index(0)
            here = tuple(here[i:] + here[:i])
            sign = 1 if here == pos_a else -1
            darts = []
            for i in range(3):
                m = (sign * i) % 3
                x, y = order[pos_a[m]], order[pos_a[(m + 1) % 3]]
                d = 3 * f + i
                darts.append(d)
                dart_of[(f, frozenset((x, y)))] = d
                out_of[d] = _out_sign(t, s, ccw, x, y)
            vertices.append(LinkVertex(ids[(1, tc)], sign, darts))
        edges = []
        for x in range(4):
            for y in range(x + 1, 4):
                z, w = (v for v in range(4) if v not in (x, y))
                ends = sorted((dart_of[(z, frozenset((x, y)))], dart_of[(w, frozenset((x, y)))]))
                ec = sk.face(1, s, (x, y))[0]
                edges.append(LinkEdge(ids[(2, ec)], out_of[ends[0]], ends))
        diag = LinkDiagram(2, vertices=vertices, edges=edges)
        # each face surrounds one corner of the tetrahedron
        edge_of_dart = {d: (x, y) for (f, xy), d in dart_of.items() for x, y in [tuple(sorted(xy))]}
        regions = []
        for face in trace_faces([v.darts for v in vertices], [e.ends for e in edges]):
            common = set(range(4))
            for d in face:
                common &= set(edge_of_dart[d])
            if len(common) != 1:
                raise TriangulationError(f"could not match a link region of tetrahedron {s}")
            v = common.pop()
            regions.append((ids[(3, sk.face(0, s, (v,))[0])], face))
        diag.regions = regions
        links[ids[(0, s)]] = diag
