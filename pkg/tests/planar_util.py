"""Random planar trivalent graphs and labelings, for oracle comparisons."""

from __future__ import annotations

import random

from statesum.sphere_eval import SphereGraph, SphereVertex


def _faces(rot, twin):
    prev = {}
    for ds in rot:
        for i, x in enumerate(ds):
            prev[x] = ds[i - 1]
    seen, faces = set(), []
    for x0 in sorted(twin):
        if x0 in seen:
            continue
        face, x = [], x0
        while x not in seen:
            seen.add(x)
            face.append(x)
            x = prev[twin[x]]
        faces.append(face)
    return faces


def random_planar(rng: random.Random, chords: int) -> tuple[list[list[int]], dict[int, int]]:
    """Grow a theta graph by adding chords across faces; returns (rotations, twin)."""
    rot = [[0, 1, 2], [3, 4, 5]]
    twin = {0: 3, 3: 0, 1: 5, 5: 1, 2: 4, 4: 2}
    nd = 6
    for _ in range(chords):
        faces = _faces(rot, twin)
        face = rng.choice(faces)
        if len(face) < 2:
            continue
        x, y = rng.sample(face, 2)
        nv_before = len(rot)
        f_before = len(faces)
        done = False
        for rp in (0, 1):
            for rq in (0, 1):
                r2 = [list(ds) for ds in rot]
                t2 = dict(twin)
                pa, pb, pn, qa, qb, qn = range(nd, nd + 6)
                tx, ty = t2[x], t2[y]
                t2.update({x: pa, pa: x, tx: pb, pb: tx})
                if ty == x:
                    ty = pa
                t2.update({y: qa, qa: y, ty: qb, qb: ty, pn: qn, qn: pn})
                r2.append([pa, pb, pn] if rp else [pa, pn, pb])
                r2.append([qa, qb, qn] if rq else [qa, qn, qb])
                fs = _faces(r2, t2)
                v, e = len(r2), len(t2) // 2
                if v - e + len(fs) == 2 and len(fs) == f_before + 1:
                    rot, twin, done = r2, t2, True
                    break
            if done:
                break
        if done:
            nd += 6
        assert len(rot) in (nv_before, nv_before + 2)
    return rot, twin


def random_labeling(rng: random.Random, d, rot, twin):
    """Random admissible outgoing labels per dart, or None when none is found quickly."""
    vert = {x: v for v, ds in enumerate(rot) for x in ds}
    edges = sorted({min(x, twin[x]) for x in twin})
    lab: dict[int, int] = {}
    budget = [2000]

    def ok(v):
        ds = rot[v]
        if all(x in lab for x in ds):
            return d.vertex_dim(*(lab[x] for x in ds)) > 0
        return True

    def go(i):
        budget[0] -= 1
        if budget[0] < 0:
            return False
        if i == len(edges):
            return True
        x = edges[i]
        choices = list(range(d.rank))
        rng.shuffle(choices)
        for a in choices:
            lab[x], lab[twin[x]] = a, d.dual[a]
            if ok(vert[x]) and ok(vert[twin[x]]) and go(i + 1):
                return True
            del lab[x], lab[twin[x]]
        return False

    return lab if go(0) else None


def as_sphere_graph(d, rot, twin, lab, rng: random.Random | None = None) -> SphereGraph:
    """Vertices carry their counterclockwise labels; some are stored mirrored at random."""
    verts = []
    for ds in rot:
        word = tuple(lab[x] for x in ds)
        if rng is not None and rng.random() < 0.5:
            k = len(word)
            mword = tuple(d.dual[word[(-i) % k]] for i in range(k))
            verts.append(SphereVertex(list(ds), mword, ((), (0,)), mirrored=True))
        else:
            verts.append(SphereVertex(list(ds), word, ((), (0,))))
    edges = sorted({(min(x, twin[x]), max(x, twin[x])) for x in twin})
    return SphereGraph(verts, edges)


def as_tensor_network(rot, twin, lab):
    pos = {x: (v, i) for v, ds in enumerate(rot) for i, x in enumerate(ds)}
    verts = [(tuple(lab[x] for x in ds), 0) for ds in rot]
    edges = [(pos[x], pos[twin[x]]) for x in sorted(twin) if x < twin[x]]
    return verts, edges
