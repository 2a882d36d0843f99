"""Bistellar (Pachner) moves and a seeded random flip walk.

A move of type ``"i-j"`` in dimension ``n`` (with ``i + j = n + 2``) takes
a face class ``B`` of dimension ``j - 1`` that lies in exactly ``i``
distinct top simplices, whose union is the join ``∂A * B`` for an abstract
``(i-1)``-simplex ``A``, and replaces it by ``A * ∂B``.  So in dimension 3
``"2-3"`` acts on a triangle, ``"3-2"`` on an edge of degree three, ``"1-4"``
on a tetrahedron and ``"4-1"`` on a vertex of degree four.

The random walk uses :class:`random.Random` (Mersenne Twister) seeded with
the given integer; the sequence of candidate draws is fixed by the seed.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Iterator

from .triangulation import Perm, Triangulation, TriangulationError, _inverse

__all__ = ["PachnerError", "Flip", "MOVES", "pachner_move", "move_candidates", "random_flips"]

log = logging.getLogger(__name__)

MOVES = {
    2: ("2-2", "1-3", "3-1"),
    3: ("2-3", "3-2", "1-4", "4-1"),
}


class PachnerError(TriangulationError):
    """The requested move is not admissible at the given location."""


def _parse(move: str, dim: int) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in move.split("-"))
    except ValueError:
        raise PachnerError(f"malformed move type {move!r}") from None
    if i < 1 or j < 1 or i + j != dim + 2:
        raise PachnerError(f"{move} is not a bistellar move in dimension {dim}")
    return i, j


def _region_labels(t: Triangulation, i: int, j: int, location: int) -> dict[int, tuple[int, ...]]:
    """Label the simplices around face class ``location`` with abstract vertices.

    Labels ``0..j-1`` form B, labels ``j..n+1`` form A.
    """
    n = t.dim + 1
    sk = t.skeleton
    if not 0 <= location < sk.count(j - 1):
        raise PachnerError(f"no {j - 1}-face with id {location}")
    members = sk.classes[j - 1][location]
    if len(members) != i:
        raise PachnerError(f"{j - 1}-face {location} has degree {len(members)}, need {i}")
    if len({s for s, _ in members}) != i:
        raise PachnerError(f"{j - 1}-face {location} meets some simplex more than once")
    full = set(range(t.dim + 2))
    s0, order = members[0]
    lab = [-1] * n
    for k, v in enumerate(order):
        lab[v] = k
    fresh = iter(range(j, t.dim + 2))
    for v in range(n):
        if lab[v] < 0:
            lab[v] = next(fresh)
    labels = {s0: tuple(lab)}
    stack = [s0]
    while stack:
        s = stack.pop()
        ls = labels[s]
        extra = (full - set(ls)).pop()
        for f in range(n):
            if ls[f] < j:
                continue  # facet misses part of B: boundary of the region
            u, perm = t.gluings[(s, f)]
            want = [-1] * n
            for k in range(n):
                want[perm[k]] = ls[k] if k != f else extra
            want = tuple(want)
            if u not in labels:
                if u not in {m[0] for m in members}:
                    raise PachnerError("region is not the expected join")
                labels[u] = want
                stack.append(u)
            elif labels[u] != want:
                raise PachnerError("region folds onto itself")
    expected = {frozenset(full - {x}) for x in range(j, t.dim + 2)}
    if {frozenset(v) for v in labels.values()} != expected or len(labels) != i:
        raise PachnerError("region is not the expected join")
    return labels


def pachner_move(t: Triangulation, location: int, move_type: str) -> Triangulation:
    """Apply ``move_type`` at face class ``location``; return a new triangulation.

    The result carries ``created_face = (dim, class id)`` naming the face
    that the inverse move would act on.
    """
    i, j = _parse(move_type, t.dim)
    n = t.dim + 1
    old = _region_labels(t, i, j, location)
    full = frozenset(range(t.dim + 2))
    a_part = full - set(range(j))
    new_tets = [tuple(sorted(full - {y})) for y in range(j)]

    keep = [s for s in range(t.size) if s not in old]
    index = {s: k for k, s in enumerate(keep)}
    base = len(keep)
    # old boundary facet (as label set) -> (region simplex, local facet)
    boundary: dict[frozenset, tuple[int, int]] = {}
    for s, ls in old.items():
        for f in range(n):
            if ls[f] < j:
                boundary[frozenset(ls) - {ls[f]}] = (s, f)
    new_facet: dict[frozenset, tuple[int, int]] = {}
    for k, lt in enumerate(new_tets):
        for g in range(n):
            new_facet[frozenset(lt) - {lt[g]}] = (base + k, g)

    glu: dict[tuple[int, int], tuple[int, Perm]] = {}
    for s in keep:
        for f in range(n):
            u, perm = t.gluings[(s, f)]
            if u in index:
                glu[(index[s], f)] = (index[u], perm)
    for k, lt in enumerate(new_tets):
        me = base + k
        for g in range(n):
            facet = frozenset(lt) - {lt[g]}
            if facet >= a_part:
                other, g2 = next(
                    (base + m, lo.index(next(iter(full - facet - {lt[g]}))))
                    for m, lo in enumerate(new_tets)
                    if m != k and facet <= set(lo)
                )
                lo = new_tets[other - base]
                perm = tuple(lo.index(lt[x]) if x != g else g2 for x in range(n))
                glu[(me, g)] = (other, perm)
                continue
            s, f = boundary[facet]
            ls = old[s]
            u, perm = t.gluings[(s, f)]
            through = [perm[ls.index(lt[x])] if x != g else perm[f] for x in range(n)]
            if u in index:
                p = tuple(through)
                glu[(me, g)] = (index[u], p)
                glu[(index[u], p[g])] = (me, _inverse(p))
            else:
                lu = old[u]
                other, g2 = new_facet[frozenset(lu) - {lu[perm[f]]}]
                lo = new_tets[other - base]
                p = tuple(lo.index(lu[through[x]]) if x != g else g2 for x in range(n))
                glu[(me, g)] = (other, p)

    try:
        result = Triangulation(t.dim, base + len(new_tets), glu, name=t.name)
    except TriangulationError as exc:
        raise PachnerError(f"move produced an invalid gluing: {exc}") from exc
    problems = result.check_manifold()
    if problems:
        raise PachnerError("move produced a non-manifold: " + "; ".join(problems))
    lt = new_tets[0]
    created = result.skeleton.face(i - 1, base, [lt.index(a) for a in sorted(a_part)])[0]
    result.created_face = (i - 1, created)
    return result


def move_candidates(t: Triangulation, move_type: str) -> list[int]:
    """Face classes where ``move_type`` passes the degree test (cheap prefilter)."""
    i, j = _parse(move_type, t.dim)
    out = []
    for cid, members in enumerate(t.skeleton.classes[j - 1]):
        if len(members) == i and len({s for s, _ in members}) == i:
            out.append(cid)
    return out


@dataclass(frozen=True)
class Flip:
    step: int
    move: str
    location: int
    triangulation: Triangulation


def random_flips(
    t: Triangulation,
    count: int,
    seed: int,
    max_growth: int = 6,
    max_attempts: int = 200,
) -> Iterator[Flip]:
    """Yield ``count`` successive random Pachner moves starting from ``t``.

    Moves that would grow the triangulation beyond ``t.size + max_growth``
    simplices are not offered.  Inadmissible draws are logged and resampled.
    """
    if count < 1:
        raise ValueError("flip count must be at least 1")
    if t.dim not in MOVES:
        raise PachnerError(f"no flip set for dimension {t.dim}")
    rng = random.Random(seed)
    cap = t.size + max_growth
    cur = t
    for step in range(1, count + 1):
        for _ in range(max_attempts):
            options = []
            for move in MOVES[t.dim]:
                i, j = _parse(move, t.dim)
                if cur.size - i + j > cap:
                    continue
                cands = move_candidates(cur, move)
                if cands:
                    options.append((move, cands))
            move, cands = options[rng.randrange(len(options))]
            loc = cands[rng.randrange(len(cands))]
            try:
                nxt = pachner_move(cur, loc, move)
            except PachnerError as exc:
                log.debug("step %d: %s at %d rejected (%s); resampling", step, move, loc, exc)
                continue
            cur = nxt
            yield Flip(step, move, loc, cur)
            break
        else:
            raise PachnerError(f"no admissible move found after {max_attempts} draws at step {step}")
