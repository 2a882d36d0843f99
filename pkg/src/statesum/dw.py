"""Untwisted Dijkgraaf-Witten state sums and a homomorphism-counting oracle.

On an (n+1)-dimensional complex a labeling assigns a group element to each
codimension-1 cell.  It is flat when, around every codimension-2 cell, the
product of the adjacent labels (inverted where the link word carries sign
-1) is the identity.  The invariant is the number of flat labelings times
``|G|^-1`` for each top cell.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterator

from .catdata.groups import GroupData
from .cells import CellComplex
from .paths import resolve
from .scalar import QQ, FieldElement

__all__ = [
    "DWError",
    "GroupPresentation",
    "load_presentation",
    "dw_labelings",
    "dw_count",
    "dw_invariant",
    "hom_count_oracle",
    "brute_force_count",
]

SIZE_GUARD = 10 ** 7


class DWError(ValueError):
    pass


@dataclass
class GroupPresentation:
    """Generators are single letters; an upper-case letter is the inverse."""

    generators: list[str]
    relators: list[str]
    name: str = ""

    def __post_init__(self):
        for g in self.generators:
            if len(g) != 1 or not g.islower():
                raise DWError(f"generator {g!r} must be a single lower-case letter")
        if len(set(self.generators)) != len(self.generators):
            raise DWError("repeated generator")
        for r in self.relators:
            for ch in r:
                if ch.lower() not in self.generators:
                    raise DWError(f"relator {r!r} uses unknown generator {ch!r}")

    def letters(self, relator: str) -> list[tuple[int, int]]:
        return [(self.generators.index(ch.lower()), 1 if ch.islower() else -1) for ch in relator]

    @classmethod
    def from_json(cls, data: dict) -> "GroupPresentation":
        return cls(list(data.get("generators", [])), list(data.get("relators", [])), data.get("name", ""))


def load_presentation(name: str | os.PathLike) -> GroupPresentation:
    path = resolve(name, "pi1")
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DWError(f"no presentation file {path}") from None
    return GroupPresentation.from_json(data)


def hom_count_oracle(p: GroupPresentation, g: GroupData, guard: int = SIZE_GUARD) -> int:
    """|Hom(pi, G)| by trying every assignment of the generators."""
    n = g.order
    if n ** len(p.generators) > guard:
        raise DWError(f"size guard: {n}^{len(p.generators)} assignments exceed {guard}")
    rels = [p.letters(r) for r in p.relators]
    count = 0
    for x in itertools.product(range(n), repeat=len(p.generators)):
        if all(_product(g, [(x[i], s) for i, s in rel]) == g.identity for rel in rels):
            count += 1
    return count


def _product(g: GroupData, word) -> int:
    acc = g.identity
    for a, s in word:
        acc = g.table[acc][a if s == 1 else g.inverse[a]]
    return acc


def _setup(c: CellComplex):
    n = c.dim - 1
    if n < 2:
        raise DWError(f"Dijkgraaf-Witten needs n >= 2, i.e. a complex of dimension at least 3 (got {c.dim})")
    labels = c.cells_of_dim(n)
    walls = c.cells_of_dim(n - 1)
    words = {w: c.link_of(w).word for w in walls}
    pos = {x: i for i, x in enumerate(labels)}
    at: dict[int, list[int]] = {}
    for w in walls:
        last = max((pos[x] for x, _ in words[w]), default=-1)
        at.setdefault(last, []).append(w)
    return labels, words, at


def dw_labelings(c: CellComplex, g: GroupData) -> Iterator[dict[int, int]]:
    """Flat labelings, cells in id order, abandoning a prefix at the first closed non-flat word."""
    labels, words, at = _setup(c)
    beta: dict[int, int] = {}

    def flat(w):
        return _product(g, [(beta[x], s) for x, s in words[w]]) == g.identity

    if not all(flat(w) for w in at.get(-1, [])):
        return

    def rec(i):
        if i == len(labels):
            yield dict(beta)
            return
        for a in range(g.order):
            beta[labels[i]] = a
            if all(flat(w) for w in at.get(i, [])):
                yield from rec(i + 1)
        del beta[labels[i]]

    yield from rec(0)


def dw_count(c: CellComplex, g: GroupData) -> int:
    labels, words, at = _setup(c)
    checks = [[words[w] for w in at.get(i, [])] for i in range(len(labels))]
    tab, inv, e = g.table, g.inverse, g.identity
    assign = [0] * len(labels)
    pos = {x: i for i, x in enumerate(labels)}
    checks = [[[(pos[x], s) for x, s in word] for word in ch] for ch in checks]

    def rec(i):
        if i == len(labels):
            return 1
        total = 0
        for a in range(g.order):
            assign[i] = a
            ok = True
            for word in checks[i]:
                acc = e
                for j, s in word:
                    y = assign[j]
                    acc = tab[acc][y if s == 1 else inv[y]]
                if acc != e:
                    ok = False
                    break
            if ok:
                total += rec(i + 1)
        return total

    return rec(0)


def dw_invariant(c: CellComplex, g: GroupData) -> FieldElement:
    """|flat labelings| / |G|^(number of top cells), as a rational field element."""
    return QQ.rational(Fraction(dw_count(c, g), g.order ** len(c.cells_of_dim(c.dim))))


def brute_force_count(c: CellComplex, g: GroupData, guard: int = SIZE_GUARD) -> int:
    """Flat labelings by trying every map; the pruning-free oracle."""
    labels, words, _ = _setup(c)
    if g.order ** len(labels) > guard:
        raise DWError(f"size guard: {g.order}^{len(labels)} maps exceed {guard}")
    count = 0
    for x in itertools.product(range(g.order), repeat=len(labels)):
        beta = dict(zip(labels, x))
        if all(_product(g, [(beta[y], s) for y, s in word]) == g.identity for word in words.values()):
            count += 1
    return count
