"""Finite groups as multiplication tables, plus a small library."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

__all__ = ["GroupError", "GroupData", "cyclic_group", "symmetric_group_3", "dihedral_group_4",
           "quaternion_group", "trivial_group", "group_by_name", "GROUP_NAMES"]


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupData:
    """A finite group; element ``identity`` is the unit of ``table``."""

    name: str
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    element_names: tuple[str, ...] = field(default=())
    # generator images used by the representation builders, by element index
    generators: tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def check(self) -> list[str]:
        """Violations of the group axioms (empty when the table is a group)."""
        n = self.order
        problems = []
        if sorted(self.inverse) != list(range(n)) or len(self.inverse) != n:
            problems.append("inverse table is not a permutation")
        for row in self.table:
            if sorted(row) != list(range(n)):
                problems.append("multiplication table is not a Latin square")
                break
        for a in range(n):
            if self.table[self.identity][a] != a or self.table[a][self.identity] != a:
                problems.append(f"identity fails on element {a}")
            if self.table[a][self.inverse[a]] != self.identity:
                problems.append(f"inverse of element {a} is wrong")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                problems.append(f"associativity fails on {(a, b, c)}")
                break
        return problems

    def name_of(self, a: int) -> str:
        return self.element_names[a] if self.element_names else str(a)

    def to_json(self) -> dict:
        out = {
            "kind": "group",
            "name": self.name,
            "table": [list(r) for r in self.table],
            "identity": self.identity,
            "inverse": list(self.inverse),
        }
        if self.element_names:
            out["elements"] = list(self.element_names)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "GroupData":
        unknown = set(data) - {"kind", "name", "table", "identity", "inverse", "elements", "description"}
        if unknown:
            raise GroupError(f"unknown group fields: {sorted(unknown)}")
        g = cls(
            data.get("name", ""),
            tuple(tuple(int(x) for x in r) for r in data["table"]),
            int(data["identity"]),
            tuple(int(x) for x in data["inverse"]),
            tuple(data.get("elements", ())),
        )
        problems = g.check()
        if problems:
            raise GroupError("; ".join(problems))
        return g


def _from_elements(name: str, elements: list, mul, generators: list) -> GroupData:
    index = {e: i for i, e in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    ident = next(i for i, e in enumerate(elements) if all(mul(e, x) == x for x in elements))
    inv = tuple(next(j for j in range(len(elements)) if table[i][j] == ident) for i in range(len(elements)))
    names = tuple(str(e) for e in elements)
    return GroupData(name, table, ident, inv, names, tuple(index[g] for g in generators))


def cyclic_group(n: int) -> GroupData:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    return _from_elements(f"z{n}", list(range(n)), lambda a, b: (a + b) % n, [1 % n])


def trivial_group() -> GroupData:
    return _from_elements("trivial", [0], lambda a, b: 0, [])


def symmetric_group_3() -> GroupData:
    """Permutations of (0, 1, 2); ``p`` sends i to ``p[i]``, products compose right to left."""
    elements = sorted(itertools.permutations(range(3)))
    return _from_elements(
        "s3", elements, lambda p, q: tuple(p[q[i]] for i in range(3)), [(1, 0, 2), (1, 2, 0)]
    )


def dihedral_group_4() -> GroupData:
    """Symmetries of a square as pairs (k, f) meaning r^k s^f."""
    elements = [(k, f) for f in range(2) for k in range(4)]

    def mul(x, y):
        (k1, f1), (k2, f2) = x, y
        return ((k1 + (-1) ** f1 * k2) % 4, (f1 + f2) % 2)

    return _from_elements("d4", elements, mul, [(1, 0), (0, 1)])


def quaternion_group() -> GroupData:
    """Q8 as (sign, unit) with units 1, i, j, k."""
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(x, y):
        s, u = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    return _from_elements("q8", elements, mul, [(1, "i"), (1, "j")])


GROUP_NAMES = ("trivial", "z2", "z3", "z4", "z5", "z6", "s3", "d4", "q8")


def group_by_name(name: str) -> GroupData:
    """Library lookup: ``trivial``, ``zN``, ``s3``, ``d4``, ``q8``."""
    key = name.lower()
    if key in ("trivial", "z1", "1"):
        return trivial_group()
    if key.startswith("z") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    if key == "s3":
        return symmetric_group_3()
    if key == "d4":
        return dihedral_group_4()
    if key == "q8":
        return quaternion_group()
    raise GroupError(f"unknown group {name!r}; known: trivial, zN, s3, d4, q8")
