"""Pointed modular data: a finite abelian group with a quadratic form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..scalar import FieldElement, NumberField, cyclotomic_field
from .groups import GroupData, GroupError, cyclic_group, group_by_name

__all__ = ["PointedError", "PointedModularData", "gen_pointed", "semion"]


class PointedError(ValueError):
    pass


@dataclass
class PointedModularData:
    field: NumberField
    group: GroupData
    q: list[FieldElement]
    lam: FieldElement
    name: str = ""

    def b(self, x: int, y: int) -> FieldElement:
        """Associated bicharacter q(x+y) / (q(x) q(y))."""
        return self.q[self.group.mul(x, y)] / (self.q[x] * self.q[y])

    def check(self, wrt: bool = False) -> list[str]:
        g = self.group
        n = g.order
        problems = list(g.check())
        if problems:
            return problems
        if not g.is_abelian():
            return [f"group {g.name} is not abelian"]
        if len(self.q) != n:
            return [f"q has {len(self.q)} values for a group of order {n}"]
        one = self.field.one()
        if self.q[g.identity] != one:
            problems.append("q(0) != 1")
        for x in range(n):
            k = g.element_order(x)
            if self.q[x] ** (k * k) != one:
                problems.append(f"q({g.name_of(x)}) is not a root of unity of the expected order")
            if self.q[g.inverse[x]] != self.q[x]:
                problems.append(f"q(-{g.name_of(x)}) != q({g.name_of(x)})")
        for x, y, z in itertools.product(range(n), repeat=3):
            if self.b(g.mul(x, y), z) != self.b(x, z) * self.b(y, z):
                problems.append(f"b is not bilinear at {(g.name_of(x), g.name_of(y), g.name_of(z))}")
                break
        for x in range(n):
            if x != g.identity and all(self.b(x, y) == one for y in range(n)):
                problems.append(f"b is degenerate: {g.name_of(x)} pairs trivially with everything")
        if self.lam.is_zero():
            problems.append("lambda is zero")
        if wrt and self.lam * self.lam * n != one:
            problems.append(f"lambda^2 * |A| = {(self.lam * self.lam * n).format()}, expected 1")
        return problems

    def gauss_sum(self, sign: int = 1) -> FieldElement:
        return sum((v ** sign for v in self.q), self.field.zero())

    def to_json(self) -> dict:
        g = self.group
        out = {"kind": "pointed", "name": self.name, "field": self.field.to_json()}
        if g.name and g.name[:1] == "z" and g.name[1:].isdigit():
            out["group"] = g.name
        else:
            out["group"] = g.to_json()
        out["q"] = [v.format() for v in self.q]
        out["lambda"] = self.lam.format()
        return out

    @classmethod
    def from_json(cls, data: dict, wrt: bool = False) -> "PointedModularData":
        unknown = set(data) - {"kind", "name", "field", "group", "q", "lambda", "description"}
        if unknown:
            raise PointedError(f"unknown pointed fields: {sorted(unknown)}")
        fld = NumberField.from_json(data["field"])
        gspec = data["group"]
        try:
            g = group_by_name(gspec) if isinstance(gspec, str) else GroupData.from_json(gspec)
        except GroupError as exc:
            raise PointedError(str(exc)) from None
        d = cls(fld, g, [fld.parse(str(v)) for v in data["q"]], fld.parse(str(data.get("lambda", "1"))),
                data.get("name", ""))
        problems = d.check(wrt)
        if problems:
            raise PointedError("; ".join(problems))
        return d


def gen_pointed(n: int, k: int, lam: FieldElement | None = None) -> PointedModularData:
    """Z/n with q(x) = zeta^(k x^2), zeta a primitive root of unity of order 2n (n even) or n (n odd).

    The field is Q(zeta_8n) so that the modular normalization 1/sqrt(n) is
    available; ``lam`` defaults to that value.
    """
    m = 8 * n
    K = cyclotomic_field(m)
    z = K.gen()
    order = 2 * n if n % 2 == 0 else n
    step = m // order
    q = [z ** ((step * k * x * x) % m) for x in range(n)]
    if lam is None:
        lam = _inv_sqrt(K, n)
    return PointedModularData(K, cyclic_group(n), q, lam, f"pointed_z{n}_{k}")


def _inv_sqrt(K: NumberField, n: int) -> FieldElement:
    """1/sqrt(n) in Q(zeta_8n), built prime by prime from Gauss sums."""
    m = 8 * n
    z = K.gen()
    root = K.one()
    p, rest = 2, n
    while rest > 1:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            root = root * p ** (e // 2)
            if e % 2:
                root = root * _sqrt_prime(K, z, m, p)
        p += 1
    return root.inverse()


def _sqrt_prime(K: NumberField, z: FieldElement, m: int, p: int) -> FieldElement:
    if p == 2:
        w = z ** (m // 8)
        return w + w ** 7
    w = z ** (m // p)
    g = sum((w ** ((x * x) % p) for x in range(p)), K.zero())
    # g^2 = p when p = 1 mod 4, and -p otherwise
    return g if p % 4 == 1 else g * (z ** (3 * m // 4))


def semion() -> PointedModularData:
    """Z/2 with q(1) = i over Q(zeta8); lambda = 1/sqrt 2."""
    K = cyclotomic_field(8)
    z = K.gen()
    i = z ** 2
    sqrt2 = z - z ** 3
    return PointedModularData(K, cyclic_group(2), [K.one(), i], sqrt2.inverse(), "semion")
