"""Semisimple 1-categories for the n = 1 (surface) state sum."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..scalar import QQ, FieldElement, NumberField

__all__ = ["OneCatError", "OneCatData"]


class OneCatError(ValueError):
    pass


@dataclass
class OneCatData:
    """Simples ``p_i`` with circle values ``a_i`` and an involution ``r``.

    ``involution`` is the anti-automorphism used on unoriented surfaces; the
    identity permutation models the oriented case.
    """

    field: NumberField
    simples: list[str]
    circle_value: list[FieldElement]
    involution: list[int] = field(default_factory=list)
    name: str = ""
    lam: FieldElement | None = None

    def __post_init__(self):
        if not self.involution:
            self.involution = list(range(len(self.simples)))
        if self.lam is None:
            self.lam = self.field.one()

    @property
    def rank(self) -> int:
        return len(self.simples)

    def orbits(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(self.rank):
            if i not in seen:
                orb = tuple(sorted({i, self.involution[i]}))
                seen.update(orb)
                out.append(orb)
        return out

    def check(self) -> list[str]:
        problems = []
        n = self.rank
        if len(self.circle_value) != n:
            problems.append(f"circle_value has {len(self.circle_value)} entries for {n} simples")
            return problems
        r = self.involution
        if sorted(r) != list(range(n)):
            problems.append("involution is not a permutation of the simples")
            return problems
        for i in range(n):
            if r[r[i]] != i:
                problems.append(f"involution does not square to the identity at {self.simples[i]}")
            if self.circle_value[i].is_zero():
                problems.append(f"circle value of {self.simples[i]} is zero")
            if self.circle_value[r[i]] != self.circle_value[i]:
                problems.append(f"a_{self.simples[i]} != a_r({self.simples[i]})")
        if self.lam.is_zero():
            problems.append("lambda is zero")
        return problems

    def to_json(self) -> dict:
        return {
            "kind": "onecat",
            "name": self.name,
            "field": self.field.to_json(),
            "simples": list(self.simples),
            "circle_value": [v.format() for v in self.circle_value],
            "involution": [self.simples[j] for j in self.involution],
            "lambda": self.lam.format(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "OneCatData":
        unknown = set(data) - {"kind", "name", "field", "simples", "circle_value", "involution", "lambda", "description"}
        if unknown:
            raise OneCatError(f"unknown onecat fields: {sorted(unknown)}")
        fld = NumberField.from_json(data["field"]) if "field" in data else QQ
        simples = [str(s) for s in data["simples"]]
        index = {s: i for i, s in enumerate(simples)}
        inv = data.get("involution")
        try:
            perm = [index[str(s)] for s in inv] if inv else []
        except KeyError as exc:
            raise OneCatError(f"involution names unknown simple {exc}") from None
        d = cls(fld, simples, [fld.parse(str(v)) for v in data["circle_value"]], perm,
                data.get("name", ""), fld.parse(str(data.get("lambda", "1"))))
        problems = d.check()
        if problems:
            raise OneCatError("; ".join(problems))
        return d

    @classmethod
    def simple(cls, values: Sequence, involution: Sequence[int] = (), field: NumberField = QQ, name: str = "") -> "OneCatData":
        vals = [field(v) if not isinstance(v, FieldElement) else v for v in values]
        d = cls(field, [f"p{i}" for i in range(len(vals))], vals, list(involution), name)
        problems = d.check()
        if problems:
            raise OneCatError("; ".join(problems))
        return d
