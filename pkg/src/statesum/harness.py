"""Seeded invariance fuzzing along random Pachner flip walks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .cells import CellComplex, dual_complex
from .pachner import random_flips
from .triangulation import Triangulation

__all__ = ["FlipReport", "flip_test"]


@dataclass
class FlipReport:
    values: list = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.values) and all(v == self.values[0] for v in self.values)

    def first_mismatch(self) -> int | None:
        for i, v in enumerate(self.values):
            if v != self.values[0]:
                return i
        return None


def flip_test(t: Triangulation, invariant: Callable[[CellComplex], object], flips: int, seed: int) -> FlipReport:
    """Evaluate ``invariant`` on the dual of ``t`` and after each of ``flips`` seeded moves."""
    if flips < 1:
        raise ValueError("flip count must be at least 1")
    rep = FlipReport()
    rep.values.append(invariant(dual_complex(t)))
    rep.trace.append(f"start: {t.size} simplices")
    for f in random_flips(t, flips, seed):
        rep.values.append(invariant(dual_complex(f.triangulation)))
        rep.trace.append(f"step {f.step}: {f.move} at {f.location}, {f.triangulation.size} simplices")
    return rep
