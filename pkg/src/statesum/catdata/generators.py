"""Generators for the shipped category data."""

from __future__ import annotations

import itertools

from ..scalar import QQ, NumberField
from .fusion import FusionData, canonical_rotation
from .groups import GroupData
from .repmodel import RepModel, irreps_for

__all__ = ["gen_vec_g", "gen_rep_g", "gen_fibonacci", "FIBONACCI_FIELD", "shipped_builders"]

FIBONACCI_FIELD = NumberField([-5, 0, 1], generator="g", generator_approx="2.2360679774997897")


def _label_names(g: GroupData) -> list[str]:
    if g.name.startswith("z") and g.name[1:].isdigit():
        return ["1", "g"] + [f"g{k}" for k in range(2, g.order)] if g.order > 1 else ["1"]
    return ["1" if i == g.identity else g.name_of(i).replace(" ", "") for i in range(g.order)]


def gen_vec_g(g: GroupData) -> FusionData:
    """Vec_G with trivial associator: every structure constant is 1."""
    order = [g.identity] + [i for i in range(g.order) if i != g.identity]
    pos = {x: k for k, x in enumerate(order)}
    names = _label_names(g)
    labels = [names[x] for x in order]
    dual = [pos[g.inverse[x]] for x in order]
    fusion = {(pos[a], pos[b], pos[g.mul(a, b)]): 1 for a in order for b in order}
    one = QQ.one()
    r = range(g.order)

    def adm(a, b, c):
        return g.mul(g.mul(order[a], order[b]), order[c]) == g.identity

    theta = {w + (0,): one for w in itertools.product(r, r, r) if adm(*w) and canonical_rotation(w) == w}
    fs = {}
    for a, b, c in itertools.product(r, r, r):
        for d in r:
            if g.mul(g.mul(g.mul(order[a], order[b]), order[c]), order[d]) != g.identity:
                continue
            e = pos[g.inverse[g.mul(order[a], order[b])]]
            f = pos[g.inverse[g.mul(order[b], order[c])]]
            fs[(a, b, c, d, e, f, 0, 0, 0, 0)] = one
    return FusionData(f"vec_{g.name}", QQ, labels, dual, fusion, [one] * g.order, theta, fs, one,
                      f"Vec_{g.name} with trivial associator")


def gen_rep_g(g: GroupData) -> FusionData:
    """Rep(G) from explicit matrices and invariant tensors; see :mod:`.repmodel`."""
    field, irreps = irreps_for(g)
    d = RepModel(g, field, irreps).fusion_data(f"rep_{g.name}")
    d.description = f"Rep({g.name}) with the symmetric pivotal structure"
    return d


def gen_fibonacci() -> FusionData:
    """Fibonacci category over Q(sqrt 5) with theta(tau, tau, tau) = 1."""
    K = FIBONACCI_FIELD
    phi = K.parse("(1 + g)/2")
    one = K.one()
    du = [0, 1]
    fusion = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1, (1, 1, 1): 1}

    def adm(a, b, c):
        return (a + b + c) != 1

    theta = {(0, 0, 0, 0): one, (0, 1, 1, 0): phi, (1, 1, 1, 0): one}
    th = {w: theta[canonical_rotation(w) + (0,)] for w in itertools.product((0, 1), repeat=3) if adm(*w)}
    qdim = [one, phi]

    def tet(a, b, c, d, e, f):
        # unit edges are strands; what remains is a loop, a theta graph or the full tetrahedron
        units = 6 - (a + b + c + d + e + f)
        return {0: -(phi ** -2), 1: one, 2: phi, 3: phi, 6: one}[units]

    fs = {}
    for a, b, c, d, e, f in itertools.product((0, 1), repeat=6):
        if adm(e, a, b) and adm(e, c, d) and adm(f, b, c) and adm(f, d, a):
            fs[(a, b, c, d, e, f, 0, 0, 0, 0)] = tet(a, b, c, d, e, f) * qdim[f] / (th[(f, b, c)] * th[(f, d, a)])
    return FusionData("fibonacci", K, ["1", "tau"], du, fusion, qdim, theta, fs, one,
                      "Fibonacci category, tau x tau = 1 + tau, d_tau the golden ratio")


def _onecat_oriented():
    from .onecat import OneCatData

    return OneCatData.simple([2, 3], name="onecat_23")


def _onecat_swap():
    from .onecat import OneCatData

    return OneCatData.simple([2, 2], involution=[1, 0], name="onecat_swap")


def _semion():
    from .pointed import semion

    return semion()


def _groups():
    from .groups import group_by_name

    return group_by_name


def shipped_builders() -> dict:
    """Name -> zero-argument builder for every shipped category file."""
    g = _groups()
    out = {}
    for n in ("trivial", "z2", "z3", "s3"):
        out[f"vec_{n}"] = (lambda n=n: gen_vec_g(g(n)))
    for n in ("z2", "z3", "s3", "d4"):
        out[f"rep_{n}"] = (lambda n=n: gen_rep_g(g(n)))
    out["fibonacci"] = gen_fibonacci
    out["semion"] = _semion
    out["onecat_23"] = _onecat_oriented
    out["onecat_swap"] = _onecat_swap
    return out
