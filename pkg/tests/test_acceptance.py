"""Acceptance criteria, one test each.

Every test prints a ``CRITERION n: PASS|FAIL`` line with its wall time and
must finish within the 60 s budget.  Run the file directly for the report
alone: ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import pytest

from statesum.catdata import OneCatData, gen_pointed, gen_rep_g, gen_vec_g, group_by_name, load_category, semion
from statesum.dw import dw_invariant, hom_count_oracle, load_presentation
from statesum.engine import (
    lambda_rescale_check,
    link_graphs,
    n1_state_sum,
    norm,
    norm_closed_form,
    state_sum,
)
from statesum.harness import flip_test
from statesum.registry import MANIFOLDS, TOPOLOGIES, load_manifold, load_triangulation
from statesum.sphere_eval import (
    evaluate_circle,
    evaluate_graph,
    gram_matrix,
    sweep_check,
    tetrahedron_graph,
    theta_graph,
)
from statesum.surgery import FramedLink, block_sum, kirby_slide, surgery_sum, unknot

BUDGET = 60.0
CATS = ["vec_z2", "vec_z3", "rep_s3", "fibonacci"]
THREE = [m for m in MANIFOLDS.values() if m.dim == 3]
TRIANGULATED3 = [m.name for m in THREE if m.kind == "triangulation"]
SURFACES = {"s2": 2, "t2": 0, "genus2": -2, "rp2": 1, "klein": 0}
FUSION = ["vec_trivial", "vec_z2", "vec_z3", "vec_s3", "rep_z2", "rep_z3", "rep_s3", "rep_d4", "fibonacci"]


def _report(n, ok, t0, detail=""):
    dt = time.perf_counter() - t0
    line = f"CRITERION {n}: {'PASS' if ok and dt < BUDGET else 'FAIL'} ({dt:.1f} s){' ' + detail if detail else ''}"
    print(line, flush=True)
    assert ok, line
    assert dt < BUDGET, line


def criterion_1():
    problems = []
    for cat in CATS:
        d = load_category(cat)
        for topo, names in TOPOLOGIES.items():
            names = [x for x in names if MANIFOLDS[x].dim == 3]
            values = {state_sum(load_manifold(x), d).value for x in names}
            if len(values) > 1:
                problems.append(f"{cat}/{topo}: decompositions disagree")
        for name in TRIANGULATED3:
            rep = flip_test(load_triangulation(name), lambda c: state_sum(c, d).value, 100, 42)
            if not rep.ok or len(rep.values) != 101:
                problems.append(f"{cat}/{name}: flip {rep.first_mismatch()} changed the value")
    return not problems, "; ".join(problems)


def criterion_2():
    fib = load_category("fibonacci")
    want = fib.field("(5 - g)/10")
    ok = all(state_sum(load_manifold(x), fib).value == want for x in ("s3_2tet", "s3_minimal", "s3_bdy4simplex"))
    ok &= want == fib.global_dimension().inverse()
    z2 = load_category("vec_z2")
    ok &= all(state_sum(load_manifold(x), z2).value.to_fraction() == Fraction(1, 2) for x in TOPOLOGIES["s3"])
    return ok, ""


def criterion_3():
    bad = []
    for g in ("z2", "z3", "s3"):
        G = group_by_name(g)
        vec, rep = gen_vec_g(G), gen_rep_g(G)
        for topo in ("s3", "rp3", "l31", "s2xs1", "t3"):
            for name in TOPOLOGIES[topo]:
                c = load_manifold(name)
                a = state_sum(c, vec).value.to_fraction()
                b = state_sum(c, rep).value.to_fraction()
                w = dw_invariant(c, G).to_fraction()
                if not a == b == w:
                    bad.append(f"{g}/{name}: {a}, {b}, {w}")
    return not bad, "; ".join(bad)


def criterion_4():
    bad = []
    for m in MANIFOLDS.values():
        if m.dim < 3:
            continue
        p = load_presentation(m.topology)
        for g in ("z2", "z3", "s3"):
            G = group_by_name(g)
            want = Fraction(hom_count_oracle(p, G), G.order)
            if dw_invariant(load_manifold(m.name), G).to_fraction() != want:
                bad.append(f"{g}/{m.name}")
    z2 = group_by_name("z2")
    examples = {"t3": 4, "rp3": 1, "s3_2tet": Fraction(1, 2)}
    for name, v in examples.items():
        if dw_invariant(load_manifold(name), z2).to_fraction() != v:
            bad.append(f"example {name}")
    return not bad, "; ".join(bad)


def criterion_5():
    bad = []
    plain = OneCatData.simple([2, 3])
    swap = OneCatData.simple([5, 5], involution=[1, 0])
    for name, chi in SURFACES.items():
        c = load_manifold(name)
        want = Fraction(2) ** chi + Fraction(3) ** chi
        if MANIFOLDS[name].orientable and n1_state_sum(c, plain).value.to_fraction() != want:
            bad.append(f"oriented {name}")
        if n1_state_sum(c, plain, oriented=False).value.to_fraction() != want:
            bad.append(f"unoriented {name}")
        got = n1_state_sum(c, swap, oriented=False).value.to_fraction()
        if got != (2 * Fraction(5) ** chi if MANIFOLDS[name].orientable else 0):
            bad.append(f"swap {name}: {got}")
    return not bad, "; ".join(bad)


def criterion_6():
    bad = []
    for cat in FUSION:
        d = load_category(cat)
        for a in range(d.rank):
            if norm(d, a, 2) != norm_closed_form(d, a, 2):
                bad.append(f"{cat} 2-handle {a}")
        for w in d.admissible_triples():
            for x in evaluate_circle(w, d):
                if norm(d, x, 1, None, w) != norm_closed_form(d, x, 1, None, w):
                    bad.append(f"{cat} 1-handle {w}")
        if norm(d, None, 3) != norm_closed_form(d, None, 3):
            bad.append(f"{cat} 3-handle")
    return not bad, "; ".join(bad)


def criterion_7():
    bad = []
    for cat in CATS:
        d = load_category(cat)
        mu = d.field(3) if d.field.degree == 1 else d.field("2 + g")
        for m in THREE:
            rep = lambda_rescale_check(load_manifold(m.name), d, mu)
            if not rep.ok:
                bad.append(f"{cat}/{m.name}")
    d = OneCatData.simple([2, 3])
    for name in SURFACES:
        for mu in (2, Fraction(-1, 3)):
            if not lambda_rescale_check(load_manifold(name), d, mu, oriented=False).ok:
                bad.append(f"n1/{name}")
    return not bad, "; ".join(bad)


def criterion_8():
    bad = []
    s = semion()
    if surgery_sum(s, FramedLink()) != s.lam:
        bad.append("empty link")
    if s.lam * s.lam != s.field("1/2") or surgery_sum(s, unknot(0)) != s.field.one():
        bad.append("0-framed unknot")
    rng = random.Random(42)
    data = [s] + [gen_pointed(n, k) for n, k in ((2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2))]

    def rand_link(m):
        B = [[0] * m for _ in range(m)]
        for i in range(m):
            B[i][i] = rng.randint(-3, 3)
            for j in range(i):
                B[i][j] = B[j][i] = rng.randint(-2, 2)
        return FramedLink(B)

    for trial in range(1000):
        d = rng.choice(data)
        m = rng.randint(2, 4)
        L = rand_link(m)
        i, j = rng.sample(range(m), 2)
        if surgery_sum(d, kirby_slide(L, i, j, rng.choice((1, -1)))) != surgery_sum(d, L):
            bad.append(f"slide trial {trial}")
    for d in data:
        for sign in (1, -1):
            factor = d.lam * sum((d.q[c] ** sign for c in range(d.group.order)), d.field.zero())
            L = rand_link(rng.randint(0, 3))
            if surgery_sum(d, block_sum(L, unknot(sign))) != surgery_sum(d, L) * factor:
                bad.append(f"{d.name} unknot {sign}")
    return not bad, "; ".join(bad[:5])


def criterion_9():
    bad = []
    for cat in CATS:
        d = load_category(cat)
        for m in THREE:
            for _, g in link_graphs(load_manifold(m.name), d):
                if not sweep_check(g, d).ok:
                    bad.append(f"sweep {cat}/{m.name}")
                    break
    for cat in FUSION:
        d = load_category(cat)
        for a, b, c in d.admissible_triples():
            for al in range(d.vertex_dim(a, b, c)):
                if d.theta(a, b, c, al) != evaluate_graph(theta_graph((a, b, c), ((), (al,))), d):
                    bad.append(f"theta {cat}")
        for labels in itertools.product(range(d.rank), repeat=6):
            if d.f_admissible(*labels):
                if d.tet(*labels, (0, 0, 0, 0)) != evaluate_graph(tetrahedron_graph(labels, dual=d.dual), d):
                    bad.append(f"tet {cat} {labels}")
        for k in (2, 3, 4):
            for w in itertools.product(range(d.rank), repeat=k):
                G = gram_matrix(d, w)
                for i, row in enumerate(G):
                    for j, x in enumerate(row):
                        if (i == j) == x.is_zero():
                            bad.append(f"gram {cat} {w}")
    return not bad, "; ".join(bad[:5])


def criterion_10():
    bad = []
    for cat in CATS:
        d = load_category(cat)
        inputs = [load_manifold(x) for x in TRIANGULATED3]
        from statesum.cells import dual_complex
        from statesum.pachner import random_flips

        for name in TRIANGULATED3:
            *_, last = random_flips(load_triangulation(name), 20, seed=42)
            inputs.append(dual_complex(last.triangulation))
        for c in inputs:
            results = [state_sum(c, d, workers=w) for w in (1, 2, 8)]
            if len({(r.value, r.labeling_count) for r in results}) != 1:
                bad.append(cat)
    return not bad, "; ".join(bad)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    t0 = time.perf_counter()
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        _report(n, ok, t0, detail)


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, 1):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
            _report(n, ok, t0, detail)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
