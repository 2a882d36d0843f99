from fractions import Fraction

import pytest

from statesum.catdata import OneCatData, load_category
from statesum.engine import (
    EngineError,
    enumerate_labelings,
    labeling_weight,
    lambda_rescale_check,
    n1_state_sum,
    norm,
    norm_closed_form,
    state_sum,
)
from statesum.registry import TOPOLOGIES, load_manifold
from statesum.sphere_eval import evaluate_circle

EXPECTED = {
    "vec_z2": {"s3": "1/2", "rp3": "1", "l31": "1/2", "s2xs1": "1", "t3": "4"},
    "rep_s3": {"s3": "1/6", "rp3": "2/3", "l31": "1/2", "s2xs1": "1", "t3": "8"},
    "fibonacci": {"s3": "(5 - g)/10", "rp3": "(5 + g)/10", "l31": "(5 + g)/10", "s2xs1": "1", "t3": "4"},
}
SMALL = ["s3_2tet", "s3_1vertex", "s3_minimal", "rp3", "l31", "s2xs1", "s2xs1_minimal"]


@pytest.mark.parametrize("cat", list(EXPECTED))
@pytest.mark.parametrize("topo", ["s3", "rp3", "l31", "s2xs1", "t3"])
def test_known_values_on_every_decomposition(cat, topo):
    d = load_category(cat)
    want = d.field(EXPECTED[cat][topo])
    for name in TOPOLOGIES[topo]:
        assert state_sum(load_manifold(name), d).value == want, name


@pytest.mark.parametrize("cat", ["vec_z2", "vec_z3", "rep_s3", "fibonacci"])
@pytest.mark.parametrize("name", SMALL)
def test_engine_matches_labeling_by_labeling_sum(name, cat):
    c, d = load_manifold(name), load_category(cat)
    labelings = list(enumerate_labelings(c, d))
    assert labelings == list(enumerate_labelings(c, d, prune=False))
    total = d.field.zero()
    for beta in labelings:
        total = total + labeling_weight(c, beta, d)
    res = state_sum(c, d)
    assert res.value == total and res.labeling_count == len(labelings)


def test_labeling_count_and_trace():
    c, d = load_manifold("s3_2tet"), load_category("vec_z2")
    res = state_sum(c, d, trace=True)
    assert res.labeling_count == len(list(enumerate_labelings(c, d)))
    assert set(res.per_handle_trace) == set(range(len(c.cells)))
    js = res.to_json()
    assert js["value"] == "1/2" and "trace" in js


@pytest.mark.parametrize("cat", ["vec_z2", "vec_s3", "rep_s3", "rep_d4", "fibonacci"])
def test_inductive_norm_equals_closed_form(cat):
    d = load_category(cat)
    for lam in (None, d.field(3)):
        for a in range(d.rank):
            assert norm(d, a, 2, lam) == norm_closed_form(d, a, 2, lam) == d.field.one()
        for a, b, c in d.admissible_triples():
            w = (a, b, c)
            for x in evaluate_circle(w, d):
                assert norm(d, x, 1, lam, w) == norm_closed_form(d, x, 1, lam, w)
        assert norm(d, None, 3, lam) == norm_closed_form(d, None, 3, lam)


@pytest.mark.parametrize("name", ["s3_2tet", "rp3", "s2xs1_minimal"])
def test_lambda_scaling_is_invisible_on_closed_3_manifolds(name):
    d = load_category("fibonacci")
    rep = lambda_rescale_check(load_manifold(name), d, d.field("1 + g"))
    assert rep.euler == 0 and rep.ok and rep.after == rep.before


N1 = {"s2": 2, "t2": 0, "genus2": -2, "rp2": 1, "klein": 0}


@pytest.mark.parametrize("surface", list(N1))
def test_n1_closed_forms(surface):
    c = load_manifold(surface)
    chi = N1[surface]
    d = OneCatData.simple([2, 3])
    want = Fraction(2) ** chi + Fraction(3) ** chi
    assert n1_state_sum(c, d, oriented=False).value.to_fraction() == want
    swap = OneCatData.simple([5, 5], involution=[1, 0])
    got = n1_state_sum(c, swap, oriented=False).value.to_fraction()
    orientable = surface in ("s2", "t2", "genus2")
    assert got == (2 * Fraction(5) ** chi if orientable else 0)


@pytest.mark.parametrize("surface", list(N1))
def test_n1_lambda_scaling(surface):
    c = load_manifold(surface)
    d = OneCatData.simple([2, 3])
    rep = lambda_rescale_check(c, d, 7, oriented=False)
    assert rep.ok and rep.euler == N1[surface]


def test_dimension_mismatch():
    with pytest.raises(EngineError, match="dimension mismatch"):
        state_sum(load_manifold("t2"), load_category("vec_z2"))
    with pytest.raises(EngineError, match="dimension mismatch"):
        n1_state_sum(load_manifold("t3"), OneCatData.simple([1]))


def test_zero_lambda_rejected():
    d = load_category("vec_z2")
    with pytest.raises(EngineError):
        state_sum(load_manifold("s3_2tet"), d, lam=0)
    with pytest.raises(EngineError):
        lambda_rescale_check(load_manifold("s3_2tet"), d, 0)


def test_workers_and_backends_agree():
    c, d = load_manifold("t3"), load_category("fibonacci")
    ref = state_sum(c, d)
    assert state_sum(c, d, workers=3).value == ref.value
    assert state_sum(c, d, backend="python").value == ref.value
    assert state_sum(c, d, workers=2).labeling_count == ref.labeling_count


def test_verify_flag_accepts_shipped_data():
    assert state_sum(load_manifold("s3_2tet"), load_category("rep_s3"), verify=True).value.to_fraction() == Fraction(1, 6)
