import json

import pytest

from statesum.catdata import (
    CategoryError,
    CategoryParseError,
    FusionError,
    OneCatData,
    PointedModularData,
    UnsupportedGroupError,
    cyclic_group,
    dumps,
    gen_fibonacci,
    gen_pointed,
    gen_rep_g,
    gen_vec_g,
    group_by_name,
    load_category,
    semion,
    shipped_categories,
    tet,
    theta,
    verify_consistency,
)
from statesum.catdata.generators import FIBONACCI_FIELD, shipped_builders
from statesum.catdata.io import category_path, fusion_from_json, fusion_to_json
from statesum.sphere_eval import evaluate_graph, tetrahedron_graph, theta_graph

FUSION = ["vec_trivial", "vec_z2", "vec_z3", "vec_s3", "rep_z2", "rep_z3", "rep_s3", "rep_d4", "fibonacci"]


def _json(d):
    return json.loads(json.dumps(fusion_to_json(d)))


@pytest.mark.parametrize("name", shipped_categories())
def test_shipped_files_are_generator_output(name):
    obj = shipped_builders()[name]()
    assert dumps(obj) == category_path(name).read_text(encoding="utf-8")
    again = load_category(name, wrt=isinstance(obj, PointedModularData))
    assert dumps(again) == dumps(obj)


def test_fibonacci_file():
    d = load_category("fibonacci")
    assert d.field == FIBONACCI_FIELD and d.labels == ["1", "tau"]
    t = d.qdim[1]
    assert t * t == t + 1 and t.approx().real > 0
    assert d.global_dimension() == d.field("(5 + g)/2")
    assert verify_consistency(d).ok


def test_vec_g_examples():
    z2 = gen_vec_g(cyclic_group(2))
    assert z2.rank == 2 and z2.global_dimension() == 2
    assert gen_vec_g(group_by_name("trivial")).global_dimension() == 1
    s3 = gen_vec_g(group_by_name("s3"))
    g = group_by_name("s3")
    assert s3.rank == 6 and all(s3.dual[a] == g.inverse[a] for a in range(6))
    assert verify_consistency(z2).ok


def test_rep_g_examples():
    s3 = gen_rep_g(group_by_name("s3"))
    assert sorted(x.to_fraction() for x in s3.qdim) == [1, 1, 2]
    assert s3.global_dimension() == 6
    z3 = gen_rep_g(cyclic_group(3))
    assert all(x == z3.field.one() for x in z3.qdim)
    for a in range(3):
        for b in range(3):
            assert sum(z3.N(a, b, c) for c in range(3)) == 1
    z2 = gen_rep_g(cyclic_group(2))
    assert [x.to_fraction() for x in z2.qdim] == [1, 1]
    d4 = gen_rep_g(group_by_name("d4"))
    assert d4.global_dimension() == 8 and verify_consistency(d4).ok


@pytest.mark.parametrize("g", ["z2", "z3", "z4", "s3", "d4"])
def test_vec_and_rep_have_equal_dimension(g):
    G = group_by_name(g)
    assert gen_vec_g(G).global_dimension().to_fraction() == gen_rep_g(G).global_dimension().to_fraction() == G.order


def test_unsupported_groups():
    with pytest.raises(UnsupportedGroupError):
        gen_rep_g(group_by_name("q8"))
    with pytest.raises(Exception):
        group_by_name("a5")


def test_unit_dimension_fault():
    j = _json(gen_fibonacci())
    j["qdim"]["1"] = "2"
    rep = verify_consistency(fusion_from_json(j))
    assert any(p.startswith("unit:") for p in rep.problems)


def test_pentagon_fault_names_tuple(tmp_path):
    j = _json(gen_fibonacci())
    for row in j["fsymbols"]:
        if row[7] not in ("0", "1"):
            row[7] = f"({row[7]})*2"
            break
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(j))
    with pytest.raises(CategoryError) as err:
        load_category(p)
    assert "pentagon: fails at" in str(err.value) and "tau" in str(err.value)


def test_zero_theta_fault():
    j = _json(gen_fibonacci())
    for row in j["theta"]:
        if row[:3] == ["tau", "tau", "tau"]:
            row[4] = "0"
    rep = verify_consistency(fusion_from_json(j))
    assert any("theta(tau, tau, tau) is zero" in p for p in rep.problems)


def test_parse_errors(tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{ not json")
    with pytest.raises(CategoryParseError):
        load_category(p)
    with pytest.raises(CategoryParseError):
        load_category(tmp_path / "missing.json")
    p.write_text(json.dumps({"kind": "fusion", "labels": ["1"]}))
    with pytest.raises(CategoryError):
        load_category(p)
    p.write_text(json.dumps({"kind": "mystery"}))
    with pytest.raises(CategoryError):
        load_category(p)


def test_theta_examples():
    z2 = gen_vec_g(cyclic_group(2))
    assert theta(z2, "1", "g", "g") == z2.field.one()
    with pytest.raises(FusionError):
        theta(z2, "g", "g", "g")
    fib = gen_fibonacci()
    t = theta(fib, "tau", "tau", "tau")
    assert t == evaluate_graph(theta_graph((1, 1, 1)), fib)


def test_tet_examples():
    z2 = gen_vec_g(cyclic_group(2))
    assert tet(z2, ["g", "g", "g", "g", "1", "1"]) == z2.field.one()
    fib = gen_fibonacci()
    all_tau = tet(fib, ["tau"] * 6)
    assert all_tau == evaluate_graph(tetrahedron_graph([1] * 6, dual=fib.dual), fib)
    assert all_tau == -(fib.qdim[1] ** -2)
    with pytest.raises(FusionError):
        tet(fib, ["1", "1", "tau", "1", "1", "1"])  # (e, a, b) = (1, 1, 1) but (f, b, c) = (1, 1, tau)


@pytest.mark.parametrize("name", FUSION)
def test_tables_match_generic_evaluation(name):
    d = load_category(name)
    for a, b, c in d.admissible_triples():
        for al in range(d.vertex_dim(a, b, c)):
            assert d.theta(a, b, c, al) == evaluate_graph(theta_graph((a, b, c), ((), (al,))), d)
    count = 0
    for labels in _tet_labelings(d):
        assert d.tet(*labels, (0, 0, 0, 0)) == evaluate_graph(tetrahedron_graph(labels, dual=d.dual), d)
        count += 1
    assert count > 0


def _tet_labelings(d):
    import itertools

    for labels in itertools.product(range(d.rank), repeat=6):
        if d.f_admissible(*labels):
            yield labels


@pytest.mark.parametrize("name", FUSION)
def test_theta_dual_coherence(name):
    d = load_category(name)
    du = d.dual
    for a, b, c in d.admissible_triples():
        if d.vertex_dim(a, b, c) == 1:
            assert d.theta(a, b, c, 0) == d.theta(du[c], du[b], du[a], 0)


def test_onecat_data():
    o = load_category("onecat_23")
    assert isinstance(o, OneCatData) and [x.to_fraction() for x in o.circle_value] == [2, 3]
    s = load_category("onecat_swap")
    assert s.involution == [1, 0] and [list(o) for o in s.orbits()] == [[0, 1]]
    with pytest.raises(Exception):
        OneCatData.simple([2, 3], involution=[1, 0])  # a_r(i) must equal a_i


def test_pointed_data():
    d = semion()
    assert d.check(wrt=True) == []
    assert d.q[1] == d.field.gen() ** 2
    for n in (2, 3, 4, 5):
        assert gen_pointed(n, 1).check(wrt=True) == []
    bad = PointedModularData(d.field, d.group, [d.field.one(), d.field.one()], d.lam)
    assert any("degenerate" in p for p in bad.check())


def test_wrt_normalization_enforced(tmp_path):
    d = semion()
    data = d.to_json()
    data["lambda"] = "1"
    p = tmp_path / "p.json"
    p.write_text(json.dumps(data))
    assert load_category(p).lam == d.field.one()
    with pytest.raises(CategoryError):
        load_category(p, wrt=True)


def test_non_simple_label_flagged():
    j = _json(gen_fibonacci())
    j["fusion"] = [row for row in j["fusion"] if row[:3] != ["tau", "tau", "1"]]
    rep = verify_consistency(fusion_from_json(j))
    assert any(p.startswith("simple:") and "End(tau)" in p for p in rep.problems)
