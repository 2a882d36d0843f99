import json
from fractions import Fraction

import pytest

from statesum.catdata import gen_rep_g, gen_vec_g, group_by_name
from statesum.dw import (
    DWError,
    GroupPresentation,
    brute_force_count,
    dw_count,
    dw_invariant,
    dw_labelings,
    hom_count_oracle,
    load_presentation,
)
from statesum.engine import state_sum
from statesum.registry import MANIFOLDS, load_manifold

PI1 = ["s3", "s4", "rp3", "l31", "s2xs1", "t3", "t4"]
WITH_PI1 = [m.name for m in MANIFOLDS.values() if m.topology in PI1]


@pytest.mark.parametrize("g", ["z2", "z3", "s3"])
@pytest.mark.parametrize("name", WITH_PI1)
def test_dw_matches_presentation_oracle(name, g):
    G = group_by_name(g)
    hom = hom_count_oracle(load_presentation(MANIFOLDS[name].topology), G)
    assert dw_invariant(load_manifold(name), G).to_fraction() == Fraction(hom, G.order)


def test_dw_examples():
    z2 = group_by_name("z2")
    assert dw_invariant(load_manifold("t3"), z2).to_fraction() == 4
    assert dw_invariant(load_manifold("rp3"), z2).to_fraction() == 1
    assert dw_invariant(load_manifold("s3_bdy4simplex"), z2).to_fraction() == Fraction(1, 2)
    # two top cells, each contributing a factor 1/|G|
    assert dw_count(load_manifold("s3_2tet"), z2) == 2


@pytest.mark.parametrize("name", ["s3_2tet", "rp3", "l31", "s2xs1", "s3_minimal"])
def test_pruned_search_matches_brute_force(name):
    c = load_manifold(name)
    for g in ("z2", "z3"):
        G = group_by_name(g)
        n = brute_force_count(c, G)
        assert dw_count(c, G) == n == len(list(dw_labelings(c, G)))


@pytest.mark.parametrize("g", ["z2", "z3", "s3"])
@pytest.mark.parametrize("name", ["s3_2tet", "rp3", "l31", "s2xs1", "t3"])
def test_morita_triple(name, g):
    G = group_by_name(g)
    c = load_manifold(name)
    dw = dw_invariant(c, G).to_fraction()
    assert state_sum(c, gen_vec_g(G)).value.to_fraction() == dw
    assert state_sum(c, gen_rep_g(G)).value.to_fraction() == dw


def test_size_guard():
    with pytest.raises(DWError, match="size guard"):
        brute_force_count(load_manifold("t3"), group_by_name("s3"), guard=10)
    with pytest.raises(DWError, match="size guard"):
        hom_count_oracle(load_presentation("t4"), group_by_name("s3"), guard=100)


def test_presentation_letters(tmp_path):
    p = GroupPresentation(["a", "b"], ["abAB"])
    assert hom_count_oracle(p, group_by_name("z3")) == 9
    assert hom_count_oracle(p, group_by_name("s3")) == 18  # commuting pairs in S3
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"name": "z4", "generators": ["a"], "relators": ["aaaa"]}))
    assert hom_count_oracle(load_presentation(f), group_by_name("z2")) == 2


def test_unknown_presentation():
    with pytest.raises(Exception):
        load_presentation("no_such_group")
