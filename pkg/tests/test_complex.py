import copy
import json

import pytest

from statesum.cells import CellComplex, ComplexError, LinkDiagram, LinkEdge, LinkVertex, dual_complex, load_complex
from statesum.pachner import PachnerError, move_candidates, pachner_move, random_flips
from statesum.registry import MANIFOLDS, TOPOLOGIES, load_manifold, load_triangulation, manifold_path
from statesum.triangulation import Triangulation, TriangulationError, boundary_of_simplex

TRIANGULATED = [m.name for m in MANIFOLDS.values() if m.kind == "triangulation"]

EULER = {"s3": 0, "rp3": 0, "l31": 0, "s2xs1": 0, "t3": 0, "s4": 2, "t4": 0,
         "s2": 2, "t2": 0, "genus2": -2, "rp2": 1, "klein": 0}


@pytest.mark.parametrize("name", TRIANGULATED)
def test_dual_reverses_f_vector(name):
    t = load_triangulation(name)
    c = dual_complex(t)
    assert c.f_vector() == tuple(reversed(t.f_vector()))
    assert c.euler_characteristic() == t.euler_characteristic() == EULER[MANIFOLDS[name].topology]
    assert c.validate() == []


@pytest.mark.parametrize("name", list(MANIFOLDS))
def test_builtins_validate(name):
    c = load_manifold(name)
    assert c.validate() == []
    assert c.euler_characteristic() == EULER[MANIFOLDS[name].topology]


def test_f_vector_examples():
    assert dual_complex(boundary_of_simplex(3)).f_vector() == (5, 10, 10, 5)
    assert load_manifold("s3_2tet").f_vector() == (2, 4, 4, 2)
    assert load_triangulation("t2").f_vector() == (1, 3, 2)
    assert load_manifold("t2").f_vector() == (2, 3, 1)


def test_orientability_flags():
    for name in TRIANGULATED:
        assert load_triangulation(name).is_orientable() == MANIFOLDS[name].orientable


def test_links_of_solid_dual():
    c = load_manifold("s3_bdy4simplex")
    for e in c.cells_of_dim(1):
        assert len(c.link_of(e).word) == 3
    for v in c.cells_of_dim(0):
        link = c.link_of(v)
        assert len(link.vertices) == 4 and len(link.edges) == 6
        assert all(len(x.darts) == 3 for x in link.vertices)
    with pytest.raises(ComplexError):
        c.link_of(len(c.cells))


def test_codim2_links_are_cycles():
    for name in ("t3", "rp3", "l31"):
        c = load_manifold(name)
        for e in c.cells_of_dim(1):
            assert c.link_of(e).sphere == 1 and c.link_of(e).word


def test_dangling_link_reference_reported():
    c = load_manifold("s3_2tet")
    data = c.to_json()
    bad = copy.deepcopy(data)
    link = next(l for l in bad["links"] if l["sphere"] == 1)
    link["word"][0][0] = len(bad["cells"]) + 5
    problems = CellComplex.from_json(bad).validate()
    assert any(p.startswith(f"cell {link['cell']}:") and "missing cell" in p for p in problems)


def test_euler_fault_reported():
    # one vertex with two edges crossing as on a torus: V - E + F = 0
    torus = LinkDiagram(2, vertices=[LinkVertex(0, 1, [0, 1, 2, 3])],
                        edges=[LinkEdge(1, 1, [0, 2]), LinkEdge(2, 1, [1, 3])])
    assert torus.euler_components() == [0]
    c = load_manifold("s3_2tet")
    v = c.cells_of_dim(0)[0]
    link = c.link_of(v)
    link.edges[0].ends, link.edges[1].ends = (
        [link.edges[0].ends[0], link.edges[1].ends[1]],
        [link.edges[1].ends[0], link.edges[0].ends[1]],
    )
    assert any(f"cell {v}:" in p for p in c.validate())


def test_loader_rejects_unknown_fields(tmp_path):
    data = load_manifold("t2").to_json()
    data["colour"] = "red"
    p = tmp_path / "x.json"
    p.write_text(json.dumps(data))
    with pytest.raises(ComplexError):
        load_complex(p)


def test_complex_json_roundtrip():
    c = load_manifold("rp3")
    again = CellComplex.from_json(json.loads(json.dumps(c.to_json())))
    assert again.to_json() == c.to_json()


def test_one_four_move_adds_three():
    t = load_triangulation("s3_2tet")
    u = pachner_move(t, 0, "1-4")
    assert u.size == t.size + 3
    assert u.euler_characteristic() == 0
    assert dual_complex(u).validate() == []


def test_two_three_then_three_two_is_inverse():
    t = load_triangulation("s3_bdy4simplex")
    loc = move_candidates(t, "2-3")[0]
    u = pachner_move(t, loc, "2-3")
    assert u.size == t.size + 1
    sig = t.isomorphism_signature()
    back = [pachner_move(u, e, "3-2") for e in move_candidates(u, "3-2")]
    assert any(b.isomorphism_signature() == sig for b in back)


def test_bad_location_is_rejected():
    t = load_triangulation("s3_2tet")
    with pytest.raises((PachnerError, TriangulationError, IndexError)):
        pachner_move(t, 999, "2-3")


def test_random_flips_are_seeded():
    t = load_triangulation("t3")
    a = [(f.move, f.location) for f in random_flips(t, 30, seed=5)]
    b = [(f.move, f.location) for f in random_flips(t, 30, seed=5)]
    assert a == b
    for f in random_flips(t, 10, seed=9):
        assert f.triangulation.euler_characteristic() == 0
        assert dual_complex(f.triangulation).validate() == []


def test_flip_count_must_be_positive():
    with pytest.raises(ValueError):
        list(random_flips(load_triangulation("t3"), 0, seed=1))


def test_surface_flips():
    t = load_triangulation("klein")
    for f in random_flips(t, 20, seed=2):
        c = dual_complex(f.triangulation)
        assert c.euler_characteristic() == 0 and c.validate() == []


def test_registry_paths():
    assert manifold_path("s3_minimal").parent.name == "complexes"
    assert manifold_path("t3").parent.name == "manifolds"
    assert set(TOPOLOGIES["s3"]) == {"s3_2tet", "s3_1vertex", "s3_bdy4simplex", "s3_minimal"}
    with pytest.raises(ComplexError):
        manifold_path("no_such_manifold")


def test_nonmanifold_gluing_rejected():
    data = load_triangulation("s3_2tet").to_json()
    data["gluings"] = data["gluings"][:-1]
    with pytest.raises(TriangulationError):
        Triangulation.from_json(data)
