"""Regenerate the built-in manifold files under src/statesum/data/manifolds.

Small 3-manifolds are found by exhaustive search over two-tetrahedron
gluings and identified by orientability, vertex count and H_1.
"""

from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

from homology import first_homology  # noqa: E402
from statesum.triangulation import (  # noqa: E402
    Triangulation,
    TriangulationError,
    boundary_of_simplex,
    kuhn_torus,
    surface_from_word,
)

OUT = ROOT / "src" / "statesum" / "data" / "manifolds"


def perfect_matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for m in perfect_matchings(rest):
            yield [(a, items[i])] + m


def two_tet_census():
    facets = [(s, f) for s in range(2) for f in range(4)]
    found = {}
    for matching in perfect_matchings(facets):
        choices = []
        for (s, f), (t, g) in matching:
            opts = []
            others_s = [i for i in range(4) if i != f]
            for img in itertools.permutations([j for j in range(4) if j != g]):
                perm = [0] * 4
                perm[f] = g
                for i, j in zip(others_s, img):
                    perm[i] = j
                opts.append([s, f, t, perm])
            choices.append(opts)
        for combo in itertools.product(*choices):
            try:
                tri = Triangulation.from_pairs(3, 2, combo)
            except TriangulationError:
                continue
            if not tri.is_orientable() or tri.check_manifold():
                continue
            nv = tri.f_vector()[0]
            h1 = first_homology(tri)
            key = (nv, h1)
            if key not in found:
                found[key] = tri
    return found


def write(name: str, tri: Triangulation, description: str) -> None:
    data = tri.to_json()
    data["name"] = name
    data["description"] = description
    (OUT / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")
    print(f"{name}: f={tri.f_vector()} H1={first_homology(tri) if tri.dim == 3 else '-'}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    census = two_tet_census()
    for key in sorted(census, key=repr):
        print("census", key)
    picks = {
        "s3_2tet": ((2, (0, ())), "two-vertex two-tetrahedron 3-sphere"),
        "s3_1vertex": ((1, (0, ())), "one-vertex two-tetrahedron 3-sphere"),
        "rp3": ((1, (0, (2,))), "real projective space L(2,1), two tetrahedra"),
        "l31": ((1, (0, (3,))), "lens space L(3,1), two tetrahedra"),
        "s2xs1": ((1, (1, ())), "S^2 x S^1, two tetrahedra"),
    }
    for name, (key, desc) in picks.items():
        if key not in census:
            # fall back to any vertex count with the right homology
            key = next(k for k in census if k[1] == key[1])
        write(name, census[key], desc)
    write("s3_bdy4simplex", boundary_of_simplex(3), "boundary of the 4-simplex")
    write("t3", kuhn_torus(3), "3-torus, six tetrahedra (Kuhn subdivision of the cube)")
    write("t4", kuhn_torus(4), "4-torus, 24 four-simplices (Kuhn subdivision)")
    write("s4_bdy5simplex", boundary_of_simplex(4), "boundary of the 5-simplex")
    surfaces = {
        "s2": ("a A b B", "2-sphere"),
        "t2": ("a b A B", "torus"),
        "rp2": ("a b a b", "real projective plane"),
        "klein": ("a b a B", "Klein bottle"),
        "genus2": ("a b A B c d C D", "closed orientable surface of genus 2"),
    }
    for name, (word, desc) in surfaces.items():
        write(name, surface_from_word(word, name=name), f"{desc}, polygon word {word}")


if __name__ == "__main__":
    main()
