#!/usr/bin/env python3
"""Regenerate the bundled complex and model fixtures.

Run from the repository root:  python scripts/make_fixtures.py
"""

import json
import os
import sys
from itertools import combinations, permutations

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from cochainforge.ahss.bridge import model_from_complex
from cochainforge.ahss.model import CohomologyModel, Constraint
from cochainforge.cech.complexes import SimplicialComplex
from cochainforge.cech.fgab import FGAbelianGroup

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "cochainforge",
                   "fixtures")


def write(name, payload):
    path = os.path.join(OUT, name)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print("wrote", path)


def sphere3():
    return SimplicialComplex(5, [tuple(f) for f in combinations(range(5), 4)],
                             "s3")


def circle():
    return SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)], "s1")


def projective_plane():
    facets = [(0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
              (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5)]
    return SimplicialComplex(6, facets, "rp2")


def torus3():
    """Periodic Freudenthal triangulation of the 3-torus on a 3x3x3
    vertex grid: each unit cube splits into six simplices along the
    permutation chains, and opposite faces are identified."""
    def vid(x, y, z):
        return 9 * (x % 3) + 3 * (y % 3) + (z % 3)

    facets = set()
    steps = {0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1)}
    for x in range(3):
        for y in range(3):
            for z in range(3):
                for perm in permutations((0, 1, 2)):
                    px, py, pz = x, y, z
                    verts = [vid(px, py, pz)]
                    for axis in perm:
                        dx, dy, dz = steps[axis]
                        px, py, pz = px + dx, py + dy, pz + dz
                        verts.append(vid(px, py, pz))
                    facets.add(tuple(sorted(verts)))
    return SimplicialComplex(27, sorted(facets), "t3")


def lens_model(p, k):
    groups = {0: FGAbelianGroup(1), 1: FGAbelianGroup(),
              2: FGAbelianGroup(0, (p,)), 3: FGAbelianGroup(1)}
    return CohomologyModel(f"lens-{p}", 3, groups, [k],
                           cup_h_unit={0: [[[1]]]})


def su3_model(h, even=False):
    groups = {0: FGAbelianGroup(1), 3: FGAbelianGroup(1),
              5: FGAbelianGroup(1), 8: FGAbelianGroup(1)}
    cup_unit = {0: [[[1]]], 5: [[[1]]]}
    if even:
        constraints = [Constraint(
            "d5", 3, "options",
            "the push-forward from the symmetric space hits the even part "
            "of the cyclic group, leaving exactly two differentials "
            "compatible with it",
            options=[
                {"label": "d5 = 0: K1 = Z/h", "matrix_h_multiple": [[0]]},
                {"label": "d5 = (h/2): K1 = (2Z)/h",
                 "matrix_h_multiple": [["1/2"]]},
            ])]
    else:
        constraints = [Constraint(
            "d5", 3, "zero",
            "for an odd twist the push-forward from the symmetric space "
            "realizes a generator of the degree-3 column, so the edge "
            "homomorphism is onto and the differential vanishes")]
    return CohomologyModel("su3-even" if even else "su3", 8, groups, [h],
                           cup_h_unit=cup_unit, constraints=constraints)


def main():
    for K in (sphere3(), circle(), projective_plane(), torus3()):
        write(f"{K.name}.json", K.to_dict())
    s3m = model_from_complex(sphere3(), [5], "s3")
    write("s3_model.json", s3m.to_dict())
    t3m = model_from_complex(torus3(), [3], "t3")
    write("t3_model.json", t3m.to_dict())
    write("lens_model.json", lens_model(5, 3).to_dict())
    write("su3.json", su3_model(7).to_dict())
    write("su3_even.json", su3_model(4, even=True).to_dict())


if __name__ == "__main__":
    main()
