"""Simplicial cochain machinery: complexes, cup products, cohomology."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from cochainforge.cech.complexes import (Cochain, CohomologySpace,
                                         RingMismatch, SimplicialComplex,
                                         cochain_complex, cohomology_groups,
                                         cup, cup_i, quotient_by_class, sq)
from cochainforge.cech.fgab import FGAbelianGroup
from cochainforge.cech.snf import mat_mul


def sphere3():
    return SimplicialComplex(5, [tuple(f) for f in combinations(range(5), 4)],
                             "s3")


def circle():
    return SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)], "s1")


def projective_plane():
    return SimplicialComplex(6, [(0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5),
                                 (0, 3, 4), (1, 2, 3), (1, 2, 4), (1, 4, 5),
                                 (2, 3, 5), (3, 4, 5)], "rp2")


def test_sphere_and_circle_cohomology():
    assert {p: str(g) for p, g in cohomology_groups(sphere3()).items()} == {
        0: "Z", 1: "0", 2: "0", 3: "Z"}
    assert {p: str(g) for p, g in cohomology_groups(circle()).items()} == {
        0: "Z", 1: "Z"}


def test_projective_plane():
    rp2 = projective_plane()
    assert rp2.euler_characteristic() == 1
    groups = cohomology_groups(rp2)
    assert str(groups[1]) == "0" and str(groups[2]) == "Z/2"
    mod2 = cohomology_groups(rp2, "Zmod:2")
    assert [str(mod2[p]) for p in (0, 1, 2)] == ["Z/2", "Z/2", "Z/2"]
    with pytest.raises(RingMismatch):
        cohomology_groups(rp2, "Zmod:1")


def test_coboundaries_square_to_zero():
    for K in (sphere3(), circle(), projective_plane()):
        mats = cochain_complex(K)
        for p in range(K.dimension):
            prod = mat_mul(mats[p + 1], mats[p])
            assert all(all(x == 0 for x in row) for row in prod)


def test_euler_characteristic_equals_alternating_betti():
    for K, chi in ((sphere3(), 0), (circle(), 0), (projective_plane(), 1)):
        assert K.euler_characteristic() == chi
        groups = cohomology_groups(K, "Q")
        betti = sum((-1) ** p * groups[p].rank for p in groups)
        assert betti == chi


def test_relabeling_invariance():
    rng = random.Random(5)
    rp2 = projective_plane()
    base = cohomology_groups(rp2)
    for _ in range(8):
        perm = list(range(6))
        rng.shuffle(perm)
        K2 = SimplicialComplex(6, [tuple(perm[v] for v in f)
                                   for f in rp2.facets], "rp2-relabeled")
        assert cohomology_groups(K2) == base


def test_cup_leibniz_and_zero_cochains():
    rng = random.Random(1)
    rp2 = projective_plane()
    a = Cochain.from_vector(rp2, 0, [rng.randint(-3, 3) for _ in range(6)])
    b = Cochain.from_vector(rp2, 0, [rng.randint(-3, 3) for _ in range(6)])
    prod = cup(a, b)
    for v in range(6):
        assert prod((v,)) == a((v,)) * b((v,))
    for _ in range(50):
        p, q = rng.choice([(0, 1), (1, 1), (0, 2), (1, 0)])
        x = Cochain.from_vector(rp2, p, [rng.randint(-3, 3)
                                         for _ in rp2.simplices(p)])
        y = Cochain.from_vector(rp2, q, [rng.randint(-3, 3)
                                         for _ in rp2.simplices(q)])
        lhs = cup(x, y).coboundary()
        rhs = cup(x.coboundary(), y) + cup(x, y.coboundary()).scale((-1) ** p)
        assert (lhs - rhs).values == {}


def test_cup_square_detects_nonorientability():
    # the generator of the middle cohomology of the projective plane has
    # nonzero square: the squaring operation on degree 1 is the cup square
    rp2 = projective_plane()
    H1 = cohomology_groups(rp2, "Zmod:2")[1]
    assert str(H1) == "Z/2"
    # find a mod-2 1-cocycle that is not a coboundary
    rng = random.Random(0)
    H2 = CohomologySpace(rp2, 2)
    found = False
    for _ in range(200):
        vec = [rng.randint(0, 1) for _ in rp2.simplices(1)]
        z = Cochain.from_vector(rp2, 1, vec, "Zmod:2")
        db = z.coboundary()
        if all(v % 2 == 0 for v in db.values.values()):
            sq1 = sq(z, 1)
            total = [sq1(s) % 2 for s in rp2.simplices(2)]
            if any(total):
                # its square is the orientation obstruction: nonzero in
                # integral degree-2 cohomology mod 2
                found = True
                break
    assert found


def test_cup_i_rings_and_relation():
    rp2 = projective_plane()
    rng = random.Random(9)
    a = Cochain.from_vector(rp2, 1, [rng.randint(-2, 2)
                                     for _ in rp2.simplices(1)])
    with pytest.raises(RingMismatch):
        cup_i(a, a, 1)

    def cvec(p):
        return Cochain.from_vector(rp2, p, [rng.randint(0, 1)
                                            for _ in rp2.simplices(p)],
                                   "Zmod:2")

    def mod2_zero(c):
        return all(v % 2 == 0 for v in c.values.values())

    for _ in range(30):
        p, q = rng.choice([(1, 1), (1, 2), (2, 1)])
        for i in (1, 2):
            if p + q - i < 0:
                continue
            x, y = cvec(p), cvec(q)
            lhs = cup_i(x, y, i).coboundary()
            rhs = (cup_i(x, y, i - 1) + cup_i(y, x, i - 1)
                   + cup_i(x.coboundary(), y, i)
                   + cup_i(x, y.coboundary(), i))
            assert mod2_zero(lhs - rhs)


def test_class_of_and_coboundaries_vanish():
    rp2 = projective_plane()
    H2 = CohomologySpace(rp2, 2)
    assert str(H2.group) == "Z/2"
    rng = random.Random(4)
    for _ in range(20):
        c = Cochain.from_vector(rp2, 1, [rng.randint(-3, 3)
                                         for _ in rp2.simplices(1)])
        assert H2.class_of(c.coboundary()).is_zero()
    rep = H2.representative(0)
    assert not H2.class_of(rep).is_zero()
    H1 = CohomologySpace(rp2, 1)
    not_cocycle = Cochain(rp2, 1, {(0, 1): 1})
    assert any(not_cocycle.coboundary().values.values())
    with pytest.raises(ValueError):
        H1.class_of(not_cocycle)


def test_quotients():
    assert str(quotient_by_class(FGAbelianGroup(1), [5],
                                 "mod_torsion_and_h")) == "Z/5"
    assert str(quotient_by_class(FGAbelianGroup(1, (2,)), [0, 1],
                                 "mod_torsion_and_h")) == "Z"
    assert str(quotient_by_class(FGAbelianGroup(2), [2, 0],
                                 "mod_torsion_and_h")) == "Z + Z/2"
    assert str(quotient_by_class(FGAbelianGroup(1, (2,)), [0, 0],
                                 "plain")) == "Z + Z/2"
    # rational quotient: dim = rank - rank(image)
    img = [[Fraction(1), Fraction(0)], [Fraction(2), Fraction(0)],
           [Fraction(0), Fraction(0)]]
    cols = [[row[j] for row in img] for j in range(2)]
    assert quotient_by_class(FGAbelianGroup(3), [], "mod_h_image",
                             image=cols).rank == 2


def test_complex_json_round_trip(tmp_path):
    K = projective_plane()
    path = tmp_path / "rp2.json"
    import json
    path.write_text(json.dumps(K.to_dict()))
    K2 = SimplicialComplex.load(str(path))
    assert K2.facets == K.facets
    c = Cochain(K, 1, {(0, 1): 3, (2, 3): -1})
    c2 = Cochain.from_dict(K, json.loads(json.dumps(c.to_dict())))
    assert c2.values == c.values
