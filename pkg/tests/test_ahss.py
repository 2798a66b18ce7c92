"""Spectral sequence engine on the bundled models."""

import os

import pytest

from cochainforge.ahss.bridge import model_from_complex
from cochainforge.ahss.engine import (apply_d3, converge,
                                      factorization_targets, init_pages)
from cochainforge.ahss.model import CohomologyModel, Constraint, ModelError
from cochainforge.cech.complexes import SimplicialComplex
from cochainforge.cech.fgab import FGAbelianGroup, GroupHom, PresentedGroup

FIX = os.path.join(os.path.dirname(__file__), "..", "src", "cochainforge",
                   "fixtures")


def load(name):
    return CohomologyModel.load(os.path.join(FIX, name))


def test_init_pages_tables():
    s3 = load("s3_model.json")
    assert init_pages(s3).table() == {0: "Z", 1: "0", 2: "0", 3: "Z"}
    t3 = load("t3_model.json")
    assert init_pages(t3).table() == {0: "Z", 1: "Z^3", 2: "Z^3", 3: "Z"}
    su3 = load("su3.json")
    assert init_pages(su3).table() == {
        0: "Z", 1: "0", 2: "0", 3: "Z", 4: "0", 5: "Z", 6: "0", 7: "0",
        8: "Z"}


def test_apply_d3_pages():
    s3 = load("s3_model.json").with_twist([5])
    page5 = apply_d3(s3, init_pages(s3))
    assert page5.r == 5
    assert page5.table() == {0: "0", 1: "0", 2: "0", 3: "Z/5"}
    # untwisted: the differential is zero, pages coincide
    s0 = load("s3_model.json").with_twist([0])
    assert apply_d3(s0, init_pages(s0)).table() == init_pages(s0).table()


def test_three_manifold_closed_form():
    # every dimension-3 model gives (H^2, H^1 + Z/h) exactly
    cases = [
        ("s3_model.json", 1, "0", "0"),
        ("s3_model.json", 2, "0", "Z/2"),
        ("s3_model.json", 5, "0", "Z/5"),
        ("t3_model.json", 3, "Z^3", "Z^3 + Z/3"),
        ("lens_model.json", None, "Z/5", "Z/3"),
    ]
    for name, h, k0, k1 in cases:
        model = load(name)
        if h is not None:
            model = model.with_twist([h])
        cand = converge(model).candidates[0]
        assert cand.resolved == {0: True, 1: True}
        assert str(cand.k0) == k0 and str(cand.k1) == k1
        # the closed form: K0 = H2, K1 = H1 + Z/h
        expect_k0 = model.group(2)
        h_int = model.h[0]
        extra = FGAbelianGroup.from_divisors([h_int] if h_int else [0])
        expect_k1 = model.group(1).direct_sum(
            extra if h_int else FGAbelianGroup(1))
        assert cand.k0 == expect_k0
        assert cand.k1 == expect_k1


def test_untwisted_model_sums_cohomology():
    t3 = load("t3_model.json").with_twist([0])
    cand = converge(t3).candidates[0]
    assert str(cand.k0) == "Z^4"   # H^0 + H^2
    assert str(cand.k1) == "Z^4"   # H^1 + H^3


def test_orders_multiply():
    for name, h in (("s3_model.json", 5), ("lens_model.json", None),
                    ("su3.json", 7)):
        model = load(name)
        if h is not None:
            model = model.with_twist([h])
        cand = converge(model).candidates[0]
        prod = 1
        for p, g in cand.e_infty.items():
            o = g.order()
            assert o is not None or g.rank or g.torus_rank
            if o:
                prod *= o
        k0o, k1o = cand.k0.order(), cand.k1.order()
        if k0o is not None and k1o is not None:
            assert k0o * k1o == prod


def test_su3_odd_and_even():
    su3 = load("su3.json")
    rep = converge(su3.with_twist([7]))
    assert len(rep.candidates) == 1
    c = rep.candidates[0]
    assert str(c.k0) == "Z/7" and str(c.k1) == "Z/7"
    assert c.resolved == {0: True, 1: True}
    assert any("push-forward" in line for line in rep.constraints_echo)

    even = load("su3_even.json")
    rep = converge(even)
    labels = {c.label for c in rep.candidates}
    assert any("Z/h" in lab for lab in labels)
    assert any("(2Z)/h" in lab for lab in labels)
    k1s = {str(c.k1) for c in rep.candidates}
    assert k1s == {"Z/4", "Z/2"}  # Z/h and (2Z)/h for h = 4


def test_indeterminate_differential_is_reported():
    groups = {0: FGAbelianGroup(1), 3: FGAbelianGroup(1),
              5: FGAbelianGroup(1), 8: FGAbelianGroup(1)}
    model = CohomologyModel("nameless", 8, groups, [3],
                            cup_h_unit={0: [[[1]]], 5: [[[1]]]})
    rep = converge(model)
    cand = rep.candidates[0]
    assert cand.indeterminate and cand.k0 is None
    assert rep.warnings
    with pytest.raises(ModelError):
        factorization_targets(model, rep)


def test_factorization_targets_on_three_manifolds():
    s3 = load("s3_model.json").with_twist([5])
    rep = converge(s3)
    ft = factorization_targets(s3, rep)
    assert str(ft.e3) == "Z/5" and str(ft.e3_codomain) == "Z/5"
    # the inclusion is an isomorphism: its single coordinate is a unit
    assert len(ft.e3_inclusion) == 1 and len(ft.e3_inclusion[0]) == 1
    import math
    assert math.gcd(ft.e3_inclusion[0][0], 5) == 1
    assert ft.comparison_factor == 2
    assert str(ft.e1) == "0"

    t3 = load("t3_model.json").with_twist([3])
    ft = factorization_targets(t3, converge(t3))
    assert str(ft.e1) == "Z^3"
    assert str(ft.e3) == "Z/3"


def test_model_validation():
    groups = {0: FGAbelianGroup(1), 3: FGAbelianGroup(1)}
    with pytest.raises(ModelError):
        # declared twist disagrees with cupping the unit
        CohomologyModel("bad", 3, groups, [2], cup_h={0: [[5]]})
    with pytest.raises(ModelError):
        Constraint.from_dict({"differential": "d5", "value": "zero"})
    good = CohomologyModel("ok", 3, groups, [5], cup_h_unit={0: [[[1]]]})
    with pytest.raises(ModelError):
        CohomologyModel("ok", 3, groups, [5],
                        cup_h={0: [[5]]}).with_twist([3])
    assert good.with_twist([3]).cup_h == {0: [[3]]}


def test_bridge_matches_hand_model(tmp_path):
    from itertools import combinations
    K = SimplicialComplex(5, [tuple(f) for f in combinations(range(5), 4)],
                          "s3")
    m = model_from_complex(K, [5], "s3")
    assert str(m.group(0)) == "Z" and str(m.group(3)) == "Z"
    cand = converge(m).candidates[0]
    assert str(cand.k1) == "Z/5"
    # serialization round trip
    path = tmp_path / "m.json"
    m.save(str(path))
    m2 = CohomologyModel.load(str(path))
    assert m2.groups == m.groups and m2.cup_h == m.cup_h
