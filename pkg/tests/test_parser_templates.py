"""The identity DSL and group-cochain templates."""

import pytest

from cochainforge.symcalc.expr import Expr, SymAtom
from cochainforge.symcalc.parser import (Declarations, ParseError,
                                         parse_decls, parse_expr, print_expr,
                                         run_script)
from cochainforge.symcalc.rules import RelationSet, normalize
from cochainforge.symcalc.templates import (CochainTemplate, generic_slots,
                                            group_coboundary, word_class)
from cochainforge.symcalc.words import (U1, Word, as_op, cm, mc, op_mul,
                                        op_trace, word_mul)

DECLS = """
gen g0: U1 det a0;
gen f: U1;
gen phi01: U;
gen f012: S1 log eta012;
scalar h0123: closed;
scalar s: closed;
"""


def test_parse_c3_and_trivia():
    decls = parse_decls(DECLS)
    e = parse_expr("tr[(f^-1 * d f)^3]", decls)
    assert len(e) == 1
    assert parse_expr("0", decls).is_zero()
    assert parse_expr("tr[f^-1 * d f] * tr[f^-1 * d f]", decls).is_zero()


def test_round_trip_on_normal_forms():
    decls = parse_decls(DECLS)
    for text in (
        "tr[(g0^-1 * d g0)^3]",
        "-1/6 * tau^-2 * tr[(f^-1 * d f)^3] + h0123 * s",
        "tr[phi01^-1 * d phi01 * d g0 * g0^-1] - 2 * tau * eta012",
        "d eta012 * d a0",
    ):
        e = parse_expr(text, decls)
        assert parse_expr(print_expr(e), decls) == e


def test_parser_errors_carry_positions():
    decls = parse_decls(DECLS)
    with pytest.raises(ParseError, match="undeclared"):
        parse_expr("tr[zz]", decls)
    with pytest.raises(ParseError, match="expected"):
        parse_expr("tr[(f^-1 * d f)^3", decls)
    with pytest.raises(ParseError, match="operator-valued"):
        parse_expr("f * d f", decls)
    with pytest.raises(ParseError):
        parse_decls("gen x: Banana;")


def test_run_script_asserts():
    res = run_script("""
    gen q: U1;
    gen r: U1;
    # coboundary of the degree-3 form against its exact primitive
    assert tr[(r^-1 * d r)^3] - tr[((q * r)^-1 * d (q * r))^3]
           + tr[(q^-1 * d q)^3]
        == 3 * d tr[q^-1 * d q * d r * r^-1];
    assert tr[q^-1 * d q * q^-1 * d q] == 0;
    assert 1 == 2;
    """)
    assert [r.holds for r in res] == [True, True, False]
    assert not res[2].residue.is_zero()


def test_group_coboundary_convention():
    # (delta K)(f1, f2) = K(f2) - K(f1 f2) + K(f1)
    C3 = CochainTemplate(1, ("f",), lambda a: op_trace(
        op_mul(op_mul(mc(as_op(a[0])), mc(as_op(a[0]))), mc(as_op(a[0])))))
    d = group_coboundary(C3)
    f, g = generic_slots(2)
    lhs = d.substitute([f, g])
    rhs = (C3.substitute([g]) - C3.substitute([word_mul(f, g)])
           + C3.substitute([f]))
    assert (lhs - rhs).is_zero()


def test_double_coboundary_vanishes():
    B2 = CochainTemplate(2, ("f", "g"), lambda a: op_trace(
        op_mul(mc(as_op(a[0])), cm(as_op(a[1])))))
    dd = group_coboundary(group_coboundary(B2))
    slots = generic_slots(4)
    nf, _ = normalize(dd.substitute(slots))
    assert nf.is_zero()

    const = CochainTemplate(0, (), lambda a: Expr.atom(SymAtom("c", ())))
    d1 = group_coboundary(const)
    f, = generic_slots(1)
    assert d1.substitute([f]).is_zero()


def test_word_class_constraints():
    f, g = generic_slots(2)
    w, = generic_slots(1, klass="U", prefix="w")
    assert word_class(f) == U1
    assert word_class(word_mul(f, g)) == U1
    assert word_class(word_mul(f, w)) == "U"

    def needs_u1(args):
        return ([] if any(word_class(a) == U1 for a in args)
                else ["no trace-class slot"])

    B2 = CochainTemplate(2, ("f", "g"), lambda a: op_trace(
        op_mul(mc(as_op(a[0])), cm(as_op(a[1])))), constraint=needs_u1)
    assert B2.class_warnings([f, g]) == []
    assert B2.class_warnings([w, w]) == ["no trace-class slot"]
    with pytest.raises(Exception):
        B2.substitute([f])
