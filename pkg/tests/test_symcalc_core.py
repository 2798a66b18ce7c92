"""Core algebra: graded atoms, words, the cyclic trace, differentials."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cochainforge.symcalc.expr import DeclarationError, Expr, SymAtom
from cochainforge.symcalc.rules import RelationSet, normalize
from cochainforge.symcalc.words import (DIFF, INV, PLAIN, S1, U, U1,
                                        Generator, Word, as_op, cm,
                                        group_word, make_word, mc, op_add,
                                        op_d, op_factor, op_inv, op_mul,
                                        op_pow, op_trace, trace_word,
                                        word_inv, word_mul)

F_GEN = Generator("f", U1)
G_GEN = Generator("g", U1, (), "alpha_g")
W_GEN = Generator("w", U)
U_GEN = Generator("u", S1, (), "rho")


def test_atom_degrees_and_closedness():
    a = SymAtom("eta", (0, 1, 2))
    assert a.total_degree == 0 and a.d().total_degree == 1
    assert a.d().d() is None
    h = SymAtom("h", (0, 1, 2, 3), closed=True)
    assert h.d() is None
    with pytest.raises(DeclarationError):
        SymAtom("h", (), closed=True, differentiated=True)


def test_odd_square_kills_monomial():
    da = SymAtom("a", (), differentiated=True)
    assert Expr.monomial(1, 0, (da, da)).is_zero()
    x2 = SymAtom("x", (), degree=2)
    assert not Expr.monomial(1, 0, (x2, x2)).is_zero()


def test_koszul_reordering_sign():
    da = SymAtom("a", (0,), differentiated=True)
    db = SymAtom("b", (0,), differentiated=True)
    ab = Expr.atom(da) * Expr.atom(db)
    ba = Expr.atom(db) * Expr.atom(da)
    assert ab == ba.scale(-1)
    even = SymAtom("x", (), degree=2)
    assert Expr.atom(even) * Expr.atom(da) == Expr.atom(da) * Expr.atom(even)


def test_tau_powers_merge_per_power():
    a = SymAtom("s", ())
    e = Expr.atom(a, tau=2) + Expr.atom(a, tau=-1)
    assert len(e) == 2
    assert (e - Expr.atom(a, tau=-1) - Expr.atom(a, tau=2)).is_zero()


def test_word_reduction_and_inverse():
    w = group_word(F_GEN, (F_GEN, INV), W_GEN)
    assert w.factors == ((W_GEN, PLAIN),)
    wi = word_inv(group_word(F_GEN, W_GEN))
    assert wi.factors == ((W_GEN, INV), (F_GEN, INV))
    assert word_mul(group_word(F_GEN, W_GEN), wi).factors == ()


def test_maurer_cartan_is_a_theorem():
    F = mc(op_factor(F_GEN, PLAIN))
    assert op_add(op_d(F), op_mul(F, F)) == []
    Fb = cm(op_factor(F_GEN, PLAIN))
    assert op_add(op_d(Fb), op_mul(op_mul(Fb, Fb), []),
                  [(-c, t, a, w) for c, t, a, w in op_mul(Fb, Fb)]) == []


def test_trace_cyclicity_and_zero_atom():
    F = mc(op_factor(F_GEN, PLAIN))
    assert op_trace(op_mul(F, F)).is_zero()
    # tr[ab] = (-1)^{|a||b|} tr[ba] for a word and its rotation
    w1 = Word((), ((F_GEN, INV), (F_GEN, DIFF), (W_GEN, PLAIN)))
    w2 = Word((), ((W_GEN, PLAIN), (F_GEN, INV), (F_GEN, DIFF)))
    assert (trace_word(w1) - trace_word(w2)).is_zero()


def test_trace_conjugation_invariance():
    # tr[w^-1 X w] = tr[X] by cyclic reduction
    X = op_mul(op_factor(F_GEN, DIFF), op_factor(F_GEN, INV))
    conj = op_mul(op_mul(op_factor(W_GEN, INV), X), op_factor(W_GEN, PLAIN))
    assert (op_trace(conj) - op_trace(X)).is_zero()


def test_determinant_log_rule():
    t = op_trace(mc(op_factor(G_GEN, PLAIN)))
    assert t == Expr.atom(SymAtom("alpha_g", (), differentiated=True), tau=1)
    # without a declared log the trace stays formal
    t2 = op_trace(mc(op_factor(F_GEN, PLAIN)))
    assert len(t2) == 1 and not t2.is_zero()


def test_circle_factors_are_central():
    u = op_factor(U_GEN, PLAIN)
    w = op_factor(W_GEN, PLAIN)
    assert op_add(op_mul(u, w), [(-c, t, a, wd)
                                 for c, t, a, wd in op_mul(w, u)]) == []
    # u^-1 du = tau d(rho)
    udu = op_mul(op_inv(u), op_d(u))
    assert udu == [(1, 1, (SymAtom("rho", (), differentiated=True),),
                    Word())]


def test_d_eliminates_inverse_differentials():
    # d(X^-1) = -X^-1 dX X^-1, so d(X^-1 X) = 0 comes out exactly
    x = op_factor(W_GEN, PLAIN)
    e = op_mul(op_inv(x), x)
    assert op_d(e) == []


# -- randomized structural properties ----------------------------------

GENS = [Generator("f", U1), Generator("g", U1, (), "alpha_g"),
        Generator("w", U), Generator("v", U)]


def random_op(rng, size=4):
    terms = []
    for _ in range(rng.randint(1, 3)):
        word = []
        for _ in range(rng.randint(1, size)):
            word.append((rng.choice(GENS), rng.choice([PLAIN, INV, DIFF])))
        terms.append(op_word(make_word(word), coeff=rng.randint(-3, 3)))
    from cochainforge.symcalc.words import op_add
    return op_add(*terms)


from cochainforge.symcalc.words import op_word  # noqa: E402


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_dd_zero_on_random_traces(seed):
    rng = random.Random(seed)
    e = op_trace(random_op(rng))
    nf, _ = normalize(e.d().d())
    assert nf.is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_normalize_idempotent(seed):
    rng = random.Random(seed)
    e = op_trace(random_op(rng)) * op_trace(random_op(rng))
    nf, _ = normalize(e)
    nf2, _ = normalize(nf)
    assert nf == nf2


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_graded_cyclicity_randomized(seed):
    rng = random.Random(seed)
    a = []
    b = []
    for _ in range(rng.randint(1, 3)):
        a.append((rng.choice(GENS), rng.choice([PLAIN, INV, DIFF])))
    for _ in range(rng.randint(1, 3)):
        b.append((rng.choice(GENS), rng.choice([PLAIN, INV, DIFF])))
    wa, wb = make_word(a), make_word(b)
    da = wa.degree
    db = wb.degree
    lhs = trace_word(word_mul(wa, wb))
    rhs = trace_word(word_mul(wb, wa)).scale((-1) ** (da * db))
    assert (lhs - rhs).is_zero()
