"""Cochain components over a generic overlap.

A SimplexContext instantiates, on the generic (p+1)-fold overlap with
charts 0..p, the transition data of a projective-unitary bundle and the
local expressions of a section:

    g_i   : U1-valued local expressions,  det(g_i) = exp(tau * alpha_i)
    phi_ij: unitary transition lifts with phi_ji = phi_ij^-1
    f_ijk : circle-valued cocycle, phi_ij phi_jk = f_ijk phi_ik,
            f_ijk = exp(tau * eta_ijk)
    h     = delta(eta)  (integer 3-cocycle), a = delta(alpha)

plus, per verification family, the auxiliary choices that the
change-of-choice and hypothesis-dependent identities quantify over.

All identities are checked on a single generic simplex; naturality in
the chart indices is by symbolic genericity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple

from ..symcalc.expr import Expr, SymAtom
from ..symcalc.rules import RelationSet, coboundary_closure
from ..symcalc.words import (DIFF, INV, PLAIN, S1, U, U1, Generator, OpExpr,
                             Word, as_op, cm, group_word, make_word, mc,
                             op_d, op_factor, op_inv, op_mul, op_pow,
                             op_trace, op_word, word_inv, word_mul)

Idx = Tuple[int, ...]


# ----------------------------------------------------------------------
# Local forms (prefactor-free bodies; prefactors live in the builders)
# ----------------------------------------------------------------------

def C3(x) -> Expr:
    """tr[(x^-1 dx)^3]"""
    return op_trace(op_pow(mc(as_op(x)), 3))


def C5(x) -> Expr:
    """tr[(x^-1 dx)^5]"""
    return op_trace(op_pow(mc(as_op(x)), 5))


def B2(x, y) -> Expr:
    """tr[x^-1 dx * dy y^-1]"""
    return op_trace(op_mul(mc(as_op(x)), cm(as_op(y))))


def B4(x, y) -> Expr:
    """tr[F Gb^3 + (1/2)(F Gb)^2 + F^3 Gb] with F = x^-1 dx, Gb = dy y^-1."""
    F = mc(as_op(x))
    Gb = cm(as_op(y))
    FG = op_mul(F, Gb)
    return (op_trace(op_mul(F, op_pow(Gb, 3)))
            + op_trace(op_pow(FG, 2)).scale(Fraction(1, 2))
            + op_trace(op_mul(op_pow(F, 3), Gb)))


def A(x, y, z) -> Expr:
    """tr[x^-1 dx y dz z^-1 d(y^-1) + x^-1 dx dy dz z^-1 y^-1]"""
    xo, yo, zo = as_op(x), as_op(y), as_op(z)
    F = mc(xo)
    Hb = cm(zo)
    first = op_mul(op_mul(op_mul(F, yo), Hb), op_d(op_inv(yo)))
    second = op_mul(op_mul(op_mul(F, op_d(yo)), Hb), op_inv(yo))
    return op_trace(first) + op_trace(second)


# exact tau-monomial prefactors:  -1/24pi^2 = (1/6) tau^-2,
# -1/8pi^2 = (1/2) tau^-2,  i/240pi^3 = (1/30) tau^-3,
# i/48pi^3 = (1/6) tau^-3,  with tau = 2 pi i
PREF_BETA3 = (Fraction(1, 6), -2)
PREF_BETA2 = (Fraction(1, 2), -2)
PREF_GAMMA5 = (Fraction(1, 30), -3)
PREF_GAMMA4 = (Fraction(1, 6), -3)


# ----------------------------------------------------------------------
# Family bundles
# ----------------------------------------------------------------------

@dataclass
class SectionData:
    """The callables a cochain builder consumes: one section's local
    data together with the (possibly shifted) transition choices."""

    g: Callable[[int], Word]
    phi: Callable[[int, int], Word]
    eta: Callable[[Idx], Expr]
    deta: Callable[[Idx], Expr]
    alpha: Callable[[int], Expr]
    dalpha: Callable[[int], Expr]
    h: Callable[[Idx], Expr]
    a: Callable[[Idx], Expr]


class SimplexContext:
    """Generator and scalar families on the generic overlap 0..size-1."""

    def __init__(self, size: int, *, sections: Sequence[str] = ("g",),
                 global_alpha: bool = False):
        self.size = size
        self.global_alpha = global_alpha
        self.rels = RelationSet()
        self._gens: Dict[Tuple, Generator] = {}
        self._sections = tuple(sections)

        # transition lifts phi_ij (i < j); adjacent ones are terminal,
        # non-adjacent ones expand through the circle cocycle
        for i in range(size):
            for j in range(i + 1, size):
                self._gens[("phi", i, j)] = Generator("phi", U, (i, j))
        for i in range(size):
            for j in range(i + 2, size):
                mid = i + 1
                repl = make_word(
                    [(self._gens[("phi", i, mid)], PLAIN),
                     (self._gens[("phi", mid, j)], PLAIN)],
                    central=[(self.f_gen(i, mid, j), -1)])
                self.rels.add_generator_rule(self._gens[("phi", i, j)], repl)

        # section families, rewritten toward chart 0
        for sec in sections:
            alpha_name = "alpha" if sec == "g" else f"alpha_{sec}"
            for i in range(size):
                self._gens[(sec, i)] = Generator(sec, U1, (i,), alpha_name)
            for j in range(1, size):
                phi = self._gens[("phi", 0, j)]
                repl = make_word([(phi, INV),
                                  (self._gens[(sec, 0)], PLAIN),
                                  (phi, PLAIN)])
                self.rels.add_generator_rule(self._gens[(sec, j)], repl)

        # scalar coboundary closures on the generic simplex
        self.rels.add_scalar_rule(coboundary_closure(
            "h", 4, None, lambda T, d: self._sym("h", T, closed=True)))
        self.rels.add_scalar_rule(coboundary_closure(
            "eta", 3, lambda T: self._sym("h", T, closed=True),
            lambda T, d: self._sym("eta", T, diff=d)))
        for sec in sections:
            a_name = "a" if sec == "g" else f"a_{sec}"
            alpha_name = "alpha" if sec == "g" else f"alpha_{sec}"
            if global_alpha:
                # the determinant logarithm is global: all alpha_i agree
                self.rels.add_scalar_rule(coboundary_closure(
                    alpha_name, 1, None,
                    lambda T, d, an=alpha_name: self._sym(an, T, diff=d)))
            else:
                self.rels.add_scalar_rule(coboundary_closure(
                    a_name, 2, None,
                    lambda T, d, an=a_name: self._sym(an, T, closed=True)))
                self.rels.add_scalar_rule(coboundary_closure(
                    alpha_name, 1,
                    lambda T, an=a_name: self._sym(an, T, closed=True),
                    lambda T, d, an=alpha_name: self._sym(an, T, diff=d)))

    # -- raw symbols ---------------------------------------------------

    def _sym(self, name: str, indices: Idx, degree: int = 0,
             closed: bool = False, diff: bool = False) -> Expr:
        return Expr.atom(SymAtom(name, tuple(indices), degree, closed, diff))

    def f_gen(self, i: int, j: int, k: int) -> Generator:
        key = ("f", i, j, k)
        if key not in self._gens:
            self._gens[key] = Generator("f", S1, (i, j, k), "eta")
        return self._gens[key]

    # -- base family accessors ------------------------------------------

    def g(self, i: int, sec: str = "g") -> Word:
        return group_word(self._gens[(sec, i)])

    def phi(self, i: int, j: int) -> Word:
        if i == j:
            raise ValueError("phi needs two distinct charts")
        if i < j:
            return group_word(self._gens[("phi", i, j)])
        return word_inv(group_word(self._gens[("phi", j, i)]))

    def f(self, i: int, j: int, k: int) -> Word:
        return make_word(central=[(self.f_gen(i, j, k), 1)])

    def eta(self, T: Idx, diff: bool = False) -> Expr:
        return self._sym("eta", T, diff=diff)

    def alpha(self, i: int, sec: str = "g", diff: bool = False) -> Expr:
        name = "alpha" if sec == "g" else f"alpha_{sec}"
        return self._sym(name, (i,), diff=diff)

    def h(self, T: Idx) -> Expr:
        return self._sym("h", T, closed=True)

    def a(self, T: Idx, sec: str = "g") -> Expr:
        if self.global_alpha:
            return Expr.zero()
        name = "a" if sec == "g" else f"a_{sec}"
        return self._sym(name, T, closed=True)

    def section_data(self, sec: str = "g") -> SectionData:
        return SectionData(
            g=lambda i: self.g(i, sec),
            phi=self.phi,
            eta=lambda T: self.eta(T),
            deta=lambda T: self.eta(T, diff=True),
            alpha=lambda i: self.alpha(i, sec),
            dalpha=lambda i: self.alpha(i, sec, diff=True),
            h=self.h,
            a=lambda T: self.a(T, sec),
        )

    # -- auxiliary free families (identity-specific extras) -------------

    def free_symbol(self, name: str, T: Idx = (), degree: int = 0,
                    closed: bool = False, diff: bool = False) -> Expr:
        return self._sym(name, T, degree, closed, diff)

    def psi(self, i: int) -> Word:
        key = ("psi", i)
        if key not in self._gens:
            self._gens[key] = Generator("psi", U, (i,))
        return group_word(self._gens[key])

    def circle_shift(self, i: int, j: int) -> Word:
        """exp(tau * rho_ij) as a central generator; rho_ji = -rho_ij."""
        if i > j:
            return word_inv(self.circle_shift(j, i))
        key = ("e", i, j)
        if key not in self._gens:
            self._gens[key] = Generator("e", S1, (i, j), "rho")
        return make_word(central=[(self._gens[key], 1)])

    def rho(self, i: int, j: int, diff: bool = False) -> Expr:
        if i > j:
            return -self.rho(j, i, diff)
        return self._sym("rho", (i, j), diff=diff)


# ----------------------------------------------------------------------
# Cech conventions on index tuples
# ----------------------------------------------------------------------

def cech_delta(family: Callable[[Idx], Expr], T: Idx) -> Expr:
    """(delta F)(T) = sum_j (-1)^j F(T with j-th index dropped)."""
    out = Expr.zero()
    for j in range(len(T)):
        out = out + family(T[:j] + T[j + 1:]).scale((-1) ** j)
    return out


def cup(F: Callable[[Idx], Expr], p: int,
        G: Callable[[Idx], Expr]) -> Callable[[Idx], Expr]:
    """Front-face / back-face cup product of index families."""

    def FG(T: Idx) -> Expr:
        return F(T[:p + 1]) * G(T[p:])

    return FG


# ----------------------------------------------------------------------
# The degree-4 cocycle (b, beta0, beta1, beta2, beta3)
# ----------------------------------------------------------------------

def beta3(d: SectionData, i: int) -> Expr:
    return C3(d.g(i)).scale(*PREF_BETA3)


def beta2(d: SectionData, i: int, j: int) -> Expr:
    e = B2(d.g(j), d.phi(j, i)) - B2(d.phi(j, i), d.g(i))
    return e.scale(*PREF_BETA2)


def beta1(d: SectionData, i: int, j: int, k: int) -> Expr:
    return -(d.eta((i, j, k)) * d.dalpha(k))


def beta0(d: SectionData, i: int, j: int, k: int, l: int) -> Expr:
    return -(d.h((i, j, k, l)) * d.alpha(l))


def beta_b(d: SectionData, i: int, j: int, k: int, l: int, m: int) -> Expr:
    return -(d.h((i, j, k, l)) * d.a((l, m)))


# ----------------------------------------------------------------------
# The degree-6 cochain (c, gamma0..gamma5)
# ----------------------------------------------------------------------

def gamma5(d: SectionData, i: int) -> Expr:
    return C5(d.g(i)).scale(*PREF_GAMMA5)


def gamma4(d: SectionData, i0: int, i1: int) -> Expr:
    e = B4(d.g(i1), d.phi(i1, i0)) - B4(d.phi(i1, i0), d.g(i0))
    return e.scale(*PREF_GAMMA4)


def gamma3(d: SectionData, i0: int, i1: int, i2: int) -> Expr:
    T = (i0, i1, i2)
    chain = word_mul(d.phi(i2, i1), d.phi(i1, i0))
    out = (d.eta(T) * beta3(d, i2)).scale(-2)
    out = out - d.deta(T) * beta2(d, i0, i2)
    out = out + (d.deta(T)
                 * (B2(chain, d.g(i0)) + B2(d.g(i2), chain))
                 ).scale(Fraction(-1, 6), -2)
    out = out + (A(d.g(i2), d.phi(i2, i1), d.phi(i1, i0))
                 - A(d.phi(i2, i1), d.g(i1), d.phi(i1, i0))
                 + A(d.phi(i2, i1), d.phi(i1, i0), d.g(i0))
                 ).scale(Fraction(1, 6), -3)
    return out


def gamma2(d: SectionData, i0: int, i1: int, i2: int, i3: int) -> Expr:
    # first term: -2 eta_{i0 i1 i2} beta2_{i2 i3}; the circle-valued
    # logarithm (not the integer cocycle) is what pairs with beta2 here,
    # as the additivity identities force
    return ((d.eta((i0, i1, i2)) * beta2(d, i2, i3)).scale(-2)
            - d.eta((i0, i1, i2)) * beta1(d, i0, i2, i3).d()
            + d.eta((i1, i2, i3)) * beta1(d, i0, i1, i3).d())


def gamma1(d: SectionData, i0, i1, i2, i3, i4) -> Expr:
    return (-(d.eta((i0, i1, i2)) * beta1(d, i2, i3, i4))
            + d.h((i1, i2, i3, i4)) * beta1(d, i0, i1, i4)
            + d.h((i0, i1, i2, i3)) * beta1(d, i0, i3, i4))


def gamma0(d: SectionData, i0, i1, i2, i3, i4, i5) -> Expr:
    return (d.h((i2, i3, i4, i5)) * beta0(d, i0, i1, i2, i5)
            + d.h((i1, i2, i3, i4)) * beta0(d, i0, i1, i4, i5)
            + d.h((i0, i1, i2, i3)) * beta0(d, i0, i3, i4, i5))


def gamma_c(d: SectionData, i0, i1, i2, i3, i4, i5, i6) -> Expr:
    return (d.h((i2, i3, i4, i5)) * beta_b(d, i0, i1, i2, i5, i6)
            + d.h((i1, i2, i3, i4)) * beta_b(d, i0, i1, i4, i5, i6)
            + d.h((i0, i1, i2, i3)) * beta_b(d, i0, i3, i4, i5, i6))


# ----------------------------------------------------------------------
# Integer quadratic cochains
# ----------------------------------------------------------------------

def Q_of_h(d: SectionData, T: Idx) -> Expr:
    """h_{2345} h_{0125} + h_{1234} h_{0145} + h_{0123} h_{0345} on a
    6-index tuple; represents the square operation on h mod 2."""
    i0, i1, i2, i3, i4, i5 = T
    return (d.h((i2, i3, i4, i5)) * d.h((i0, i1, i2, i5))
            + d.h((i1, i2, i3, i4)) * d.h((i0, i1, i4, i5))
            + d.h((i0, i1, i2, i3)) * d.h((i0, i3, i4, i5)))


def P_of_xi(ctx: SimplexContext, d: SectionData, T: Idx) -> Expr:
    """xi_{012} xi_{234} - h_{1234} xi_{014} - h_{0123} xi_{034} for a
    real potential xi of a torsion class: delta(xi) = h."""
    i0, i1, i2, i3, i4 = T
    xi = lambda S: ctx.free_symbol("xiT", S, closed=True)  # noqa: E731
    return (xi((i0, i1, i2)) * xi((i2, i3, i4))
            - d.h((i1, i2, i3, i4)) * xi((i0, i1, i4))
            - d.h((i0, i1, i2, i3)) * xi((i0, i3, i4)))


# ----------------------------------------------------------------------
# Characteristic cochains
# ----------------------------------------------------------------------

def nu3(d: SectionData, i: int, j: int) -> Expr:
    """(1,3)-component of the degree-4 characteristic cocycle."""
    return beta2(d, i, j) * d.dalpha(j)


def nu4(d: SectionData, i: int) -> Expr:
    """(0,4)-component."""
    return beta3(d, i) * d.dalpha(i)


def S4(d: SectionData, i: int, j: int) -> Expr:
    return beta2(d, i, j) * beta2(d, i, j)


def pi9(d: SectionData, i: int) -> Expr:
    return gamma5(d, i) * beta3(d, i) * d.dalpha(i)


def pi8(d: SectionData, i0, i1) -> Expr:
    return (gamma4(d, i0, i1) * beta3(d, i1) * d.dalpha(i1)
            - gamma5(d, i0) * beta2(d, i0, i1) * d.dalpha(i1))


def pi7(d: SectionData, i0, i1, i2) -> Expr:
    return (gamma3(d, i0, i1, i2) * beta3(d, i2) * d.dalpha(i2)
            + gamma4(d, i0, i1) * beta2(d, i1, i2) * d.dalpha(i2))


def pi6(d: SectionData, i0, i1, i2, i3) -> Expr:
    return (gamma2(d, i0, i1, i2, i3) * beta3(d, i3) * d.dalpha(i3)
            - gamma3(d, i0, i1, i2) * beta2(d, i2, i3) * d.dalpha(i3))


def pi5(d: SectionData, i0, i1, i2, i3, i4) -> Expr:
    return (gamma2(d, i0, i1, i2, i3) * beta2(d, i3, i4) * d.dalpha(i4)
            + d.h((i0, i1, i2, i3)) * S4(d, i3, i4) * d.dalpha(i4))


# ----------------------------------------------------------------------
# Partial Chern-character cochains
# ----------------------------------------------------------------------

class ChernData:
    """A full Deligne 3-cocycle refinement (h, eta, eta1, eta2) of the
    twist together with the induced corrected cochains."""

    def __init__(self, ctx: SimplexContext, d: SectionData):
        self.ctx = ctx
        self.d = d
        # closures: delta(eta2) = d eta1, delta(eta1) = -d eta0
        ctx.rels.add_scalar_rule(coboundary_closure(
            "eta2", 1, lambda T: self.eta1(T, diff=True),
            lambda T, df: self._e2(T, df)))
        ctx.rels.add_scalar_rule(coboundary_closure(
            "eta1", 2, lambda T: -ctx.eta(T, diff=True),
            lambda T, df: self._e1(T, df)))

    def _e1(self, T: Idx, diff: bool = False) -> Expr:
        return self.ctx.free_symbol("eta1", T, degree=1, diff=diff)

    def _e2(self, T: Idx, diff: bool = False) -> Expr:
        return self.ctx.free_symbol("eta2", T, degree=2, diff=diff)

    def eta1(self, T: Idx, diff: bool = False) -> Expr:
        return self._e1(T, diff)

    def eta2(self, i: int, diff: bool = False) -> Expr:
        return self._e2((i,), diff)

    # corrected components

    def alpha_t(self, i: int) -> Expr:
        return self.d.dalpha(i)

    def beta_t2(self, i: int, j: int) -> Expr:
        return beta2(self.d, i, j) + self.eta1((i, j)) * self.d.dalpha(j)

    def beta_t3(self, i: int) -> Expr:
        return beta3(self.d, i) + self.eta2(i) * self.d.dalpha(i)

    def theta5(self, i: int) -> Expr:
        return ((self.eta2(i) * beta3(self.d, i)).scale(2)
                + self.eta2(i) * self.eta2(i) * self.d.dalpha(i))

    def theta4(self, i0: int, i1: int) -> Expr:
        d = self.d
        return ((self.eta1((i0, i1)) * beta3(d, i1)
                 + self.eta2(i0) * beta2(d, i0, i1)).scale(2)
                + (self.eta1((i0, i1)) * self.eta2(i1)
                   + self.eta2(i0) * self.eta1((i0, i1))) * d.dalpha(i1))

    def theta3(self, i0: int, i1: int, i2: int) -> Expr:
        d = self.d
        return ((d.eta((i0, i1, i2)) * beta3(d, i2)
                 - self.eta1((i0, i1)) * beta2(d, i1, i2)).scale(2)
                + (d.eta((i0, i1, i2)) * self.eta2(i2)
                   - self.eta1((i0, i1)) * self.eta1((i1, i2))
                   - self.eta2(i0) * d.eta((i0, i1, i2))) * d.dalpha(i2))

    def theta2(self, i0, i1, i2, i3) -> Expr:
        d = self.d
        return ((d.eta((i0, i1, i2)) * beta2(d, i2, i3)).scale(2)
                + (d.eta((i0, i1, i2)) * self.eta1((i2, i3))
                   - self.eta1((i0, i1)) * d.eta((i1, i2, i3))
                   + d.h((i0, i1, i2, i3)) * self.eta1((i0, i3)))
                * d.dalpha(i3))

    def gamma_t(self, k: int, T: Idx) -> Expr:
        base = {5: gamma5, 4: gamma4, 3: gamma3, 2: gamma2}[k]
        theta = {5: self.theta5, 4: self.theta4,
                 3: self.theta3, 2: self.theta2}[k]
        return base(self.d, *T) + theta(*T)
