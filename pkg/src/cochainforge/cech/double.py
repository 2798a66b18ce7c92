"""Cech-de Rham double complexes and Deligne cochains.

The de Rham direction is modeled by rational simplicial cochains on a
second complex, with the simplicial coboundary playing d.  This keeps
every identity of the bicomplex exact and finitely representable; the
cohomology it computes agrees rationally with the smooth theory, which
is all the group-level statements use.

A Deligne cochain of weight n ("order-n complex": integers into forms
of degree < n) carries an integer Cech component and form components;
its differential follows the alternating convention

    (D c)^[j] = delta c^[j] + (-1)^(cech degree of the slot) *
                (integer part if j = 0 else d c^[j-1]),

with form degrees >= n truncated away.  The cup product is

    (a cup b, a cup beta^[0], ..., a cup beta^[n-1],
     alpha^[0] cup d beta^[n-1], ..., alpha^[m-1] cup d beta^[n-1]).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .complexes import SimplicialComplex, Simplex
from .fgab import FGAbelianGroup

Key = Tuple[Simplex, Simplex]
Component = Dict[Key, Fraction]


@dataclass
class DoubleCochain:
    """Total-degree-r cochain with components c^(p,q) on (K_p, L_q)."""

    K: SimplicialComplex
    L: SimplicialComplex
    total: int
    comps: Dict[Tuple[int, int], Component] = field(default_factory=dict)

    def component(self, p: int, q: int) -> Component:
        return self.comps.get((p, q), {})

    def set(self, p: int, q: int, values: Component) -> "DoubleCochain":
        if p + q != self.total:
            raise ValueError("component bidegree off the total diagonal")
        clean = {k: Fraction(v) for k, v in values.items() if v}
        if clean:
            self.comps[(p, q)] = clean
        return self

    def is_zero(self) -> bool:
        return all(not c for c in self.comps.values())

    def __add__(self, other: "DoubleCochain") -> "DoubleCochain":
        out = DoubleCochain(self.K, self.L, self.total)
        for key in set(self.comps) | set(other.comps):
            merged: Component = dict(self.comps.get(key, {}))
            for k, v in other.comps.get(key, {}).items():
                merged[k] = merged.get(k, Fraction(0)) + v
            out.set(*key, merged)
        return out

    def scale(self, c) -> "DoubleCochain":
        out = DoubleCochain(self.K, self.L, self.total)
        for (p, q), comp in self.comps.items():
            out.set(p, q, {k: Fraction(c) * v for k, v in comp.items()})
        return out

    def __sub__(self, other: "DoubleCochain") -> "DoubleCochain":
        return self + other.scale(-1)

    def D(self) -> "DoubleCochain":
        """Total differential delta + (-1)^p d."""
        out = DoubleCochain(self.K, self.L, self.total + 1)
        acc: Dict[Tuple[int, int], Component] = {}

        def bump(p, q, key, val):
            if val:
                comp = acc.setdefault((p, q), {})
                comp[key] = comp.get(key, Fraction(0)) + val
        for (p, q), comp in self.comps.items():
            for (sig, tau_), v in comp.items():
                for s2 in self.K.simplices(p + 1):
                    # delta: alternating sum over vertex deletions
                    for j in range(len(s2)):
                        if s2[:j] + s2[j + 1:] == sig:
                            bump(p + 1, q, (s2, tau_), (-1) ** j * v)
                sgn = (-1) ** p
                for t2 in self.L.simplices(q + 1):
                    for j in range(len(t2)):
                        if t2[:j] + t2[j + 1:] == tau_:
                            bump(p, q + 1, (sig, t2), sgn * (-1) ** j * v)
        for key, comp in acc.items():
            out.set(*key, comp)
        return out


def dc_wedge(a: DoubleCochain, b: DoubleCochain) -> DoubleCochain:
    """Signed front-face/back-face product; satisfies
    D(a ^ b) = Da ^ b + (-1)^|a| a ^ Db exactly."""
    if a.K is not b.K or a.L is not b.L:
        raise ValueError("operands live on different complexes")
    out = DoubleCochain(a.K, a.L, a.total + b.total)
    acc: Dict[Tuple[int, int], Component] = {}
    for (p1, q1), c1 in a.comps.items():
        for (p2, q2), c2 in b.comps.items():
            sign = -1 if (q1 * p2) % 2 else 1
            target = acc.setdefault((p1 + p2, q1 + q2), {})
            for (s1, t1), v1 in c1.items():
                for (s2, t2), v2 in c2.items():
                    if s1[-1:] != s2[:1] or t1[-1:] != t2[:1]:
                        continue
                    sig = s1 + s2[1:]
                    tau_ = t1 + t2[1:]
                    if not (a.K.has(sig) and a.L.has(tau_)):
                        continue
                    key = (sig, tau_)
                    target[key] = target.get(key, Fraction(0)) + sign * v1 * v2
    for key, comp in acc.items():
        out.set(*key, comp)
    return out


def random_double(K: SimplicialComplex, L: SimplicialComplex, total: int,
                  rng: random.Random, density: float = 0.5) -> DoubleCochain:
    out = DoubleCochain(K, L, total)
    for p in range(0, total + 1):
        q = total - p
        if p > K.dimension or q > L.dimension:
            continue
        comp: Component = {}
        for sig in K.simplices(p):
            for tau_ in L.simplices(q):
                if rng.random() < density:
                    comp[(sig, tau_)] = Fraction(rng.randint(-4, 4))
        out.set(p, q, comp)
    return out


# ----------------------------------------------------------------------
# Deligne cochains
# ----------------------------------------------------------------------

@dataclass
class DeligneCochain:
    """Weight-n Deligne p-cochain: integer part at Cech degree p plus
    form components beta^[j] of form degree j at Cech degree p-1-j."""

    K: SimplicialComplex
    L: SimplicialComplex
    cech_degree: int
    weight: int
    integer: Dict[Simplex, int] = field(default_factory=dict)
    forms: Dict[int, Component] = field(default_factory=dict)

    def form(self, j: int) -> Component:
        return self.forms.get(j, {})

    def set_form(self, j: int, comp: Component) -> "DeligneCochain":
        if not (0 <= j < self.weight):
            raise ValueError(f"form degree {j} outside weight {self.weight}")
        if j > self.cech_degree - 1:
            raise ValueError("form component above the cochain degree")
        clean = {k: Fraction(v) for k, v in comp.items() if v}
        if clean:
            self.forms[j] = clean
        return self

    def is_zero(self) -> bool:
        return (not any(self.integer.values())
                and all(not c for c in self.forms.values()))

    def __sub__(self, other: "DeligneCochain") -> "DeligneCochain":
        out = DeligneCochain(self.K, self.L, self.cech_degree, self.weight)
        ints = dict(self.integer)
        for k, v in other.integer.items():
            ints[k] = ints.get(k, 0) - v
        out.integer = {k: v for k, v in ints.items() if v}
        for j in set(self.forms) | set(other.forms):
            comp = dict(self.forms.get(j, {}))
            for k, v in other.forms.get(j, {}).items():
                comp[k] = comp.get(k, Fraction(0)) - v
            out.set_form(j, comp)
        return out

    def scale(self, c) -> "DeligneCochain":
        out = DeligneCochain(self.K, self.L, self.cech_degree, self.weight)
        out.integer = {k: c * v for k, v in self.integer.items() if c * v}
        for j, comp in self.forms.items():
            out.set_form(j, {k: Fraction(c) * v for k, v in comp.items()})
        return out

    # -- differential --------------------------------------------------

    def D(self) -> "DeligneCochain":
        p = self.cech_degree
        out = DeligneCochain(self.K, self.L, p + 1, self.weight)
        out.integer = _cech_delta_int(self.K, self.integer, p)
        for j in range(min(self.weight, p + 1)):
            comp: Component = {}
            _acc_cech_delta(self.K, self.L, self.form(j), p - 1 - j, j, comp)
            sgn = (-1) ** (p - j)
            if j == 0:
                for sig, v in self.integer.items():
                    for tau_ in self.L.simplices(0):
                        key = (sig, tau_)
                        comp[key] = comp.get(key, Fraction(0)) + sgn * v
            else:
                _acc_form_d(self.L, self.form(j - 1), sgn, comp)
            comp = {k: v for k, v in comp.items() if v}
            if comp:
                out.set_form(j, comp)
        return out


def _cech_delta_int(K: SimplicialComplex, vals: Dict[Simplex, int],
                    p: int) -> Dict[Simplex, int]:
    out: Dict[Simplex, int] = {}
    for s2 in K.simplices(p + 1):
        total = 0
        for j in range(len(s2)):
            total += (-1) ** j * vals.get(s2[:j] + s2[j + 1:], 0)
        if total:
            out[s2] = total
    return out


def _acc_cech_delta(K, L, comp: Component, p: int, q: int, into: Component):
    for (sig, tau_), v in comp.items():
        for s2 in K.simplices(p + 1):
            for j in range(len(s2)):
                if s2[:j] + s2[j + 1:] == sig:
                    key = (s2, tau_)
                    into[key] = into.get(key, Fraction(0)) + (-1) ** j * v


def _acc_form_d(L, comp: Component, sgn: int, into: Component):
    for (sig, tau_), v in comp.items():
        for t2 in L.simplices(len(tau_)):
            for j in range(len(t2)):
                if t2[:j] + t2[j + 1:] == tau_:
                    key = (sig, t2)
                    into[key] = into.get(key, Fraction(0)) + sgn * (-1) ** j * v


def _cup_int_int(K, a: Dict[Simplex, int], pa: int,
                 b: Dict[Simplex, int], pb: int) -> Dict[Simplex, int]:
    out: Dict[Simplex, int] = {}
    for s in K.simplices(pa + pb):
        v = a.get(s[:pa + 1], 0) * b.get(s[pa:], 0)
        if v:
            out[s] = v
    return out


def _cup_int_form(K, a: Dict[Simplex, int], pa: int,
                  comp: Component, pb: int) -> Component:
    out: Component = {}
    for s in K.simplices(pa + pb):
        front = s[:pa + 1]
        av = a.get(front, 0)
        if not av:
            continue
        for (sig, tau_), v in comp.items():
            if sig == s[pa:]:
                key = (s, tau_)
                out[key] = out.get(key, Fraction(0)) + av * v
    return out


def _cup_form_form(K, L, ca: Component, pa: int, qa: int,
                   cb: Component, pb: int,
                   sign: Optional[int] = None) -> Component:
    """Front-face/back-face in both directions; the default sign is the
    bicomplex Koszul twist, callers may override."""
    out: Component = {}
    if sign is None:
        sign = -1 if (qa * pb) % 2 else 1
    for (s1, t1), v1 in ca.items():
        for (s2, t2), v2 in cb.items():
            if s1[-1:] != s2[:1] or t1[-1:] != t2[:1]:
                continue
            sig, tau_ = s1 + s2[1:], t1 + t2[1:]
            if not (K.has(sig) and L.has(tau_)):
                continue
            key = (sig, tau_)
            out[key] = out.get(key, Fraction(0)) + sign * v1 * v2
    return out


def deligne_cup(a: DeligneCochain, b: DeligneCochain) -> DeligneCochain:
    """(a cup b, a cup beta^[j], alpha^[i] cup d beta^[n-1])."""
    K, L = a.K, a.L
    pa, pb = a.cech_degree, b.cech_degree
    m, n = a.weight, b.weight
    out = DeligneCochain(K, L, pa + pb, m + n)
    out.integer = _cup_int_int(K, a.integer, pa, b.integer, pb)
    for j in range(n):
        comp = _cup_int_form(K, a.integer, pa, b.form(j), pb - 1 - j)
        if comp:
            out.set_form(j, comp)
    top = b.form(n - 1)
    dtop: Component = {}
    _acc_form_d(L, top, 1, dtop)
    for i in range(m):
        # Koszul twist by the sheaf level (form degree + 1) of the left
        # component against the Cech degree of the right one
        sign = -1 if ((i + 1) * (pb - n)) % 2 else 1
        comp = _cup_form_form(K, L, a.form(i), pa - 1 - i, i,
                              dtop, pb - n, sign=sign)
        if comp:
            out.set_form(n + i, comp)
    return out


# ----------------------------------------------------------------------
# Deligne cohomology at the group level
# ----------------------------------------------------------------------

@dataclass
class DeligneDescriptor:
    """The weight-n degree-n case: no finite presentation; both natural
    exact sequences are recorded with their computable end groups."""

    n: int
    flat_part: FGAbelianGroup            # H^{n-1}(M, R/Z)
    integral_part: FGAbelianGroup        # H^n(M, Z)
    sequences: Tuple[str, str] = ()

    def __str__(self):
        return (f"extension of {self.integral_part} by forms/closed-integral"
                f" and of closed-integral-{self.n}-forms by {self.flat_part}")

    def to_dict(self) -> dict:
        return {
            "kind": "extension-descriptor",
            "weight": self.n,
            "flat_part": self.flat_part.to_dict(),
            "integral_part": self.integral_part.to_dict(),
            "sequences": list(self.sequences),
        }


def deligne_groups(cohomology: Dict[int, FGAbelianGroup], n: int, p: int):
    """Smooth Deligne cohomology of weight n in degree p, from the
    integral cohomology of the base.

    For p < n the answer is H^{p-1}(M, R/Z): circle factors from the
    free rank of H^{p-1} plus the torsion of H^p (universal
    coefficients with a divisible target).  For p > n the answer is
    H^p(M, Z).  At p = n there is no single group; a descriptor carries
    the two natural exact sequences.
    """
    if n <= 0:
        raise ValueError("weight must be positive")
    if p < 0:
        raise ValueError("degree must be non-negative")
    Hp = cohomology.get(p, FGAbelianGroup())
    if p < n:
        Hm1 = cohomology.get(p - 1, FGAbelianGroup())
        return FGAbelianGroup(0, Hp.torsion, torus_rank=Hm1.rank)
    if p > n:
        return Hp
    Hm1 = cohomology.get(n - 1, FGAbelianGroup())
    flat = FGAbelianGroup(0, Hp.torsion, torus_rank=Hm1.rank)
    return DeligneDescriptor(
        n=n, flat_part=flat, integral_part=Hp,
        sequences=(
            f"0 -> {flat} -> H^{n}(weight {n}) -> closed integral "
            f"{n}-forms -> 0",
            f"0 -> ({n-1})-forms / closed integral -> H^{n}(weight {n}) "
            f"-> {Hp} -> 0",
        ))
