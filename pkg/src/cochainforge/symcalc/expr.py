"""Graded-commutative scalar expressions with exact coefficients.

The scalar coefficient ring is Q[tau, tau^-1] with tau denoting 2*pi*i.
Every prefactor appearing in the cochain catalog (-1/24pi^2, i/240pi^3,
i/48pi^3, 1/8pi^2, ...) is an exact rational multiple of a power of tau,
so no floating point arithmetic occurs anywhere.

An Expr is a finite sum of monomials.  A monomial is

    (rational coefficient) * tau^k * a_1 * a_2 * ... * a_m

where each atom a_i is either a declared scalar symbol (a function or
differential form on some overlap, e.g. ``eta_{012}`` or ``d alpha_0``)
or the trace of a word of operator-valued forms.  Atoms commute in the
graded sense: swapping two odd atoms flips the sign, and a repeated odd
atom kills the monomial (the square of an odd form vanishes).

Expressions are kept merged at all times; two expressions are equal iff
their merged representations coincide, which is what makes "reduce to
the empty sum" a decision procedure for the identities in the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union


class DeclarationError(ValueError):
    """A symbol or generator was declared inconsistently."""


@dataclass(frozen=True)
class SymAtom:
    """A named commuting atom: a scalar symbol or its formal differential.

    ``degree`` is the form degree of the undifferentiated symbol;
    ``closed`` marks locally constant (integer-valued) symbols whose
    differential is zero, e.g. the Cech cocycles h_{ijkl} and a_{ij}.
    """

    name: str
    indices: Tuple[int, ...] = ()
    degree: int = 0
    closed: bool = False
    differentiated: bool = False

    def __post_init__(self):
        if self.differentiated and self.closed:
            raise DeclarationError(
                f"closed symbol {self.name}{list(self.indices)} has no differential")

    @property
    def total_degree(self) -> int:
        return self.degree + (1 if self.differentiated else 0)

    def d(self) -> Optional["SymAtom"]:
        """Formal differential, or None when it vanishes."""
        if self.differentiated or self.closed:
            return None
        return SymAtom(self.name, self.indices, self.degree,
                       self.closed, differentiated=True)

    def sort_key(self):
        return (0, self.name, self.indices, self.differentiated)

    def __str__(self) -> str:
        txt = self.name + ("".join(str(i) for i in self.indices))
        return f"d {txt}" if self.differentiated else txt


# TraceAtom is defined in words.py; atoms are duck-typed here through
# total_degree / sort_key / __str__.

Atom = Union[SymAtom, "TraceAtom"]  # noqa: F821


def koszul_sort(atoms: Tuple[Atom, ...]) -> Optional[Tuple[int, Tuple[Atom, ...]]]:
    """Sort atoms by their canonical key, tracking the Koszul sign.

    Returns (sign, sorted_atoms), or None when the monomial vanishes
    because it contains a repeated odd atom.
    """
    lst = list(atoms)
    sign = 1
    # insertion sort: swaps are adjacent transpositions, so the sign is
    # (-1)^(deg_a * deg_b) per swap
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1].sort_key() > lst[j].sort_key():
            if (lst[j - 1].total_degree % 2) and (lst[j].total_degree % 2):
                sign = -sign
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            j -= 1
    for a, b in zip(lst, lst[1:]):
        if a.total_degree % 2 and a == b:
            return None
    return sign, tuple(lst)


MonKey = Tuple[int, Tuple[Atom, ...]]  # (tau power, sorted atoms)


class Expr:
    """A merged sum of monomials; the normal-form carrier of the engine."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        # terms: {(tau, atoms): Fraction}, atoms sorted, no zero entries
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Expr":
        return Expr({})

    @staticmethod
    def const(c, tau: int = 0) -> "Expr":
        c = Fraction(c)
        if c == 0:
            return Expr.zero()
        return Expr({(tau, ()): c})

    @staticmethod
    def atom(a: Atom, coeff=1, tau: int = 0) -> "Expr":
        coeff = Fraction(coeff)
        if coeff == 0:
            return Expr.zero()
        return Expr({(tau, (a,)): coeff})

    @staticmethod
    def monomial(coeff, tau: int, atoms: Iterable[Atom]) -> "Expr":
        coeff = Fraction(coeff)
        if coeff == 0:
            return Expr.zero()
        sorted_ = koszul_sort(tuple(atoms))
        if sorted_ is None:
            return Expr.zero()
        sign, atoms_ = sorted_
        return Expr({(tau, atoms_): sign * coeff})

    # -- ring operations ---------------------------------------------

    def _iadd_term(self, key: MonKey, coeff: Fraction) -> None:
        cur = self.terms.get(key)
        if cur is None:
            self.terms[key] = coeff
        else:
            cur += coeff
            if cur:
                self.terms[key] = cur
            else:
                del self.terms[key]

    def __add__(self, other: "Expr") -> "Expr":
        out = Expr(dict(self.terms))
        for key, c in other.terms.items():
            out._iadd_term(key, c)
        return out

    def __sub__(self, other: "Expr") -> "Expr":
        out = Expr(dict(self.terms))
        for key, c in other.terms.items():
            out._iadd_term(key, -c)
        return out

    def __neg__(self) -> "Expr":
        return Expr({k: -c for k, c in self.terms.items()})

    def scale(self, coeff, tau: int = 0) -> "Expr":
        coeff = Fraction(coeff)
        if coeff == 0:
            return Expr.zero()
        return Expr({(t + tau, a): c * coeff for (t, a), c in self.terms.items()})

    def __mul__(self, other: "Expr") -> "Expr":
        out = Expr()
        for (t1, a1), c1 in self.terms.items():
            for (t2, a2), c2 in other.terms.items():
                sorted_ = koszul_sort(a1 + a2)
                if sorted_ is None:
                    continue
                sign, atoms = sorted_
                out._iadd_term((t1 + t2, atoms), sign * c1 * c2)
        return out

    # -- structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Expr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> Iterator[Tuple[Fraction, int, Tuple[Atom, ...]]]:
        for (tau, atoms), coeff in self.terms.items():
            yield coeff, tau, atoms

    def degree_set(self) -> set:
        return {sum(a.total_degree for a in atoms) for _, atoms in self.terms}

    # -- differential ------------------------------------------------

    def d(self) -> "Expr":
        """Graded Leibniz differential; d of a trace differentiates its word."""
        out = Expr()
        for (tau, atoms), coeff in self.terms.items():
            prefix_deg = 0
            for k, a in enumerate(atoms):
                da = a.d()
                if da is not None:
                    sign = -1 if prefix_deg % 2 else 1
                    if isinstance(da, Expr):
                        # trace atoms differentiate into a sum
                        for (t2, a2), c2 in da.terms.items():
                            rest = atoms[:k] + a2 + atoms[k + 1:]
                            sorted_ = koszul_sort(rest)
                            if sorted_ is None:
                                continue
                            s2, srt = sorted_
                            out._iadd_term((tau + t2, srt), sign * s2 * coeff * c2)
                    else:
                        rest = atoms[:k] + (da,) + atoms[k + 1:]
                        sorted_ = koszul_sort(rest)
                        if sorted_ is not None:
                            s2, srt = sorted_
                            out._iadd_term((tau, srt), sign * s2 * coeff)
                prefix_deg += a.total_degree
        return out

    # -- printing ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (tau, atoms), coeff in sorted(
                self.terms.items(),
                key=lambda kv: (kv[0][0], tuple(a.sort_key() for a in kv[0][1]))):
            factors = []
            if coeff != 1 or (tau == 0 and not atoms):
                factors.append(str(coeff))
            if tau:
                factors.append("tau" if tau == 1 else f"tau^{tau}")
            factors.extend(str(a) for a in atoms)
            bits.append(" * ".join(factors) if factors else "1")
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


ZERO = Expr.zero()
ONE = Expr.const(1)
