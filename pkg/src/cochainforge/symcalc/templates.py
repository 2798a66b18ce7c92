"""Group cochains of unitary-valued maps and their coboundary.

A CochainTemplate is a p-ary map from group words to scalar
expressions, e.g. the local forms

    C3(f)      = tr[(f^-1 df)^3]
    B2(f, g)   = tr[f^-1 df * dg g^-1]

The group coboundary follows the alternating-sum convention with
pairwise products:

    (delta K)(f_1, ..., f_{p+1}) = K(f_2, ..., f_{p+1})
        + sum_i (-1)^i K(f_1, ..., f_i f_{i+1}, ..., f_{p+1})
        + (-1)^{p+1} K(f_1, ..., f_p).

Substituting a composite argument expands through d(fg) = df g + f dg
and (fg)^-1 = g^-1 f^-1 inside the trace words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .expr import Expr
from .words import (U1, S1, Generator, Word, word_mul)


class ArityError(ValueError):
    pass


def word_class(w: Word) -> str:
    """Conservative operator class of a group word: U1 only when every
    factor is U1 and no central circle factor remains."""
    if w.central:
        return S1 if not w.factors else "U"
    if w.factors and all(g.klass == U1 for g, _ in w.factors):
        return U1
    return "U" if w.factors else S1


@dataclass
class CochainTemplate:
    """A group p-cochain: slot names with class constraints plus a body
    evaluated on group-word arguments."""

    arity: int
    slots: Tuple[str, ...]
    body: Callable[[Sequence[Word]], Expr]
    # optional per-call constraint check returning human-readable warnings
    constraint: Optional[Callable[[Sequence[Word]], List[str]]] = None
    name: str = "K"

    def __post_init__(self):
        if len(self.slots) != self.arity:
            raise ArityError("slot count must equal arity")

    def __call__(self, *args: Word) -> Expr:
        return self.substitute(args)

    def substitute(self, args: Sequence[Word]) -> Expr:
        if len(args) != self.arity:
            raise ArityError(
                f"{self.name} takes {self.arity} arguments, got {len(args)}")
        return self.body(args)

    def class_warnings(self, args: Sequence[Word]) -> List[str]:
        if self.constraint is None:
            return []
        return self.constraint(args)


def group_coboundary(K: CochainTemplate) -> CochainTemplate:
    p = K.arity

    def body(args: Sequence[Word]) -> Expr:
        if len(args) != p + 1:
            raise ArityError(f"delta {K.name} takes {p + 1} arguments")
        out = K.substitute(args[1:])
        for i in range(1, p + 1):
            merged = (tuple(args[:i - 1])
                      + (word_mul(args[i - 1], args[i]),)
                      + tuple(args[i + 1:]))
            out = out + K.substitute(merged).scale((-1) ** i)
        out = out + K.substitute(args[:p]).scale((-1) ** (p + 1))
        return out

    return CochainTemplate(
        arity=p + 1,
        slots=tuple(f"f{i + 1}" for i in range(p + 1)),
        body=body,
        constraint=None,
        name=f"delta {K.name}",
    )


def generic_slots(count: int, klass: str = U1,
                  prefix: str = "x") -> List[Word]:
    """Fresh generic slot generators as one-letter group words."""
    out = []
    for i in range(count):
        g = Generator(f"{prefix}{i + 1}", klass, (),
                      f"log_{prefix}{i + 1}" if klass == S1 else None)
        out.append(Word((), ((g, 0),)) if klass != S1
                   else Word(((g, 1),), ()))
    return out
