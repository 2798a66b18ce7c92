"""Operator-valued words and the graded cyclic trace.

A word is an ordered product of factors ``g``, ``g^-1`` or ``dg`` for
declared generators g, together with a central block of circle-valued
(S1) factors.  S1 factors commute with everything and their
differentials are eliminated immediately through the logarithm rule
``df = tau * d(log f) * f``, so they only ever appear as net integer
powers attached to a word.

Operator expressions (OpExpr) are sums  coeff * tau^k * scalars * word;
they are what group arguments substitute into before a trace turns them
back into scalar expressions.

The trace is graded-cyclic: tr[ab] = (-1)^(|a||b|) tr[ba].  A trace atom
is stored as the minimal rotation of its (cyclically reduced) word; a
word one of whose rotations equals the minimal one with opposite sign
is the zero atom, which is how tr[F^2] = 0 for odd F comes out of the
engine rather than being postulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .expr import DeclarationError, Expr, SymAtom

# generator classes
U1 = "U1"   # unitary, identity plus trace class
U = "U"     # general unitary
S1 = "S1"   # central circle-valued scalar

PLAIN, INV, DIFF = 0, 1, 2
_FORM_TXT = {PLAIN: "{}", INV: "{}^-1", DIFF: "d {}"}


@dataclass(frozen=True)
class Generator:
    name: str
    klass: str = U
    indices: Tuple[int, ...] = ()
    log_symbol: Optional[str] = None

    def __post_init__(self):
        if self.klass not in (U1, U, S1):
            raise DeclarationError(f"unknown generator class {self.klass!r}")
        if self.log_symbol and self.klass == U:
            raise DeclarationError(
                f"{self.name}: only S1 and U1 generators carry a log symbol")
        if self.klass == S1 and not self.log_symbol:
            raise DeclarationError(
                f"{self.name}: S1 generators need a log symbol (f = exp(tau * log))")

    def sort_key(self):
        return (self.name, self.indices)

    def log_atom(self, differentiated: bool = False) -> SymAtom:
        assert self.log_symbol is not None
        return SymAtom(self.log_symbol, self.indices, 0, False, differentiated)

    def __str__(self):
        return self.name + "".join(str(i) for i in self.indices)


Factor = Tuple[Generator, int]
Central = Tuple[Tuple[Generator, int], ...]


def _factor_key(fac: Factor):
    return (fac[0].name, fac[0].indices, fac[1])


def _cancels(a: Factor, b: Factor) -> bool:
    return a[0] == b[0] and {a[1], b[1]} == {PLAIN, INV}


def _reduce_factors(factors: Iterable[Factor]) -> Tuple[Factor, ...]:
    stack: List[Factor] = []
    for fac in factors:
        if stack and _cancels(stack[-1], fac):
            stack.pop()
        else:
            stack.append(fac)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    central: Central = ()
    factors: Tuple[Factor, ...] = ()

    @property
    def degree(self) -> int:
        return sum(1 for _, form in self.factors if form == DIFF)

    def is_group_word(self) -> bool:
        return all(form != DIFF for _, form in self.factors)

    def key(self):
        return (tuple((g.name, g.indices, n) for g, n in self.central),
                tuple(_factor_key(f) for f in self.factors))

    def __str__(self):
        bits = [f"{g}^{n}" if n != 1 else str(g) for g, n in self.central]
        bits += [_FORM_TXT[form].format(g) for g, form in self.factors]
        return " * ".join(bits) if bits else "1"


def make_word(factors: Iterable[Factor] = (),
              central: Iterable[Tuple[Generator, int]] = ()) -> Word:
    """Build a word, folding S1 factors into the central block."""
    cen: Dict[Generator, int] = {}
    for g, n in central:
        if g.klass != S1:
            raise DeclarationError(f"{g} is not central")
        cen[g] = cen.get(g, 0) + n
    plain: List[Factor] = []
    for g, form in factors:
        if g.klass == S1:
            if form == DIFF:
                raise DeclarationError(
                    "S1 differentials enter through op_factor, not raw words")
            cen[g] = cen.get(g, 0) + (1 if form == PLAIN else -1)
        else:
            plain.append((g, form))
    cen_t = tuple(sorted(((g, n) for g, n in cen.items() if n),
                         key=lambda it: it[0].sort_key()))
    return Word(cen_t, _reduce_factors(plain))


def word_mul(a: Word, b: Word) -> Word:
    cen: Dict[Generator, int] = dict(a.central)
    for g, n in b.central:
        cen[g] = cen.get(g, 0) + n
    cen_t = tuple(sorted(((g, n) for g, n in cen.items() if n),
                         key=lambda it: it[0].sort_key()))
    stack = list(a.factors)
    for fac in b.factors:
        if stack and _cancels(stack[-1], fac):
            stack.pop()
        else:
            stack.append(fac)
    return Word(cen_t, tuple(stack))


def word_inv(w: Word) -> Word:
    if not w.is_group_word():
        raise DeclarationError(f"cannot invert the form-valued word {w}")
    inv_form = {PLAIN: INV, INV: PLAIN}
    return Word(tuple(sorted(((g, -n) for g, n in w.central),
                             key=lambda it: it[0].sort_key())),
                tuple((g, inv_form[form]) for g, form in reversed(w.factors)))


def group_word(*gens: "Generator | Tuple[Generator, int]") -> Word:
    """Convenience constructor: ``group_word(phi, (g, INV), psi)``."""
    facs = []
    for item in gens:
        if isinstance(item, Generator):
            facs.append((item, PLAIN))
        else:
            facs.append(item)
    return make_word(facs)


IDENTITY = Word()


# ----------------------------------------------------------------------
# Operator expressions: sums of  coeff * tau^k * scalar-atoms * word
# ----------------------------------------------------------------------

OpTerm = Tuple[Fraction, int, Tuple, Word]
OpExpr = List[OpTerm]


def op_word(w: Word, coeff=1, tau: int = 0, atoms: Tuple = ()) -> OpExpr:
    c = Fraction(coeff)
    return [(c, tau, atoms, w)] if c else []


def op_scale(e: OpExpr, coeff, tau: int = 0) -> OpExpr:
    c = Fraction(coeff)
    if not c:
        return []
    return [(ci * c, ti + tau, ai, wi) for ci, ti, ai, wi in e]


def op_add(*es: OpExpr) -> OpExpr:
    merged: Dict[Tuple, Tuple[Fraction, int, Tuple, Word]] = {}
    out: Dict[Tuple, Fraction] = {}
    keep = {}
    for e in es:
        for c, t, a, w in e:
            key = (t, a, w.key())
            out[key] = out.get(key, Fraction(0)) + c
            keep[key] = (t, a, w)
    res: OpExpr = []
    for key, c in out.items():
        if c:
            t, a, w = keep[key]
            res.append((c, t, a, w))
    return res


def _atoms_degree(atoms: Tuple) -> int:
    return sum(a.total_degree for a in atoms)


def op_mul(e1: OpExpr, e2: OpExpr) -> OpExpr:
    """Product; scalar blocks commute to the front with Koszul signs."""
    out: OpExpr = []
    for c1, t1, a1, w1 in e1:
        d1 = w1.degree
        for c2, t2, a2, w2 in e2:
            # move the second scalar block across the first word
            sign = -1 if (d1 % 2 and _atoms_degree(a2) % 2) else 1
            out.append((sign * c1 * c2, t1 + t2, a1 + a2, word_mul(w1, w2)))
    return op_add(out)


def op_product(es: Sequence[OpExpr]) -> OpExpr:
    acc = op_word(IDENTITY)
    for e in es:
        acc = op_mul(acc, e)
    return acc


def op_pow(e: OpExpr, n: int) -> OpExpr:
    if n < 0:
        raise DeclarationError("negative powers only apply to group words")
    return op_product([e] * n)


def op_factor(g: Generator, form: int) -> OpExpr:
    """A single generator as an operator expression.

    For S1 generators the differential is resolved immediately:
    d f = tau * d(log f) * f.
    """
    if g.klass == S1:
        if form == DIFF:
            return [(Fraction(1), 1, (g.log_atom(differentiated=True),),
                     make_word(central=[(g, 1)]))]
        return op_word(make_word(central=[(g, 1 if form == PLAIN else -1)]))
    return op_word(Word((), ((g, form),)))


def d_word(w: Word) -> OpExpr:
    """Differential of a word: antiderivation over factors plus the
    logarithm rule on the central block; d(X^-1) = -X^-1 dX X^-1."""
    out: OpExpr = []
    for g, n in w.central:
        out.append((Fraction(n), 1, (g.log_atom(differentiated=True),), w))
    prefix_deg = 0
    for k, (g, form) in enumerate(w.factors):
        sign = -1 if prefix_deg % 2 else 1
        if form == PLAIN:
            mid: Tuple[Factor, ...] = ((g, DIFF),)
            c = Fraction(sign)
        elif form == INV:
            mid = ((g, INV), (g, DIFF), (g, INV))
            c = Fraction(-sign)
        else:  # d(dX) = 0
            prefix_deg += 1
            continue
        facs = _reduce_factors(w.factors[:k] + mid + w.factors[k + 1:])
        out.append((c, 0, (), Word(w.central, facs)))
    return op_add(out)


def op_d(e: OpExpr) -> OpExpr:
    out: List[OpExpr] = []
    for c, t, atoms, w in e:
        prefix = 0
        for k, a in enumerate(atoms):
            da = a.d()
            if da is not None:
                sign = -1 if prefix % 2 else 1
                if isinstance(da, Expr):
                    for (t2, a2), c2 in da.terms.items():
                        out.append([(sign * c * c2, t + t2,
                                     atoms[:k] + a2 + atoms[k + 1:], w)])
                else:
                    out.append([(Fraction(sign) * c, t,
                                 atoms[:k] + (da,) + atoms[k + 1:], w)])
            prefix += a.total_degree
        sign = -1 if prefix % 2 else 1
        out.append(op_scale(op_mul(op_word(IDENTITY, coeff=1, atoms=atoms),
                                   d_word(w)), sign * c, t))
    return op_add(*out)


def op_inv(e: OpExpr) -> OpExpr:
    if len(e) != 1:
        raise DeclarationError("only single group words are invertible")
    c, t, atoms, w = e[0]
    if atoms or t != 0 or c not in (1, -1):
        raise DeclarationError("only unit-coefficient group words are invertible")
    return op_word(word_inv(w), coeff=c)


# ----------------------------------------------------------------------
# The graded cyclic trace
# ----------------------------------------------------------------------

def _cyclic_reduce(factors: Tuple[Factor, ...]) -> Tuple[Factor, ...]:
    facs = _reduce_factors(factors)
    while len(facs) >= 2 and _cancels(facs[-1], facs[0]):
        facs = facs[1:-1]
    return facs


@dataclass(frozen=True)
class TraceAtom:
    """A canonical (minimal-rotation) cyclic trace of a word."""

    word: Word

    @property
    def total_degree(self) -> int:
        return self.word.degree

    def d(self) -> Expr:
        return op_trace(d_word(self.word))

    def sort_key(self):
        return (1, self.word.key())

    def __str__(self):
        return f"tr[{self.word}]"


_canon_cache: Dict[Tuple, Optional[Tuple[int, Tuple[Factor, ...]]]] = {}


def _canonical_rotation(factors: Tuple[Factor, ...]):
    """Minimal rotation with its Koszul sign, or None for the zero atom."""
    key = tuple((g.name, g.indices, g.klass, g.log_symbol, form)
                for g, form in factors)
    if key in _canon_cache:
        return _canon_cache[key]
    n = len(factors)
    if n == 0:
        return (1, ())
    total = sum(1 for _, form in factors if form == DIFF)
    best_key = None
    best = None
    signs: Dict[Tuple, set] = {}
    rot = list(factors)
    sign = 1
    for _ in range(n):
        rkey = tuple(_factor_key(f) for f in rot)
        signs.setdefault(rkey, set()).add(sign)
        if best_key is None or rkey < best_key:
            best_key, best = rkey, (sign, tuple(rot))
        head = rot.pop(0)
        dh = 1 if head[1] == DIFF else 0
        if dh and (total - dh) % 2:
            sign = -sign
        rot.append(head)
    result = None if len(signs[best_key]) == 2 else best
    _canon_cache[key] = result
    return result


def trace_word(w: Word) -> Expr:
    """Trace of a single word as a scalar expression."""
    facs = _cyclic_reduce(w.factors)
    canon = _canonical_rotation(facs)
    if canon is None:
        return Expr.zero()
    sign, facs = canon
    # determinant logarithm rule: tr[g^-1 dg] = tau * d(log det g)
    if (not w.central and len(facs) == 2
            and facs[0][0] == facs[1][0]
            and facs[0][1] == INV and facs[1][1] == DIFF
            and facs[0][0].klass == U1 and facs[0][0].log_symbol):
        return Expr.atom(facs[0][0].log_atom(differentiated=True),
                         coeff=sign, tau=1)
    return Expr.atom(TraceAtom(Word(w.central, facs)), coeff=sign)


def op_trace(e: OpExpr) -> Expr:
    out = Expr.zero()
    for c, t, atoms, w in e:
        tr = trace_word(w)
        if tr.is_zero():
            continue
        out = out + Expr.monomial(c, t, atoms) * tr
    return out


# ----------------------------------------------------------------------
# Common composite forms
# ----------------------------------------------------------------------

def mc(x: OpExpr) -> OpExpr:
    """Left Maurer-Cartan combination x^-1 dx."""
    return op_mul(op_inv(x), op_d(x))


def cm(x: OpExpr) -> OpExpr:
    """Right combination dx x^-1."""
    return op_mul(op_d(x), op_inv(x))


def as_op(x) -> OpExpr:
    if isinstance(x, Word):
        return op_word(x)
    if isinstance(x, Generator):
        return op_factor(x, PLAIN)
    return x
