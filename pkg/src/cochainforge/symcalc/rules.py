"""Rewriting: generator elimination, scalar closures, normalization.

A RelationSet carries two kinds of oriented rules.

* Generator rules replace a generator by a group word over "smaller"
  generators: transition data on an overlap rewrites toward the minimal
  chart index (g_j -> phi_0j^-1 g_0 phi_0j, non-adjacent transitions
  expand through the circle-valued cocycle, phi_ji -> phi_ij^-1).
  Differentials of replaced generators expand by the Leibniz rule, and
  d(X^-1) is never stored: it is eliminated as -X^-1 dX X^-1.

* Scalar rules replace an indexed scalar atom by an expression, e.g.
  the coboundary closures alpha_j -> alpha_0 + a_0j and
  eta_jkl -> eta_0kl - eta_0jl + eta_0jk + h_0jkl that encode
  delta(alpha) = a and delta(eta) = h on a generic overlap.

Rule application terminates because every rule strictly decreases a
lexicographic measure (non-minimal chart indices, then non-adjacent
transition count); a configurable step budget guards against
user-supplied non-terminating rule sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .expr import Expr, SymAtom
from .words import (DIFF, INV, PLAIN, Generator, OpExpr, TraceAtom, Word,
                    d_word, op_add, op_mul, op_scale, op_trace, op_word,
                    word_inv)


class BudgetExceeded(RuntimeError):
    """Normalization exceeded its rewrite-step budget."""

    def __init__(self, budget: int):
        super().__init__(
            f"normalization exceeded the {budget}-step budget; "
            "the relation set may not terminate")
        self.budget = budget


DEFAULT_BUDGET = 10 ** 6

ScalarRule = Callable[[SymAtom], Optional[Expr]]


@dataclass
class RelationSet:
    """Oriented rewrite rules among generators and indexed scalars."""

    gen_rules: Dict[Generator, Word] = field(default_factory=dict)
    scalar_rules: List[ScalarRule] = field(default_factory=list)
    _word_cache: Dict[Tuple, OpExpr] = field(default_factory=dict, repr=False)
    _factor_cache: Dict[Tuple, OpExpr] = field(default_factory=dict, repr=False)

    def add_generator_rule(self, gen: Generator, replacement: Word) -> None:
        if not replacement.is_group_word():
            raise ValueError("generator replacements must be group words")
        self.gen_rules[gen] = replacement
        self._word_cache.clear()
        self._factor_cache.clear()

    def add_scalar_rule(self, rule: ScalarRule) -> None:
        self.scalar_rules.append(rule)

    def rewrite_scalar(self, atom: SymAtom) -> Optional[Expr]:
        for rule in self.scalar_rules:
            out = rule(atom)
            if out is not None:
                return out
        return None

    # -- word expansion ------------------------------------------------

    def _gen_key(self, g: Generator, form: int):
        return (g.name, g.indices, g.klass, g.log_symbol, form)

    def expand_factor(self, g: Generator, form: int,
                      counter: "StepCounter") -> Optional[OpExpr]:
        """Fully expanded factor, or None when the generator is terminal."""
        repl = self.gen_rules.get(g)
        if repl is None:
            return None
        key = self._gen_key(g, form)
        hit = self._factor_cache.get(key)
        if hit is not None:
            return hit
        counter.tick()
        if form == PLAIN:
            out = self.expand_word(repl, counter)
        elif form == INV:
            out = self.expand_word(word_inv(repl), counter)
        else:
            out = self.expand_opexpr(d_word(repl), counter)
        self._factor_cache[key] = out
        return out

    def expand_word(self, w: Word, counter: "StepCounter") -> OpExpr:
        """Expand every rewritable generator inside a word."""
        key = w.key()
        hit = self._word_cache.get(key)
        if hit is not None:
            return hit
        acc = op_word(Word(w.central, ()))
        for fac in w.factors:
            expanded = self.expand_factor(fac[0], fac[1], counter)
            piece = expanded if expanded is not None else op_word(Word((), (fac,)))
            acc = op_mul(acc, piece)
            counter.tick()
        self._word_cache[key] = acc
        return acc

    def expand_opexpr(self, e: OpExpr, counter: "StepCounter") -> OpExpr:
        parts = [op_mul(op_word(Word((), ()), coeff=c, tau=t, atoms=a),
                        self.expand_word(w, counter))
                 for c, t, a, w in e]
        return op_add(*parts)

    def has_gen_rules_for(self, w: Word) -> bool:
        return any(f[0] in self.gen_rules for f in w.factors)


class StepCounter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.steps = 0
        self.budget = budget

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.budget:
            raise BudgetExceeded(self.budget)


@dataclass
class LintFlag:
    atom: TraceAtom
    reason: str

    def __str__(self):
        return f"{self.atom}: {self.reason}"


@dataclass
class LintReport:
    flags: List[LintFlag] = field(default_factory=list)

    def __bool__(self):
        return bool(self.flags)

    def summary(self) -> str:
        return "clean" if not self.flags else f"{len(self.flags)} trace-class flags"


def trace_class_lint(e: Expr) -> LintReport:
    """Advisory check mirroring the interpretation convention for formal
    traces: a trace whose word contains no differential of a U1-class
    factor has no termwise trace-class meaning (sums of such traces may
    still be fine).  Never affects normalization."""
    report = LintReport()
    seen = set()
    for _, _, atoms in e.monomials():
        for a in atoms:
            if not isinstance(a, TraceAtom) or a in seen:
                continue
            seen.add(a)
            word = a.word
            if not word.factors:
                report.flags.append(LintFlag(a, "trace of a central word"))
            elif not any(form == DIFF and g.klass == "U1"
                         for g, form in word.factors):
                report.flags.append(
                    LintFlag(a, "no trace-class differential factor"))
    return report


def normalize(e: Expr, rels: Optional[RelationSet] = None,
              budget: int = DEFAULT_BUDGET,
              stats: Optional[dict] = None) -> Tuple[Expr, LintReport]:
    """Rewrite to the unique normal form for the given relation set.

    Returns the normal form (zero is the empty sum) together with the
    advisory trace-class lint of the result.  Raises BudgetExceeded when
    the step budget runs out.
    """
    if rels is None:
        rels = RelationSet()
    counter = StepCounter(budget)
    if stats is not None:
        stats["counter"] = counter
    out = Expr.zero()
    # worklist of (coeff, tau, atoms) monomials still containing
    # rewritable atoms
    work: List[Tuple[Fraction, int, Tuple]] = [
        (c, t, a) for (t, a), c in e.terms.items()]
    while work:
        coeff, tau, atoms = work.pop()
        for k, a in enumerate(atoms):
            if isinstance(a, TraceAtom):
                if rels.has_gen_rules_for(a.word):
                    counter.tick()
                    expanded = rels.expand_word(a.word, counter)
                    tr = op_trace(expanded)
                    for (t2, a2), c2 in tr.terms.items():
                        work.append((coeff * c2, tau + t2,
                                     atoms[:k] + a2 + atoms[k + 1:]))
                    break
            else:
                repl = rels.rewrite_scalar(a)
                if repl is not None:
                    counter.tick()
                    for (t2, a2), c2 in repl.terms.items():
                        work.append((coeff * c2, tau + t2,
                                     atoms[:k] + a2 + atoms[k + 1:]))
                    break
        else:
            out = out + Expr.monomial(coeff, tau, atoms)
    return out, trace_class_lint(out)


def normal_form(e: Expr, rels: Optional[RelationSet] = None,
                budget: int = DEFAULT_BUDGET) -> Expr:
    return normalize(e, rels, budget)[0]


# ----------------------------------------------------------------------
# Scalar closure rules for indexed families on a generic overlap
# ----------------------------------------------------------------------

def coboundary_closure(name: str, arity: int,
                       delta: Optional[Callable[[Tuple[int, ...]], Expr]],
                       make: Callable[[Tuple[int, ...], bool], Expr],
                       base_index: int = 0) -> ScalarRule:
    """Closure rule expressing delta(F) = G on sorted index tuples.

    For a tuple T with base_index missing, solves the alternating sum
    (delta F)(base, *T) = G(base, *T) for F(T), rewriting every family
    member toward tuples containing the base index.  ``make(T, diff)``
    must rebuild family atoms, ``delta`` gives G (None means G = 0; for
    differentiated atoms G is replaced by its differential, which is
    zero whenever G is closed or already differentiated away).
    """

    def rule(atom: SymAtom) -> Optional[Expr]:
        if atom.name != name or len(atom.indices) != arity:
            return None
        if base_index in atom.indices:
            return None
        full = (base_index,) + atom.indices
        out = Expr.zero()
        if delta is not None:
            g = delta(full)
            out = out + (g.d() if atom.differentiated else g)
        # (delta F)(full) = F(T) - F(full\1) + F(full\2) - ... = G(full),
        # so F(T) = G(full) + sum_{j>=1} (-1)^{j+1} F(full\j)
        for j in range(1, len(full)):
            sub = full[:j] + full[j + 1:]
            sign = -1 if j % 2 == 0 else 1
            out = out + make(sub, atom.differentiated).scale(sign)
        return out

    return rule
