"""Text front end for the trace calculus.

Grammar (UTF-8, ``#`` line comments)::

    program    := { statement }
    statement  := declaration ";" | assertion ";"
    declaration:= "gen" NAME ":" ("U1" ["det" NAME] | "U" | "S1" "log" NAME)
                | "scalar" NAME [":" "closed"] ["deg" INT]
    assertion  := "assert" expr "==" expr
    expr       := term { ("+" | "-") term }
    term       := signed { "*" signed }
    signed     := ["-"] power
    power      := primary [ "^" ("-"? INT) ]
    primary    := RATIONAL | "tau" | NAME | "d" primary
                | "tr" "[" expr "]" | "(" expr ")"

Numbers are exact rationals (``-1/6``), ``tau`` denotes 2*pi*i.  A NAME
is a declared generator or scalar symbol.  Expressions may be
operator-valued inside ``tr[...]`` and must be scalar-valued at top
level.  Printing a normal form and re-parsing it is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .expr import DeclarationError, Expr, SymAtom
from .words import (DIFF, INV, PLAIN, S1, U, U1, Generator, OpExpr, Word,
                    op_add, op_d, op_factor, op_inv, op_mul, op_pow,
                    op_scale, op_trace, op_word)


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\^-1|==|[-+*^()\[\];:,])
""", re.VERBOSE)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("eof", "", len(text)))
    return out


@dataclass
class Declarations:
    """Symbol table shared by the parser and printer."""

    generators: Dict[str, Generator] = field(default_factory=dict)
    scalars: Dict[str, SymAtom] = field(default_factory=dict)

    def declare_generator(self, name: str, klass: str,
                          log_symbol: Optional[str] = None,
                          indices: Tuple[int, ...] = ()) -> Generator:
        if name in self.generators or name in self.scalars:
            raise DeclarationError(f"duplicate declaration of {name!r}")
        gen = Generator(name, klass, indices, log_symbol)
        self.generators[name] = gen
        if log_symbol:
            self.declare_scalar(log_symbol, closed=False, degree=0,
                                indices=indices)
        return gen

    def declare_scalar(self, name: str, closed: bool = False, degree: int = 0,
                       indices: Tuple[int, ...] = ()) -> SymAtom:
        if name in self.generators or name in self.scalars:
            raise DeclarationError(f"duplicate declaration of {name!r}")
        atom = SymAtom(name, indices, degree, closed)
        self.scalars[name] = atom
        return atom

    def lookup(self, name: str):
        if name in self.generators:
            return self.generators[name]
        if name in self.scalars:
            return self.scalars[name]
        return None


class _Parser:
    def __init__(self, text: str, decls: Declarations):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.decls = decls

    # -- token plumbing ---------------------------------------------

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end'!r}",
                             pos, self.text)

    def error(self, msg):
        _, val, pos = self.peek()
        raise ParseError(msg, pos, self.text)

    # -- expressions (operator-valued; scalars are words of length 0) --

    def parse_expr(self) -> OpExpr:
        out = self.parse_term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.parse_term()
            out = op_add(out, rhs if op == "+" else op_scale(rhs, -1))
        return out

    def parse_term(self) -> OpExpr:
        out = self.parse_signed()
        while self.peek()[1] == "*":
            self.next()
            out = op_mul(out, self.parse_signed())
        return out

    def parse_signed(self) -> OpExpr:
        if self.peek()[1] == "-":
            self.next()
            return op_scale(self.parse_signed(), -1)
        return self.parse_power()

    def parse_power(self) -> OpExpr:
        base = self.parse_primary()
        while self.peek()[1] in ("^", "^-1"):
            kind, val, pos = self.next()
            if val == "^-1":
                base = self._apply_power(base, -1, pos)
                continue
            kind, val, pos = self.next()
            neg = False
            if val == "-":
                neg = True
                kind, val, pos = self.next()
            if kind != "num" or "/" in val:
                raise ParseError("integer exponent expected", pos, self.text)
            base = self._apply_power(base, -int(val) if neg else int(val), pos)
        return base

    def _apply_power(self, base: OpExpr, n: int, pos: int) -> OpExpr:
        if n >= 0:
            return op_pow(base, n)
        # negative powers: exact coefficients (rational * tau^k) or
        # unit-coefficient group words
        if len(base) == 1:
            c, t, atoms, w = base[0]
            if not atoms and not w.factors and not w.central:
                return [(c ** n, t * n, (), Word())]
            if not atoms and t == 0 and c in (1, -1):
                return op_pow(op_inv(base), -n)
        raise ParseError("negative powers apply to coefficients "
                         "and group words only", pos, self.text)

    def parse_primary(self) -> OpExpr:
        kind, val, pos = self.next()
        if kind == "num":
            if "/" in val:
                num, den = val.split("/")
                return op_word(Word(), coeff=Fraction(int(num), int(den)))
            return op_word(Word(), coeff=int(val))
        if val == "(":
            out = self.parse_expr()
            self.expect(")")
            return out
        if val == "tau":
            return op_word(Word(), coeff=1, tau=1)
        if val == "d":
            return op_d(self.parse_primary())
        if val == "tr":
            self.expect("[")
            inner = self.parse_expr()
            self.expect("]")
            return _scalar_to_op(op_trace(inner))
        if kind == "name":
            obj = self.decls.lookup(val)
            if obj is None:
                raise ParseError(f"undeclared name {val!r}", pos, self.text)
            if isinstance(obj, Generator):
                return op_factor(obj, PLAIN)
            return [(Fraction(1), 0, (obj,), Word())]
        raise ParseError(f"unexpected token {val!r}", pos, self.text)

    # -- statements ----------------------------------------------------

    def parse_declaration(self):
        kind, val, pos = self.next()
        if val == "gen":
            _, name, npos = self.next()
            self.expect(":")
            _, klass, kpos = self.next()
            if klass not in (U1, U, S1):
                raise ParseError(f"unknown class {klass!r}", kpos, self.text)
            log = None
            nxt = self.peek()[1]
            if nxt in ("det", "log"):
                self.next()
                if nxt == "det" and klass != U1:
                    raise ParseError("det logs belong to U1 generators",
                                     kpos, self.text)
                if nxt == "log" and klass != S1:
                    raise ParseError("log symbols belong to S1 generators",
                                     kpos, self.text)
                _, log, _ = self.next()
            self.decls.declare_generator(name, klass, log)
        elif val == "scalar":
            _, name, _ = self.next()
            closed = False
            degree = 0
            if self.peek()[1] == ":":
                self.next()
                self.expect("closed")
                closed = True
            if self.peek()[1] == "deg":
                self.next()
                _, num, npos = self.next()
                degree = int(num)
            self.decls.declare_scalar(name, closed=closed, degree=degree)
        else:
            raise ParseError("declaration expected", pos, self.text)
        self.expect(";")


def _scalar_to_op(e: Expr) -> OpExpr:
    return [(c, t, atoms, Word()) for (t, atoms), c in e.terms.items()]


def _op_to_scalar(e: OpExpr, text: str, pos: int = 0) -> Expr:
    out = Expr.zero()
    for c, t, atoms, w in e:
        if w.factors or w.central:
            raise ParseError(
                f"operator-valued result (word {w}); wrap it in tr[...]",
                pos, text)
        out = out + Expr.monomial(c, t, atoms)
    return out


def parse_decls(text: str) -> Declarations:
    decls = Declarations()
    p = _Parser(text, decls)
    while p.peek()[0] != "eof":
        p.parse_declaration()
    return decls


def parse_expr(text: str, decls: Declarations) -> Expr:
    """Parse a scalar expression against a declaration set."""
    p = _Parser(text, decls)
    op = p.parse_expr()
    kind, val, pos = p.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {val!r}", pos, text)
    return _op_to_scalar(op, text)


@dataclass
class AssertResult:
    lhs_text: str
    rhs_text: str
    holds: bool
    residue: Expr


def run_script(text: str, decls: Optional[Declarations] = None,
               rels=None) -> List[AssertResult]:
    """Execute a script of declarations and ``assert lhs == rhs;``
    statements, normalizing the difference of each assertion."""
    from .rules import normalize

    own = decls is None
    decls = decls if decls is not None else Declarations()
    p = _Parser(text, decls)
    results = []
    while p.peek()[0] != "eof":
        if p.peek()[1] in ("gen", "scalar"):
            p.parse_declaration()
            continue
        p.expect("assert")
        start = p.peek()[2]
        lhs = p.parse_expr()
        mid = p.peek()[2]
        p.expect("==")
        rhs_start = p.peek()[2]
        rhs = p.parse_expr()
        end = p.peek()[2]
        p.expect(";")
        diff = _op_to_scalar(op_add(lhs, op_scale(rhs, -1)), text, start)
        nf, _ = normalize(diff, rels)
        results.append(AssertResult(
            lhs_text=text[start:mid].strip(),
            rhs_text=text[rhs_start:end].strip(),
            holds=nf.is_zero(),
            residue=nf,
        ))
    return results


# ----------------------------------------------------------------------
# Printing normal forms back into the surface syntax
# ----------------------------------------------------------------------

def _print_word(w: Word) -> str:
    bits = []
    for g, n in w.central:
        if n == 1:
            bits.append(g.name)
        elif n == -1:
            bits.append(f"{g.name}^-1")
        else:
            bits.append(f"{g.name}^{n}")
    for g, form in w.factors:
        if form == PLAIN:
            bits.append(g.name)
        elif form == INV:
            bits.append(f"{g.name}^-1")
        else:
            bits.append(f"d {g.name}")
    return " * ".join(bits) if bits else "1"


def print_expr(e: Expr) -> str:
    """Render a scalar expression; parse(print(e)) == e on normal forms."""
    if e.is_zero():
        return "0"
    bits = []
    for (tau, atoms), coeff in sorted(
            e.terms.items(),
            key=lambda kv: (kv[0][0], tuple(a.sort_key() for a in kv[0][1]))):
        factors = []
        if coeff != 1 or (tau == 0 and not atoms):
            factors.append(str(coeff))
        if tau == 1:
            factors.append("tau")
        elif tau:
            factors.append(f"tau^{tau}")
        for a in atoms:
            if isinstance(a, SymAtom):
                factors.append(f"d {a.name}" if a.differentiated else a.name)
            else:
                factors.append(f"tr[{_print_word(a.word)}]")
        bits.append(" * ".join(factors))
    return " + ".join(bits)
