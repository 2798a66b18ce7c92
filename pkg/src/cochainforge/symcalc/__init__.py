from .expr import Expr, SymAtom
from .words import (DIFF, INV, PLAIN, S1, U, U1, Generator, TraceAtom, Word,
                    group_word, make_word, op_trace, word_inv, word_mul)
from .rules import (BudgetExceeded, LintReport, RelationSet, normal_form,
                    normalize, trace_class_lint)
from .templates import CochainTemplate, group_coboundary
from .parser import (Declarations, ParseError, parse_decls, parse_expr,
                     print_expr, run_script)
