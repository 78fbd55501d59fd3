"""Aggregate logic programs as extended first-order theories.

Parse programs with #count/#sum aggregates, lower them under the cli and
dlv semantics, run a bounded brute-force oracle for answer sets and
strong-equivalence questions, and emit classical verification conditions
in TPTP TFF form.
"""

__version__ = "0.1.0"

from .analysis import SetSymbol, Signature, build_signature, global_vars, set_symbols_of
from .classical import (
    VerificationCondition,
    agg_axioms,
    build_vc,
    emit_tptp,
    gamma,
    ht_axioms,
    ih_interpretation,
    standardness_axioms,
)
from .folog import Theory, formula_str, hat, nn, substitute, theory_str
from .semantics import (
    EquivalenceResult,
    HtPair,
    Scope,
    ScopeError,
    agg_set_value,
    agg_stable_models,
    answer_sets,
    check_strong_equivalence,
    eval_classical,
    eval_ht,
    eval_ht_prop,
    eval_prop,
    expand_aggregate,
    flp_reduct,
    ft_reduct,
    ground_program,
    herbrand_instances,
)
from .syntax import (
    ParseError,
    Program,
    Rule,
    ground_term_cmp,
    op_count,
    op_sum,
    parse_program,
    parse_rule,
    print_program,
)
from .translate import tau_literal, tau_program, tau_rule

__all__ = [
    "EquivalenceResult",
    "HtPair",
    "ParseError",
    "Program",
    "Rule",
    "Scope",
    "ScopeError",
    "SetSymbol",
    "Signature",
    "Theory",
    "VerificationCondition",
    "agg_axioms",
    "agg_set_value",
    "agg_stable_models",
    "answer_sets",
    "build_signature",
    "build_vc",
    "check_strong_equivalence",
    "emit_tptp",
    "eval_classical",
    "eval_ht",
    "eval_ht_prop",
    "eval_prop",
    "expand_aggregate",
    "flp_reduct",
    "formula_str",
    "ft_reduct",
    "gamma",
    "global_vars",
    "ground_program",
    "ground_term_cmp",
    "hat",
    "herbrand_instances",
    "ht_axioms",
    "ih_interpretation",
    "nn",
    "op_count",
    "op_sum",
    "parse_program",
    "parse_rule",
    "print_program",
    "set_symbols_of",
    "standardness_axioms",
    "substitute",
    "tau_literal",
    "tau_program",
    "tau_rule",
    "theory_str",
]
