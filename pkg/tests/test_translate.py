import random

import pytest

from aggsolve.analysis import SetSymbol, Signature, build_signature
from aggsolve.folog import (
    AggTerm,
    And,
    BOTTOM,
    Cmp,
    Eq,
    Falsum,
    FoFormula,
    FoTerm,
    FoVar,
    Forall,
    GroundTerm,
    Implies,
    Member,
    Or,
    PredAtom,
    SetTerm,
    StrongNeg,
    Exists,
    free_vars,
    is_neg,
    is_standard,
    neg,
)
from aggsolve.syntax import BasicLiteral, Numeral, Program, parse_program, parse_rule
from aggsolve.translate import TranslateError, tau_literal, tau_program, tau_rule

from genrand import gen_program


def _qr_parts(program):
    sig = build_signature([program])
    sym = sig.set_symbols[0]
    short = sig.short_name(sym)
    return sig, sym, short


def _sum_term(sym, short, sem):
    return AggTerm("sum", SetTerm(short, sym, sem, False, ()))


P1 = PredAtom("p", (GroundTerm(Numeral(1)),))
ONE = GroundTerm(Numeral(1))


def test_aggregate_literal_translation(sum_lt_program):
    sig, sym, short = _qr_parts(sum_lt_program)
    lit = sum_lt_program.rules[0].body[0]
    assert tau_literal("cli", (), lit, sig) == Cmp("<", _sum_term(sym, short, "cli"), ONE)
    assert tau_literal("dlv", (), lit, sig) == Cmp("<", _sum_term(sym, short, "dlv"), ONE)


def test_negated_aggregate_translation(neg_sum_ge_program):
    sig, sym, short = _qr_parts(neg_sum_ge_program)
    lit = neg_sum_ge_program.rules[0].body[0]
    assert tau_literal("dlv", (), lit, sig) == StrongNeg(Cmp(">=", _sum_term(sym, short, "dlv"), ONE))
    assert tau_literal("cli", (), lit, sig) == neg(Cmp(">=", _sum_term(sym, short, "cli"), ONE))
    # the literal reading keeps the cli set function inside the strong negation
    assert tau_literal("dlv", (), lit, sig, strict_item3=True) == \
        StrongNeg(Cmp(">=", _sum_term(sym, short, "cli"), ONE))


def test_double_negation_translation():
    program = parse_program("p(1) :- not not q(1).")
    sig = build_signature([program])
    lit = program.rules[0].body[0]
    q1 = PredAtom("q", (ONE,))
    assert tau_literal("cli", (), lit, sig) == neg(neg(q1))
    assert tau_literal("dlv", (), lit, sig) == StrongNeg(StrongNeg(q1))


def test_company_control_rule_translation(company_control_rule):
    program = Program((company_control_rule,))
    sig = build_signature([program])
    sym = sig.set_symbols[0]
    short = sig.short_name(sym)
    c1, c3 = FoVar("C1"), FoVar("C3")
    for sem in ("cli", "dlv"):
        expected = Forall(c1, Forall(c3, Implies(
            And(And(PredAtom("company", (c1,)), PredAtom("company", (c3,))),
                Cmp(">", AggTerm("sum", SetTerm(short, sym, sem, False, (c1, c3))),
                    GroundTerm(Numeral(50)))),
            PredAtom("controls", (c1, c3)))))
        assert tau_rule(sem, company_control_rule, sig) == expected


def test_sum_rule_translations(sum_lt_program, neg_sum_ge_program):
    sig = build_signature([sum_lt_program, neg_sum_ge_program])
    sym = sig.set_symbols[0]
    short = sig.short_name(sym)
    assert tau_program("cli", sum_lt_program, sig) == (
        Implies(Cmp("<", _sum_term(sym, short, "cli"), ONE), P1),)
    assert tau_program("dlv", sum_lt_program, sig) == (
        Implies(Cmp("<", _sum_term(sym, short, "dlv"), ONE), P1),)
    assert tau_program("cli", neg_sum_ge_program, sig) == (
        Implies(neg(Cmp(">=", _sum_term(sym, short, "cli"), ONE)), P1),)
    assert tau_program("dlv", neg_sum_ge_program, sig) == (
        Implies(StrongNeg(Cmp(">=", _sum_term(sym, short, "dlv"), ONE)), P1),)


def test_fact_translates_to_bare_head():
    program = parse_program("q(1).")
    sig = build_signature([program])
    assert tau_program("cli", program, sig) == (PredAtom("q", (ONE,)),)


def test_constraint_translation():
    program = parse_program(":- q(X), r(X).")
    sig = build_signature([program])
    x = FoVar("X")
    assert tau_program("dlv", program, sig) == (
        Forall(x, Implies(And(PredAtom("q", (x,)), PredAtom("r", (x,))), BOTTOM)),)


def test_empty_program_translates_to_empty_theory():
    sig = build_signature([Program(())])
    assert tau_program("cli", Program(()), sig) == ()


def test_equality_maps_to_eq_not_comparison():
    program = parse_program("p :- X = 1, X != 2.")
    sig = build_signature([program])
    sentence = tau_program("cli", program, sig)[0]
    body = sentence.body.lhs
    assert isinstance(body.lhs, Eq)
    assert isinstance(body.rhs, Cmp) and body.rhs.rel == "!="


def test_missing_set_symbol_is_an_error(sum_lt_program):
    empty_sig = build_signature([Program(())])
    with pytest.raises(TranslateError):
        tau_rule("cli", sum_lt_program.rules[0], empty_sig)


# ---------------------------------------------------------------------------
# Structural invariants over random programs
# ---------------------------------------------------------------------------

def _mirror_term(a: FoTerm, b: FoTerm) -> bool:
    if isinstance(a, SetTerm) and isinstance(b, SetTerm):
        return (a.short == b.short and a.sym == b.sym and a.sem == "cli" and b.sem == "dlv"
                and a.hatted == b.hatted and len(a.args) == len(b.args)
                and all(_mirror_term(x, y) for x, y in zip(a.args, b.args)))
    if isinstance(a, AggTerm) and isinstance(b, AggTerm):
        return a.op == b.op and _mirror_term(a.arg, b.arg)
    return a == b


def _mirror(a: FoFormula, b: FoFormula) -> bool:
    """cli and dlv sentences agree up to s-superscripts and negation blocks."""
    if is_neg(a) and isinstance(b, StrongNeg):
        return _mirror(a.lhs, b.arg)
    if type(a) is not type(b):
        return False
    if isinstance(a, Falsum):
        return True
    if isinstance(a, PredAtom):
        return (a.predicate, a.hatted) == (b.predicate, b.hatted) and \
            all(_mirror_term(x, y) for x, y in zip(a.args, b.args))
    if isinstance(a, (Eq, Cmp)):
        rels = (a.rel, b.rel) if isinstance(a, Cmp) else ("=", "=")
        return rels[0] == rels[1] and _mirror_term(a.lhs, b.lhs) and _mirror_term(a.rhs, b.rhs)
    if isinstance(a, Member):
        return _mirror_term(a.item, b.item) and _mirror_term(a.container, b.container)
    if isinstance(a, (And, Or, Implies)):
        return _mirror(a.lhs, b.lhs) and _mirror(a.rhs, b.rhs)
    if isinstance(a, (Forall, Exists)):
        return a.var == b.var and _mirror(a.body, b.body)
    raise AssertionError(f"unexpected node {a!r}")


def test_cli_and_dlv_theories_mirror_each_other():
    rng = random.Random(23)
    for _ in range(150):
        program = gen_program(rng)
        sig = build_signature([program])
        cli = tau_program("cli", program, sig)
        dlv = tau_program("dlv", program, sig)
        assert len(cli) == len(dlv)
        assert all(_mirror(a, b) for a, b in zip(cli, dlv))


def test_not_free_aggregate_free_programs_translate_identically():
    program = parse_program("p(X) :- q(X), X < 2.\nq(1).\n:- p(2).")
    sig = build_signature([program])
    assert tau_program("cli", program, sig) == tau_program("dlv", program, sig)


def test_translations_are_closed_and_standardness_matches_semantics():
    rng = random.Random(29)
    saw_nonstandard = False
    for _ in range(150):
        program = gen_program(rng)
        sig = build_signature([program])
        for sem in ("cli", "dlv"):
            for sentence in tau_program(sem, program, sig):
                assert free_vars(sentence) == set()
                if sem == "cli":
                    assert is_standard(sentence)
                elif not is_standard(sentence):
                    saw_nonstandard = True
    assert saw_nonstandard


def test_program_with_negation_gives_nonstandard_dlv_theory():
    program = parse_program("p :- not q.")
    sig = build_signature([program])
    assert not is_standard(tau_program("dlv", program, sig)[0])


def test_duplicate_rules_collapse_in_theory():
    program = parse_program("p(1). p(1).")
    sig = build_signature([program])
    assert len(tau_program("cli", program, sig)) == 1
