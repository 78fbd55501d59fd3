import itertools
import random

import pytest

from aggsolve.syntax import (
    INF,
    SUP,
    AggregateAtom,
    AggregateElement,
    AggregateLiteral,
    Atom,
    BasicLiteral,
    Comparison,
    Numeral,
    ParseError,
    Program,
    Rule,
    SymbolicConstant,
    UMinus,
    Variable,
    ground_term_cmp,
    op_count,
    op_sum,
    parse_program,
    parse_rule,
    print_program,
    relation_holds,
    subst_rule,
)

from conftest import COMPANY_CONTROL_RULE, SUM_LT_RULE


def test_parse_fact_with_negated_body():
    rule = parse_rule("p(1) :- not q(X).")
    assert rule == Rule(Atom("p", (Numeral(1),)),
                        (BasicLiteral(1, Atom("q", (Variable("X"),))),))


def test_parse_company_control_rule():
    rule = parse_rule(COMPANY_CONTROL_RULE)
    assert rule.head == Atom("controls", (Variable("C1"), Variable("C3")))
    assert len(rule.body) == 3
    agg = rule.body[2]
    assert isinstance(agg, AggregateLiteral)
    assert agg.negation == 0
    assert agg.inner.op == "sum"
    assert agg.inner.rel == ">"
    assert agg.inner.guard == Numeral(50)
    assert agg.inner.element.terms == (Variable("P"), Variable("C2"))
    assert agg.inner.element.conditions == (
        BasicLiteral(0, Atom("ctrStk", (Variable("C1"), Variable("C2"),
                                        Variable("C3"), Variable("P")))),)


def test_parse_sum_lt_rule():
    rule = parse_rule(SUM_LT_RULE)
    agg = rule.body[0]
    assert rule.head == Atom("p", (Numeral(1),))
    assert agg == AggregateLiteral(0, AggregateAtom(
        "sum",
        AggregateElement((Variable("X"),),
                         (BasicLiteral(0, Atom("q", (Variable("X"),))),
                          BasicLiteral(1, Atom("r", (Variable("X"),))))),
        "<", Numeral(1)))


def test_parse_constraint_spellings():
    a = parse_rule(":- q(X), r(X).")
    b = parse_rule("#false :- q(X), r(X).")
    assert a == b
    assert a.head is None


def test_parse_negative_numerals_and_negated_variables():
    rule = parse_rule("q(-X) :- p(X), r(-1).")
    assert rule.head == Atom("q", (UMinus(Variable("X")),))
    assert rule.body[1].inner == Atom("r", (Numeral(-1),))


def test_parse_nullary_atoms_and_comparisons():
    program = parse_program("v :- a < b, X = #inf, 2 != 3.\n")
    (rule,) = program.rules
    assert rule.head == Atom("v", ())
    assert rule.body[0].inner == Comparison(SymbolicConstant("a"), "<", SymbolicConstant("b"))
    assert rule.body[1].inner == Comparison(Variable("X"), "=", INF)


def test_parse_comments_and_whitespace():
    program = parse_program("% a comment\np(1). % trailing\n\n q(2).")
    assert len(program.rules) == 2


def test_triple_negation_rejected():
    with pytest.raises(ParseError):
        parse_program("p :- not not not q.")


def test_negating_constants_rejected():
    with pytest.raises(ParseError):
        parse_program("p(-a).")


def test_double_negation_inside_elements():
    rule = parse_rule("p :- #count{X : not not q(X)} > 0.")
    assert rule.body[0].inner.element.conditions[0].negation == 2


@pytest.mark.parametrize("bad", ["p(1)", "p(1) :-.", ":- .", "p(1) :- q(X),.", "p(X) < 2."])
def test_syntax_errors_have_locations(bad):
    with pytest.raises(ParseError) as err:
        parse_program(bad)
    assert err.value.line >= 1 and err.value.col >= 1


def test_aggregate_without_conditions():
    a = parse_rule("p :- #count{X} > 0.")
    b = parse_rule("p :- #count{X : } > 0.")
    assert a == b
    assert a.body[0].inner.element.conditions == ()


# ---------------------------------------------------------------------------
# Ground-term total order
# ---------------------------------------------------------------------------

def test_order_examples():
    assert ground_term_cmp(INF, Numeral(-10 ** 9)) < 0
    assert ground_term_cmp(Numeral(7), SymbolicConstant("a")) < 0
    assert ground_term_cmp(SymbolicConstant("a"), SymbolicConstant("b")) < 0
    assert ground_term_cmp(SymbolicConstant("zz"), SUP) < 0
    assert relation_holds("<=", Numeral(3), Numeral(3))
    assert relation_holds("!=", INF, SUP)


def _term_pool():
    return [INF, SUP, Numeral(-3), Numeral(0), Numeral(1), Numeral(7), Numeral(10 ** 12),
            SymbolicConstant("a"), SymbolicConstant("abc"), SymbolicConstant("b"),
            SymbolicConstant("z"), Numeral(-10 ** 12)]


def test_order_is_total_on_term_pool():
    pool = _term_pool()
    assert len(pool) == 12
    for a in pool:
        assert ground_term_cmp(a, a) == 0
    for a, b in itertools.product(pool, repeat=2):
        ab, ba = ground_term_cmp(a, b), ground_term_cmp(b, a)
        assert ab == -ba
        if a != b:
            assert ab != 0
    for a, b, c in itertools.product(pool, repeat=3):
        if ground_term_cmp(a, b) <= 0 and ground_term_cmp(b, c) <= 0:
            assert ground_term_cmp(a, c) <= 0


# ---------------------------------------------------------------------------
# Aggregate operation functions
# ---------------------------------------------------------------------------

def test_count_examples():
    assert op_count(set()) == Numeral(0)
    assert op_count({(Numeral(10), SymbolicConstant("c2")),
                     (Numeral(20), SymbolicConstant("c4"))}) == Numeral(2)
    assert op_count({(SymbolicConstant(c),) for c in "abc"}) == Numeral(3)


def test_count_matches_cardinality_exhaustively():
    universe = [(Numeral(i), SymbolicConstant("u")) for i in range(6)]
    for k in range(len(universe) + 1):
        for combo in itertools.combinations(universe, k):
            assert op_count(set(combo)) == Numeral(k)


def test_sum_examples():
    assert op_sum(set()) == Numeral(0)
    assert op_sum({(Numeral(10), SymbolicConstant("c2")),
                   (Numeral(20), SymbolicConstant("c4"))}) == Numeral(30)
    # the weight is read from the first position only
    assert op_sum({(SymbolicConstant("a"), Numeral(5))}) == Numeral(0)


def test_sum_is_order_invariant_and_additive():
    rng = random.Random(7)
    universe = [(Numeral(rng.randint(-9, 9)), Numeral(i)) for i in range(8)]
    for _ in range(200):
        k = rng.randint(0, 8)
        chosen = rng.sample(universe, k)
        shuffled = chosen[:]
        rng.shuffle(shuffled)
        assert op_sum(chosen) == op_sum(shuffled)
        cut = rng.randint(0, k)
        left, right = set(chosen[:cut]), set(chosen[cut:])
        assert op_sum(left | right).value == op_sum(left).value + op_sum(right).value


def test_sum_never_overflows():
    big = 10 ** 40
    assert op_sum({(Numeral(big), Numeral(0)), (Numeral(big), Numeral(1))}) == Numeral(2 * big)


# ---------------------------------------------------------------------------
# Printing round-trip and program equality
# ---------------------------------------------------------------------------

def _random_term(rng, allow_vars=True):
    roll = rng.random()
    if roll < 0.3:
        return Numeral(rng.randint(-5, 5))
    if roll < 0.5:
        return SymbolicConstant(rng.choice(["a", "b", "cd"]))
    if roll < 0.55:
        return INF
    if roll < 0.6:
        return SUP
    if allow_vars and roll < 0.9:
        return Variable(rng.choice(["X", "Y", "Z2"]))
    if allow_vars:
        return UMinus(Variable(rng.choice(["X", "Y"])))
    return Numeral(rng.randint(-5, 5))


def _random_basic(rng):
    if rng.random() < 0.3:
        inner = Comparison(_random_term(rng), rng.choice(["=", "!=", "<", ">", "<=", ">="]),
                           _random_term(rng))
    else:
        inner = Atom(rng.choice(["p", "q", "edge"]),
                     tuple(_random_term(rng) for _ in range(rng.randint(0, 3))))
    return BasicLiteral(rng.randint(0, 2), inner)


def _random_rule(rng):
    body = []
    for _ in range(rng.randint(0, 3)):
        if rng.random() < 0.3:
            element = AggregateElement(
                tuple(_random_term(rng) for _ in range(rng.randint(1, 2))),
                tuple(_random_basic(rng) for _ in range(rng.randint(0, 2))))
            body.append(AggregateLiteral(rng.randint(0, 2), AggregateAtom(
                rng.choice(["count", "sum"]), element,
                rng.choice(["=", "!=", "<", ">", "<=", ">="]), _random_term(rng))))
        else:
            body.append(_random_basic(rng))
    if rng.random() < 0.15 and body:
        return Rule(None, tuple(body))
    return Rule(Atom(rng.choice(["p", "q"]), tuple(_random_term(rng) for _ in range(rng.randint(0, 2)))),
                tuple(body))


def test_print_parse_round_trip():
    rng = random.Random(2024)
    for _ in range(300):
        program = Program(tuple(_random_rule(rng) for _ in range(rng.randint(0, 4))))
        assert parse_program(print_program(program)) == program


def test_program_equality_is_set_based():
    a = parse_program("p(1). q(2). p(1).")
    b = parse_program("q(2). p(1).")
    assert a == b
    assert hash(a) == hash(b)
    assert len(a.rules) == 3  # duplicates are kept in the list


def test_substitution_folds_negated_numerals():
    rule = parse_rule("q(-X) :- p(X).")
    ground = subst_rule(rule, {"X": Numeral(-1)})
    assert ground.head == Atom("q", (Numeral(1),))
    with pytest.raises(ValueError):
        subst_rule(rule, {"X": SymbolicConstant("a")})
