"""Seeded random generators for programs, formulas and pairs.

The program generator stays inside the corpus bounds the acceptance suite
needs: at most 3 rules over two unary predicates, aggregates with at most
one local variable (so the expansion base over a two-term pool has at most
two instantiations).  The formula generator produces closed extended
formulas over a small fixed signature that includes nullary and unary set
symbols, so intensional terms, membership and quantifiers all get
exercised.
"""

from __future__ import annotations

import itertools
import random

from aggsolve import HtPair, Scope, build_signature, parse_program
from aggsolve.analysis import Signature
from aggsolve.folog import (
    AggTerm,
    BOTTOM,
    And,
    Cmp,
    Eq,
    Exists,
    FoFormula,
    FoVar,
    Forall,
    GroundTerm,
    Implies,
    Member,
    Or,
    PredAtom,
    SetTerm,
    StrongNeg,
    TupleTerm,
)
from aggsolve.syntax import (
    AggregateAtom,
    AggregateElement,
    AggregateLiteral,
    Atom,
    BasicLiteral,
    Comparison,
    Numeral,
    Program,
    Rule,
    Variable,
)

RELOPS = ("=", "!=", "<", ">", "<=", ">=")


# ---------------------------------------------------------------------------
# Random programs (two unary predicates, pool {0, 1})
# ---------------------------------------------------------------------------

def _gen_term(rng: random.Random, variables):
    choices = [Numeral(0), Numeral(1)] + [Variable(v) for v in variables]
    return rng.choice(choices)


def _gen_basic_literal(rng: random.Random, variables) -> BasicLiteral:
    negation = rng.choice((0, 0, 0, 1, 1, 2))
    if rng.random() < 0.15:
        inner = Comparison(_gen_term(rng, variables), rng.choice(RELOPS), _gen_term(rng, variables))
    else:
        inner = Atom(rng.choice(("p", "q")), (_gen_term(rng, variables),))
    return BasicLiteral(negation, inner)


def _gen_aggregate(rng: random.Random, globals_avail) -> AggregateLiteral:
    local = "Z"
    conds = tuple(_gen_basic_literal(rng, [local] + list(globals_avail))
                  for _ in range(rng.randint(0, 2)))
    if rng.random() < 0.3 and conds:
        terms = (Variable(local), _gen_term(rng, list(globals_avail)))
    else:
        terms = (Variable(local),)
    agg = AggregateAtom(rng.choice(("count", "sum")), AggregateElement(terms, conds),
                        rng.choice(RELOPS), rng.choice([Numeral(n) for n in (-1, 0, 1, 2)]))
    return AggregateLiteral(rng.choice((0, 0, 1, 1, 2)), agg)


def gen_program(rng: random.Random) -> Program:
    while True:
        program = _gen_program_once(rng)
        if _corpus_bounds_ok(program):
            return program


def _gen_program_once(rng: random.Random) -> Program:
    rules = []
    for _ in range(rng.randint(1, 3)):
        variables = rng.choice(((), ("X",), ("X", "Y")))
        head = None
        if rng.random() < 0.85:
            head = Atom(rng.choice(("p", "q")), (_gen_term(rng, variables),))
        body = []
        for _ in range(rng.randint(0, 2)):
            body.append(_gen_basic_literal(rng, variables))
        if rng.random() < 0.6:
            body.append(_gen_aggregate(rng, variables))
        if head is None and not body:
            head = Atom("p", (Numeral(0),))
        rng.shuffle(body)
        rules.append(Rule(head, tuple(body)))
    return Program(tuple(rules))


def _corpus_bounds_ok(program: Program) -> bool:
    # at most one local variable per element: expansion base <= 2 over {0,1}
    from aggsolve.analysis import global_vars
    from aggsolve.syntax import element_variables

    for rule in program.rules:
        z = set(global_vars(rule))
        for lit in rule.body:
            if isinstance(lit, AggregateLiteral):
                if len(element_variables(lit.inner.element) - z) > 1:
                    return False
    return True


# ---------------------------------------------------------------------------
# Random closed formulas over a fixed small signature
# ---------------------------------------------------------------------------

RICH_PROGRAM_TEXT = """
w(Y) :- #sum{X, Y : q(X), not r(Y)} >= Y.
v :- #count{X : q(X)} > 1.
"""


def rich_signature() -> Signature:
    return build_signature([parse_program(RICH_PROGRAM_TEXT)])


def formula_scope() -> Scope:
    return Scope((), 0, 1)


def scope_atoms(scope: Scope) -> list[Atom]:
    atoms = []
    for pred in ("q", "r", "w"):
        for t in scope.pool():
            atoms.append(Atom(pred, (t,)))
    atoms.append(Atom("v", ()))
    return atoms


def gen_pair(rng: random.Random, atoms) -> HtPair:
    there = frozenset(a for a in atoms if rng.random() < 0.5)
    here = frozenset(a for a in there if rng.random() < 0.6)
    return HtPair(here, there)


class FormulaGen:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.syms = list(sig.set_symbols)

    def general_term(self, rng: random.Random, bound: list[FoVar], depth: int):
        roll = rng.random()
        if bound and roll < 0.35:
            return rng.choice(bound)
        if depth > 0 and roll < 0.5:
            return AggTerm(rng.choice(("count", "sum")), self.set_term(rng, bound, depth - 1))
        return GroundTerm(Numeral(rng.randint(-1, 2)))

    def set_term(self, rng: random.Random, bound: list[FoVar], depth: int) -> SetTerm:
        sym = rng.choice(self.syms)
        args = tuple(self.general_term(rng, bound, 0) for _ in sym.globals)
        return SetTerm(self.sig.short_name(sym), sym, rng.choice(("cli", "dlv")), False, args)

    def atomic(self, rng: random.Random, bound: list[FoVar], depth: int) -> FoFormula:
        roll = rng.random()
        if roll < 0.35:
            pred, arity = rng.choice((("q", 1), ("r", 1), ("w", 1), ("v", 0)))
            return PredAtom(pred, tuple(self.general_term(rng, bound, depth) for _ in range(arity)))
        if roll < 0.6:
            rel = rng.choice(RELOPS)
            lhs = self.general_term(rng, bound, depth)
            rhs = self.general_term(rng, bound, depth)
            return Eq(lhs, rhs) if rel == "=" else Cmp(rel, lhs, rhs)
        if roll < 0.8 and self.syms:
            s = self.set_term(rng, bound, depth)
            item = TupleTerm(tuple(self.general_term(rng, bound, 0)
                                   for _ in range(s.sym.tuple_arity)))
            return Member(item, s)
        return BOTTOM

    def formula(self, rng: random.Random, bound: list[FoVar], depth: int) -> FoFormula:
        if depth <= 0:
            return self.atomic(rng, bound, 0)
        roll = rng.random()
        if roll < 0.2:
            return self.atomic(rng, bound, depth)
        if roll < 0.35:
            return StrongNeg(self.formula(rng, bound, depth - 1))
        if roll < 0.5:
            return And(self.formula(rng, bound, depth - 1), self.formula(rng, bound, depth - 1))
        if roll < 0.62:
            return Or(self.formula(rng, bound, depth - 1), self.formula(rng, bound, depth - 1))
        if roll < 0.8:
            return Implies(self.formula(rng, bound, depth - 1), self.formula(rng, bound, depth - 1))
        var = FoVar(f"V{len(bound) + 1}")
        kind = Forall if rng.random() < 0.5 else Exists
        return kind(var, self.formula(rng, bound + [var], depth - 1))


def gen_formula(rng: random.Random, sig: Signature, depth: int = 3) -> FoFormula:
    return FormulaGen(sig).formula(rng, [], depth)


def all_pairs(atoms) -> list[HtPair]:
    """Every here-and-there pair over the given atoms (3^n of them)."""
    out = []
    atoms = list(atoms)
    for there_mask in range(2 ** len(atoms)):
        there = frozenset(a for i, a in enumerate(atoms) if there_mask >> i & 1)
        inside = sorted(there, key=lambda a: str(a))
        for k in range(len(inside) + 1):
            for combo in itertools.combinations(inside, k):
                out.append(HtPair(frozenset(combo), there))
    return out
