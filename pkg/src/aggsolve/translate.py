"""The cli and dlv lowerings from programs to extended first-order theories.

Both translations map a rule to the universal closure (over its global
variables) of body-conjunction -> head.  They differ in exactly two
places: the semantics superscript of the set functions standing for
aggregate elements, and the rendering of `not` (ordinary negation for
cli, strong negation for dlv).  Facts translate to the bare closed head.
"""

from __future__ import annotations

from . import syntax
from .analysis import SetSymbol, Signature, global_vars
from .folog import (
    AggTerm,
    BOTTOM,
    Cmp,
    Eq,
    FoFormula,
    FoTerm,
    FoVar,
    GroundTerm,
    Implies,
    PredAtom,
    SetTerm,
    StrongNeg,
    Theory,
    UminusTerm,
    conj,
    forall_many,
    neg,
)
from .syntax import (
    AggregateLiteral,
    BasicLiteral,
    Literal,
    Program,
    Rule,
    element_variables,
    is_ground,
)

SEMANTICS = ("cli", "dlv")


class TranslateError(Exception):
    pass


def fo_term(t: syntax.ProgramTerm) -> FoTerm:
    if isinstance(t, syntax.Variable):
        return FoVar(t.name)
    if isinstance(t, syntax.UMinus):
        return UminusTerm(fo_term(t.arg))
    if is_ground(t):
        return GroundTerm(t)
    raise TranslateError(f"cannot translate term {t}")


def _atomic(a) -> FoFormula:
    if isinstance(a, syntax.Atom):
        return PredAtom(a.predicate, tuple(fo_term(t) for t in a.args))
    if isinstance(a, syntax.Comparison):
        lhs, rhs = fo_term(a.lhs), fo_term(a.rhs)
        return Eq(lhs, rhs) if a.rel == "=" else Cmp(a.rel, lhs, rhs)
    raise TranslateError(f"unexpected atomic formula {a!r}")


def _aggregate(x: str, z: tuple[str, ...], agg: syntax.AggregateAtom, sig: Signature) -> FoFormula:
    xs = tuple(sorted(element_variables(agg.element) & set(z)))
    sym = SetSymbol(agg.element, xs)
    try:
        short = sig.short_name(sym)
    except KeyError:
        raise TranslateError(f"set symbol for element {{{agg.element}}} missing from signature") from None
    s = SetTerm(short, sym, x, False, tuple(FoVar(v) for v in xs))
    value = AggTerm(agg.op, s)
    guard = fo_term(agg.guard)
    return Eq(value, guard) if agg.rel == "=" else Cmp(agg.rel, value, guard)


def tau_literal(x: str, z: tuple[str, ...], lit: Literal, sig: Signature, *,
                strict_item3: bool = False) -> FoFormula:
    """Translate one body literal under global variables `z`.

    With strict_item3 the singly-negated case uses the cli set functions
    inside the negated formula, reading the source text of the negation
    rule literally instead of as a typo.
    """
    if x not in SEMANTICS:
        raise TranslateError(f"unknown semantics {x!r}")
    if isinstance(lit, BasicLiteral):
        inner = _atomic(lit.inner)
    elif isinstance(lit, AggregateLiteral):
        inner = _aggregate(x, z, lit.inner, sig)
    else:
        raise TranslateError(f"unexpected literal {lit!r}")
    if lit.negation == 0:
        return inner
    if x == "cli":
        out = neg(inner)
        return neg(out) if lit.negation == 2 else out
    if lit.negation == 1 and strict_item3 and isinstance(lit, AggregateLiteral):
        inner = _aggregate("cli", z, lit.inner, sig)
    out = StrongNeg(inner)
    return StrongNeg(out) if lit.negation == 2 else out


def tau_rule(x: str, rule: Rule, sig: Signature, *, strict_item3: bool = False) -> FoFormula:
    z = global_vars(rule)
    body = conj([tau_literal(x, z, lit, sig, strict_item3=strict_item3) for lit in rule.body])
    head: FoFormula = BOTTOM if rule.head is None else _atomic(rule.head)
    matrix = head if body is None else Implies(body, head)
    return forall_many(z, matrix)


def tau_program(x: str, program: Program, sig: Signature, *, strict_item3: bool = False) -> Theory:
    out: list[FoFormula] = []
    seen: set[FoFormula] = set()
    for rule in program.rules:
        f = tau_rule(x, rule, sig, strict_item3=strict_item3)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(out)
