"""Three-sorted extended first-order formulas with two negations.

Terms live in one of three sorts: *general* (ground program terms),
*tuple* (tuples of general objects, built by per-arity constructors) and
*set* (sets of tuples, the values of the intensional cli/dlv functions).
Formulas add a second, strong negation connective alongside the usual
connectives; ordinary negation and the biconditional are derived
(``neg(F)`` is ``F -> bottom``), so formula equality is plain structural
equality.  ``hat`` renames predicate symbols and intensional set functions
into their hatted doubles (comparisons, equality, tuple constructors,
count/sum and membership are never renamed); ``nn`` rewrites every strong
negation into ordinary negation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .analysis import SetSymbol
from .syntax import ProgramTerm, is_ground


class Sort(enum.Enum):
    GENERAL = "general"
    TUPLE = "tuple"
    SET = "set"


class SortError(Exception):
    pass


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------

class FoTerm:
    __slots__ = ()


@dataclass(frozen=True)
class FoVar(FoTerm):
    name: str
    sort: Sort = Sort.GENERAL


@dataclass(frozen=True)
class GroundTerm(FoTerm):
    """A ground program term as an object constant of the general sort."""

    term: ProgramTerm

    def __post_init__(self):
        if not is_ground(self.term):
            raise SortError(f"not a ground term: {self.term}")


@dataclass(frozen=True)
class UminusTerm(FoTerm):
    """Negated general-sort term; mirrors the source language's `-X`."""

    arg: FoTerm


@dataclass(frozen=True)
class TupleTerm(FoTerm):
    """Application of the arity-k tuple constructor."""

    args: tuple[FoTerm, ...]


@dataclass(frozen=True)
class SetTerm(FoTerm):
    """Application of a cli/dlv set function (or its hatted double).

    `short` is the set symbol's short name; the symbol itself is embedded so
    evaluators can recover the element and its variable split.
    """

    short: str
    sym: SetSymbol
    sem: str  # "cli" | "dlv"
    hatted: bool
    args: tuple[FoTerm, ...]

    def fn_name(self) -> str:
        # s_<idx>_<hash> -> s_cli_<idx>_<hash>[_hat]
        assert self.short.startswith("s_")
        base = f"s_{self.sem}_{self.short[2:]}"
        return base + "_hat" if self.hatted else base


@dataclass(frozen=True)
class AggTerm(FoTerm):
    """count/sum applied to a set-sorted term, yielding a general value."""

    op: str  # "count" | "sum"
    arg: FoTerm


def term_sort(t: FoTerm) -> Sort:
    if isinstance(t, FoVar):
        return t.sort
    if isinstance(t, (GroundTerm, AggTerm, UminusTerm)):
        return Sort.GENERAL
    if isinstance(t, TupleTerm):
        return Sort.TUPLE
    if isinstance(t, SetTerm):
        return Sort.SET
    raise SortError(f"unknown term {t!r}")


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

class FoFormula:
    __slots__ = ()


@dataclass(frozen=True)
class Falsum(FoFormula):
    pass


@dataclass(frozen=True)
class PredAtom(FoFormula):
    predicate: str
    args: tuple[FoTerm, ...] = ()
    hatted: bool = False


@dataclass(frozen=True)
class Eq(FoFormula):
    lhs: FoTerm
    rhs: FoTerm


@dataclass(frozen=True)
class Cmp(FoFormula):
    """One of the five comparison predicates (everything but equality)."""

    rel: str  # "!=", "<", ">", "<=", ">="
    lhs: FoTerm
    rhs: FoTerm

    def __post_init__(self):
        if self.rel == "=":
            raise SortError("equality is Eq, not a comparison predicate")


@dataclass(frozen=True)
class Member(FoFormula):
    item: FoTerm  # tuple sort
    container: FoTerm  # set sort


@dataclass(frozen=True)
class StrongNeg(FoFormula):
    arg: FoFormula


@dataclass(frozen=True)
class And(FoFormula):
    lhs: FoFormula
    rhs: FoFormula


@dataclass(frozen=True)
class Or(FoFormula):
    lhs: FoFormula
    rhs: FoFormula


@dataclass(frozen=True)
class Implies(FoFormula):
    lhs: FoFormula
    rhs: FoFormula


@dataclass(frozen=True)
class Forall(FoFormula):
    var: FoVar
    body: FoFormula


@dataclass(frozen=True)
class Exists(FoFormula):
    var: FoVar
    body: FoFormula


BOTTOM = Falsum()


def neg(f: FoFormula) -> FoFormula:
    """Derived ordinary negation: F -> bottom."""
    return Implies(f, BOTTOM)


def iff(f: FoFormula, g: FoFormula) -> FoFormula:
    return And(Implies(f, g), Implies(g, f))


def is_neg(f: FoFormula) -> bool:
    return isinstance(f, Implies) and isinstance(f.rhs, Falsum)


def conj(parts: Sequence[FoFormula]) -> FoFormula | None:
    """Left-associated conjunction; None for the empty list."""
    out: FoFormula | None = None
    for p in parts:
        out = p if out is None else And(out, p)
    return out


def forall_many(names: Iterable[str], body: FoFormula, sort: Sort = Sort.GENERAL) -> FoFormula:
    for name in reversed(list(names)):
        body = Forall(FoVar(name, sort), body)
    return body


def exists_many(names: Iterable[str], body: FoFormula, sort: Sort = Sort.GENERAL) -> FoFormula:
    for name in reversed(list(names)):
        body = Exists(FoVar(name, sort), body)
    return body


def is_standard(f: FoFormula) -> bool:
    """True when the formula contains no strong negation."""
    if isinstance(f, StrongNeg):
        return False
    if isinstance(f, (And, Or, Implies)):
        return is_standard(f.lhs) and is_standard(f.rhs)
    if isinstance(f, (Forall, Exists)):
        return is_standard(f.body)
    return True


# ---------------------------------------------------------------------------
# Free variables and substitution
# ---------------------------------------------------------------------------

def term_free_vars(t: FoTerm) -> set[FoVar]:
    if isinstance(t, FoVar):
        return {t}
    if isinstance(t, (GroundTerm,)):
        return set()
    if isinstance(t, UminusTerm):
        return term_free_vars(t.arg)
    if isinstance(t, AggTerm):
        return term_free_vars(t.arg)
    if isinstance(t, (TupleTerm, SetTerm)):
        out: set[FoVar] = set()
        for a in t.args:
            out |= term_free_vars(a)
        return out
    raise SortError(f"unknown term {t!r}")


def free_vars(f: FoFormula) -> set[FoVar]:
    if isinstance(f, Falsum):
        return set()
    if isinstance(f, PredAtom):
        out: set[FoVar] = set()
        for a in f.args:
            out |= term_free_vars(a)
        return out
    if isinstance(f, (Eq, Cmp)):
        return term_free_vars(f.lhs) | term_free_vars(f.rhs)
    if isinstance(f, Member):
        return term_free_vars(f.item) | term_free_vars(f.container)
    if isinstance(f, StrongNeg):
        return free_vars(f.arg)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.lhs) | free_vars(f.rhs)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    raise SortError(f"unknown formula {f!r}")


def is_closed_term(t: FoTerm) -> bool:
    return not term_free_vars(t)


def subst_fo_term(t: FoTerm, binding: Mapping[FoVar, FoTerm]) -> FoTerm:
    if isinstance(t, FoVar):
        r = binding.get(t)
        if r is None:
            return t
        if term_sort(r) is not t.sort:
            raise SortError(f"sort mismatch substituting {r!r} for {t.name}:{t.sort.value}")
        return r
    if isinstance(t, GroundTerm):
        return t
    if isinstance(t, UminusTerm):
        return UminusTerm(subst_fo_term(t.arg, binding))
    if isinstance(t, AggTerm):
        return AggTerm(t.op, subst_fo_term(t.arg, binding))
    if isinstance(t, TupleTerm):
        return TupleTerm(tuple(subst_fo_term(a, binding) for a in t.args))
    if isinstance(t, SetTerm):
        return SetTerm(t.short, t.sym, t.sem, t.hatted, tuple(subst_fo_term(a, binding) for a in t.args))
    raise SortError(f"unknown term {t!r}")


def substitute(f: FoFormula, binding: Mapping[FoVar, FoTerm]) -> FoFormula:
    """Substitute closed terms for free variables.

    Replacement terms must be closed, so no alpha-renaming is needed; a
    binder simply shadows its variable.
    """
    for var, repl in binding.items():
        if not is_closed_term(repl):
            raise SortError(f"replacement for {var.name} is not closed: {repl!r}")
    return _subst(f, dict(binding))


def _subst(f: FoFormula, binding: dict[FoVar, FoTerm]) -> FoFormula:
    if not binding:
        return f
    if isinstance(f, Falsum):
        return f
    if isinstance(f, PredAtom):
        return PredAtom(f.predicate, tuple(subst_fo_term(a, binding) for a in f.args), f.hatted)
    if isinstance(f, Eq):
        return Eq(subst_fo_term(f.lhs, binding), subst_fo_term(f.rhs, binding))
    if isinstance(f, Cmp):
        return Cmp(f.rel, subst_fo_term(f.lhs, binding), subst_fo_term(f.rhs, binding))
    if isinstance(f, Member):
        return Member(subst_fo_term(f.item, binding), subst_fo_term(f.container, binding))
    if isinstance(f, StrongNeg):
        return StrongNeg(_subst(f.arg, binding))
    if isinstance(f, And):
        return And(_subst(f.lhs, binding), _subst(f.rhs, binding))
    if isinstance(f, Or):
        return Or(_subst(f.lhs, binding), _subst(f.rhs, binding))
    if isinstance(f, Implies):
        return Implies(_subst(f.lhs, binding), _subst(f.rhs, binding))
    if isinstance(f, (Forall, Exists)):
        inner = {v: t for v, t in binding.items() if v != f.var}
        body = _subst(f.body, inner)
        return type(f)(f.var, body)
    raise SortError(f"unknown formula {f!r}")


# ---------------------------------------------------------------------------
# hat and nn renamings
# ---------------------------------------------------------------------------

def hat_term(t: FoTerm) -> FoTerm:
    if isinstance(t, (FoVar, GroundTerm)):
        return t
    if isinstance(t, UminusTerm):
        return UminusTerm(hat_term(t.arg))
    if isinstance(t, AggTerm):
        return AggTerm(t.op, hat_term(t.arg))
    if isinstance(t, TupleTerm):
        return TupleTerm(tuple(hat_term(a) for a in t.args))
    if isinstance(t, SetTerm):
        return SetTerm(t.short, t.sym, t.sem, True, tuple(hat_term(a) for a in t.args))
    raise SortError(f"unknown term {t!r}")


def hat(f: FoFormula) -> FoFormula:
    """Rename p to p-hat and set functions to their hatted doubles.

    Comparisons, equality, membership, tuple constructors and count/sum
    stay untouched.
    """
    if isinstance(f, Falsum):
        return f
    if isinstance(f, PredAtom):
        return PredAtom(f.predicate, tuple(hat_term(a) for a in f.args), True)
    if isinstance(f, Eq):
        return Eq(hat_term(f.lhs), hat_term(f.rhs))
    if isinstance(f, Cmp):
        return Cmp(f.rel, hat_term(f.lhs), hat_term(f.rhs))
    if isinstance(f, Member):
        return Member(hat_term(f.item), hat_term(f.container))
    if isinstance(f, StrongNeg):
        return StrongNeg(hat(f.arg))
    if isinstance(f, And):
        return And(hat(f.lhs), hat(f.rhs))
    if isinstance(f, Or):
        return Or(hat(f.lhs), hat(f.rhs))
    if isinstance(f, Implies):
        return Implies(hat(f.lhs), hat(f.rhs))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, hat(f.body))
    raise SortError(f"unknown formula {f!r}")


def nn(f: FoFormula) -> FoFormula:
    """Replace every strong negation by ordinary negation; idempotent."""
    if isinstance(f, StrongNeg):
        return neg(nn(f.arg))
    if isinstance(f, And):
        return And(nn(f.lhs), nn(f.rhs))
    if isinstance(f, Or):
        return Or(nn(f.lhs), nn(f.rhs))
    if isinstance(f, Implies):
        return Implies(nn(f.lhs), nn(f.rhs))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, nn(f.body))
    return f


# ---------------------------------------------------------------------------
# Pretty-printer (stable ASCII; `not` for ->bottom, `NOT` for strong negation)
# ---------------------------------------------------------------------------

def term_str(t: FoTerm) -> str:
    if isinstance(t, FoVar):
        return t.name
    if isinstance(t, GroundTerm):
        return str(t.term)
    if isinstance(t, UminusTerm):
        return f"-{term_str(t.arg)}"
    if isinstance(t, AggTerm):
        return f"{t.op}({term_str(t.arg)})"
    if isinstance(t, TupleTerm):
        return f"tuple({','.join(term_str(a) for a in t.args)})"
    if isinstance(t, SetTerm):
        name = t.fn_name()
        if not t.args:
            return name
        return f"{name}({','.join(term_str(a) for a in t.args)})"
    raise SortError(f"unknown term {t!r}")


_PREC = {"quant": 1, "->": 2, "|": 3, "&": 4, "unary": 5, "atom": 6}


def formula_str(f: FoFormula) -> str:
    return _fstr(f, 0)


def _fstr(f: FoFormula, ctx: int) -> str:
    if isinstance(f, Falsum):
        return "#false"
    if isinstance(f, PredAtom):
        name = f.predicate + "'" if f.hatted else f.predicate
        body = name if not f.args else f"{name}({','.join(term_str(a) for a in f.args)})"
        return body
    if isinstance(f, Eq):
        return f"{term_str(f.lhs)} = {term_str(f.rhs)}"
    if isinstance(f, Cmp):
        return f"{term_str(f.lhs)} {f.rel} {term_str(f.rhs)}"
    if isinstance(f, Member):
        return f"{term_str(f.item)} in {term_str(f.container)}"
    if is_neg(f):
        s = f"not {_fstr(f.lhs, _PREC['unary'])}"
        return f"({s})" if ctx >= _PREC["unary"] else s
    if isinstance(f, StrongNeg):
        s = f"NOT {_fstr(f.arg, _PREC['unary'])}"
        return f"({s})" if ctx >= _PREC["unary"] else s
    if isinstance(f, And):
        s = f"{_fstr(f.lhs, _PREC['&'] - 1)} & {_fstr(f.rhs, _PREC['&'])}"
        return f"({s})" if ctx >= _PREC["&"] else s
    if isinstance(f, Or):
        s = f"{_fstr(f.lhs, _PREC['|'] - 1)} | {_fstr(f.rhs, _PREC['|'])}"
        return f"({s})" if ctx >= _PREC["|"] else s
    if isinstance(f, Implies):
        s = f"{_fstr(f.lhs, _PREC['->'])} -> {_fstr(f.rhs, _PREC['->'] - 1)}"
        return f"({s})" if ctx >= _PREC["->"] else s
    if isinstance(f, (Forall, Exists)):
        names = []
        sort = f.var.sort
        body: FoFormula = f
        kind = type(f)
        while isinstance(body, kind) and body.var.sort == sort:
            names.append(body.var.name)
            body = body.body
        word = "forall" if kind is Forall else "exists"
        suffix = "" if sort is Sort.GENERAL else f":{sort.value}"
        s = f"{word} {' '.join(names)}{suffix} {_fstr(body, _PREC['quant'])}"
        return f"({s})" if ctx >= _PREC["quant"] else s
    raise SortError(f"unknown formula {f!r}")


Theory = tuple[FoFormula, ...]


def theory_str(theory: Theory) -> str:
    return "\n".join(formula_str(f) for f in theory)
