"""Reduction of strong-equivalence questions to classical first-order logic.

``gamma`` maps extended formulas over the base signature to standard
formulas over the doubled (hatted) signature; the HT and AGG axiom
schemata pin down which hatted-signature interpretations encode
here-and-there pairs with derived set-function values; ``build_vc``
assembles the verification condition whose validity over standard
interpretations is equivalent to strong equivalence, and ``emit_tptp``
renders it as a typed first-order (TFF) problem.

Hatted copies inside ``gamma`` and the there-axioms are standardized with
the strong-negation-to-negation rewrite: strong negation is classical in
the hatted (classical-logic) copies, so the rewrite preserves meaning and
keeps every emitted formula free of the extra connective.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import folog
from .analysis import SetSymbol, Signature, build_signature
from .folog import (
    AggTerm,
    And,
    BOTTOM,
    Cmp,
    Eq,
    Exists,
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
    Sort,
    StrongNeg,
    Theory,
    TupleTerm,
    UminusTerm,
    conj,
    hat,
    iff,
    is_neg,
    neg,
    nn,
)
from .semantics import HtPair, Scope, ScopeError, _Worlds, _general_value
from .syntax import (
    Atom,
    Inf,
    Numeral,
    OPERATIONS,
    Program,
    ProgramTerm,
    Sup,
    SymbolicConstant,
    ground_term_key,
    relation_holds,
)
from .translate import fo_term, tau_literal, tau_program


def hat_std(f: FoFormula) -> FoFormula:
    """Hatted copy with strong negation rewritten to ordinary negation."""
    return nn(hat(f))


def gamma(f: FoFormula, *, neg_clause: bool = True) -> FoFormula:
    """Clause-by-clause translation into the hatted signature.

    With neg_clause the recognized pattern F -> bottom takes the dedicated
    clause (plain negation of the hatted copy); without it the generic
    implication clause applies.  Both are equivalent over interpretations
    encoding pairs, and the output is always strong-negation-free.
    """
    if isinstance(f, Falsum):
        return f
    if isinstance(f, (PredAtom, Eq, Cmp, Member)):
        return And(f, hat(f))
    if isinstance(f, StrongNeg):
        return And(neg(hat_std(f.arg)), neg(nn(f.arg)))
    if isinstance(f, And):
        return And(gamma(f.lhs, neg_clause=neg_clause), gamma(f.rhs, neg_clause=neg_clause))
    if isinstance(f, Or):
        return Or(gamma(f.lhs, neg_clause=neg_clause), gamma(f.rhs, neg_clause=neg_clause))
    if isinstance(f, Implies):
        if neg_clause and is_neg(f):
            return neg(hat_std(f.lhs))
        return And(
            Implies(gamma(f.lhs, neg_clause=neg_clause), gamma(f.rhs, neg_clause=neg_clause)),
            Implies(hat_std(f.lhs), hat_std(f.rhs)),
        )
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.var, gamma(f.body, neg_clause=neg_clause))
    raise TypeError(f"unknown formula {f!r}")


# ---------------------------------------------------------------------------
# Axiom schemata
# ---------------------------------------------------------------------------

def _pred_vars(arity: int) -> list[FoVar]:
    return [FoVar(f"X{i + 1}") for i in range(arity)]


def ht_axioms(sig: Signature) -> Theory:
    """One persistence axiom p(X) -> p-hat(X) per predicate."""
    out = []
    for name, arity in sig.sorted_predicates():
        xs = _pred_vars(arity)
        body = Implies(PredAtom(name, tuple(xs)), PredAtom(name, tuple(xs), hatted=True))
        for v in reversed(xs):
            body = Forall(v, body)
        out.append(body)
    return tuple(out)


def _fresh_tuple_var(taken: set[str]) -> FoVar:
    name = "T"
    k = 0
    while name in taken:
        name = f"T{k}"
        k += 1
    return FoVar(name, Sort.TUPLE)


def _element_formula(sym: SetSymbol, sem: str, t: FoVar, sig: Signature) -> FoFormula:
    element = sym.element
    tup = TupleTerm(tuple(fo_term(term) for term in element.terms))
    parts: list[FoFormula] = [Eq(t, tup)]
    parts.extend(tau_literal(sem, (), lit, sig) for lit in element.conditions)
    out = conj(parts)
    assert out is not None
    return out


def agg_axioms(sig: Signature, sem: str) -> Theory:
    """Three membership axioms per set symbol.

    The hatted function of the selected semantics gets the there-axiom;
    the cli here-value is characterized through gamma, the dlv here-value
    through the negation-rewritten element formula.  (Only the hatted
    function of the semantics in play ever occurs in a verification
    condition, so the off-semantics there-axiom is not emitted.)
    """
    out = []
    for sym in sig.set_symbols:
        short = sig.short_name(sym)
        xs = [FoVar(v) for v in sym.globals]
        t = _fresh_tuple_var(set(sym.globals) | set(sym.local_variables()))
        ys = list(sym.local_variables())

        def close(member_target: SetTerm, rhs: FoFormula) -> FoFormula:
            body: FoFormula = iff(Member(t, member_target), folog.exists_many(ys, rhs))
            body = Forall(t, body)
            for v in reversed(xs):
                body = Forall(v, body)
            return body

        args = tuple(xs)
        out.append(close(SetTerm(short, sym, sem, True, args),
                         hat_std(_element_formula(sym, sem, t, sig))))
        out.append(close(SetTerm(short, sym, "cli", False, args),
                         gamma(_element_formula(sym, "cli", t, sig))))
        out.append(close(SetTerm(short, sym, "dlv", False, args),
                         nn(_element_formula(sym, "dlv", t, sig))))
    return tuple(out)


# ---------------------------------------------------------------------------
# Symbol inventory of a formula set (drives declarations and axioms)
# ---------------------------------------------------------------------------

@dataclass
class _Symbols:
    preds: set[tuple[str, int, bool]]
    cmps: set[str]
    setfns: set[tuple[str, str, bool, int, SetSymbol]]
    tuple_arities: set[int]
    ground_terms: set[ProgramTerm]
    agg_ops: set[str]
    uses_member: bool = False
    uses_uminus: bool = False
    uses_eq: bool = False


def _scan_term(t: FoTerm, acc: _Symbols):
    if isinstance(t, GroundTerm):
        acc.ground_terms.add(t.term)
    elif isinstance(t, UminusTerm):
        acc.uses_uminus = True
        _scan_term(t.arg, acc)
    elif isinstance(t, TupleTerm):
        acc.tuple_arities.add(len(t.args))
        for a in t.args:
            _scan_term(a, acc)
    elif isinstance(t, SetTerm):
        acc.setfns.add((t.short, t.sem, t.hatted, len(t.args), t.sym))
        acc.tuple_arities.add(t.sym.tuple_arity)
        for a in t.args:
            _scan_term(a, acc)
    elif isinstance(t, AggTerm):
        acc.agg_ops.add(t.op)
        _scan_term(t.arg, acc)


def _scan(f: FoFormula, acc: _Symbols):
    if isinstance(f, Falsum):
        return
    if isinstance(f, PredAtom):
        acc.preds.add((f.predicate, len(f.args), f.hatted))
        for a in f.args:
            _scan_term(a, acc)
    elif isinstance(f, Eq):
        acc.uses_eq = True
        _scan_term(f.lhs, acc)
        _scan_term(f.rhs, acc)
    elif isinstance(f, Cmp):
        acc.cmps.add(f.rel)
        _scan_term(f.lhs, acc)
        _scan_term(f.rhs, acc)
    elif isinstance(f, Member):
        acc.uses_member = True
        _scan_term(f.item, acc)
        _scan_term(f.container, acc)
    elif isinstance(f, StrongNeg):
        _scan(f.arg, acc)
    elif isinstance(f, (And, Or, Implies)):
        _scan(f.lhs, acc)
        _scan(f.rhs, acc)
    elif isinstance(f, (Forall, Exists)):
        _scan(f.body, acc)
    else:
        raise TypeError(f"unknown formula {f!r}")


def _inventory(formulas: Iterable[FoFormula]) -> _Symbols:
    acc = _Symbols(set(), set(), set(), set(), set(), set())
    for f in formulas:
        _scan(f, acc)
    return acc


# ---------------------------------------------------------------------------
# Standardness axioms (best effort; omissions listed in the emitted header)
# ---------------------------------------------------------------------------

def standardness_axioms(formulas: Sequence[FoFormula]) -> tuple[tuple[str, FoFormula], ...]:
    """Axioms standard interpretations satisfy, restricted to occurring symbols.

    Covers the strict total order on general terms (with the other
    comparisons defined from < and =), #inf/#sup extremality when those
    constants occur, the order facts for the finitely many occurring
    ground terms, tuple-constructor injectivity and cross-arity
    distinctness, and set extensionality.  count and sum stay
    uninterpreted.
    """
    inv = _inventory(formulas)
    out: list[tuple[str, FoFormula]] = []
    a, b, c = FoVar("A"), FoVar("B"), FoVar("C")
    if inv.cmps or inv.ground_terms:
        lt = lambda x, y: Cmp("<", x, y)
        out.append(("std_less_total",
                    Forall(a, Forall(b, Or(lt(a, b), Or(Eq(a, b), lt(b, a)))))))
        out.append(("std_less_transitive",
                    Forall(a, Forall(b, Forall(c, Implies(And(lt(a, b), lt(b, c)), lt(a, c)))))))
        out.append(("std_less_antisymmetric",
                    Forall(a, Forall(b, Implies(lt(a, b), neg(lt(b, a)))))))
        defs = {
            ">": ("std_gt_def", iff(Cmp(">", a, b), lt(b, a))),
            "<=": ("std_leq_def", iff(Cmp("<=", a, b), Or(lt(a, b), Eq(a, b)))),
            ">=": ("std_geq_def", iff(Cmp(">=", a, b), Or(lt(b, a), Eq(a, b)))),
            "!=": ("std_neq_def", iff(Cmp("!=", a, b), neg(Eq(a, b)))),
        }
        for rel in sorted(inv.cmps):
            if rel in defs:
                name, body = defs[rel]
                out.append((name, Forall(a, Forall(b, body))))
        ordered = sorted(inv.ground_terms, key=ground_term_key)
        if any(isinstance(t, Inf) for t in ordered):
            out.append(("std_inf_least",
                        Forall(a, Or(Eq(a, GroundTerm(Inf())), lt(GroundTerm(Inf()), a)))))
        if any(isinstance(t, Sup) for t in ordered):
            out.append(("std_sup_greatest",
                        Forall(a, Or(Eq(a, GroundTerm(Sup())), lt(a, GroundTerm(Sup()))))))
        for i in range(len(ordered) - 1):
            out.append((f"std_order_{i}",
                        lt(GroundTerm(ordered[i]), GroundTerm(ordered[i + 1]))))
    arities = sorted(inv.tuple_arities)
    for k in arities:
        xs = [FoVar(f"X{i + 1}") for i in range(k)]
        ys = [FoVar(f"Y{i + 1}") for i in range(k)]
        eqs = conj([Eq(x, y) for x, y in zip(xs, ys)])
        assert eqs is not None
        body: FoFormula = Implies(Eq(TupleTerm(tuple(xs)), TupleTerm(tuple(ys))), eqs)
        for v in reversed(xs + ys):
            body = Forall(v, body)
        out.append((f"std_tuple_injective_{k}", body))
    for j, k in itertools.combinations(arities, 2):
        xs = [FoVar(f"X{i + 1}") for i in range(j)]
        ys = [FoVar(f"Y{i + 1}") for i in range(k)]
        body = neg(Eq(TupleTerm(tuple(xs)), TupleTerm(tuple(ys))))
        for v in reversed(xs + ys):
            body = Forall(v, body)
        out.append((f"std_tuple_distinct_{j}_{k}", body))
    if inv.setfns:
        s1, s2 = FoVar("S1", Sort.SET), FoVar("S2", Sort.SET)
        t = FoVar("T", Sort.TUPLE)
        out.append(("std_set_extensional",
                    Forall(s1, Forall(s2, Implies(
                        Forall(t, iff(Member(t, s1), Member(t, s2))), Eq(s1, s2))))))
    return tuple(out)


# ---------------------------------------------------------------------------
# Verification condition
# ---------------------------------------------------------------------------

TRIVIAL_TRUE = Implies(BOTTOM, BOTTOM)


@dataclass(frozen=True)
class VerificationCondition:
    sig: Signature
    sem: str
    ht_axioms: Theory
    agg_axioms: Theory
    standardness_axioms: tuple[tuple[str, FoFormula], ...]
    goal: FoFormula


def build_vc(left: Program, right: Program, sem: str, *,
             strict_item3: bool = False) -> VerificationCondition:
    """Theorem-style verification condition for strong equivalence.

    goal = (/\\ HT /\\ /\\ AGG) -> (F_left <-> F_right) where F_i conjoins
    the gamma images of the translated programs.
    """
    sig = build_signature([left, right])
    ht = ht_axioms(sig)
    agg = agg_axioms(sig, sem)
    f_left = conj([gamma(s) for s in tau_program(sem, left, sig, strict_item3=strict_item3)])
    f_right = conj([gamma(s) for s in tau_program(sem, right, sig, strict_item3=strict_item3)])
    bicond = iff(f_left if f_left is not None else TRIVIAL_TRUE,
                 f_right if f_right is not None else TRIVIAL_TRUE)
    premises = conj(list(ht) + list(agg))
    goal = bicond if premises is None else Implies(premises, bicond)
    std = standardness_axioms([goal])
    return VerificationCondition(sig, sem, ht, agg, std, goal)


# ---------------------------------------------------------------------------
# The pair-to-hatted-interpretation bridge (test oracle)
# ---------------------------------------------------------------------------

class IhInterpretation:
    """Interpretation of the hatted signature induced by a pair.

    Plain symbols take their here-values, hatted symbols their
    there-values; everything else is standard.  Quantifiers over the tuple
    sort range over pool tuples of the given arities; quantifiers over the
    set sort range over all subsets of that tuple universe.
    """

    def __init__(self, pair: HtPair, scope: Scope, tuple_arities: Sequence[int] = ()):
        self.pair = pair
        self.scope = scope
        self.pool = scope.pool()
        self.tuple_arities = tuple(tuple_arities)
        self._worlds = _Worlds(pair, scope)

    def holds_pred(self, name: str, hatted: bool, args: tuple) -> bool:
        atoms = self.pair.there if hatted else self.pair.here
        return Atom(name, args) in atoms

    def set_value(self, term: SetTerm, args: tuple) -> frozenset:
        world = "there" if term.hatted else "here"
        return self._worlds.set_value(term.sym, term.sem, world, args)

    def tuple_universe(self) -> list[tuple]:
        out = []
        for k in self.tuple_arities:
            out.extend(itertools.product(self.pool, repeat=k))
        return out

    def set_universe(self) -> list[frozenset]:
        tuples = self.tuple_universe()
        if len(tuples) > 12:
            raise ScopeError("set-sort quantification over more than 2^12 sets")
        out = []
        for k in range(len(tuples) + 1):
            for combo in itertools.combinations(tuples, k):
                out.append(frozenset(combo))
        return out

    def satisfies(self, f: FoFormula) -> bool:
        return eval_hat(f, self, {})


class ExplicitHatInterpretation(IhInterpretation):
    """Hatted-signature interpretation given by explicit extensions.

    Used to enumerate arbitrary interpretations when testing that the HT
    and AGG axioms characterize exactly the pair-induced ones.
    """

    def __init__(self, scope: Scope, tuple_arities: Sequence[int],
                 pred_ext: dict, setfn_ext: dict):
        empty = frozenset()
        super().__init__(HtPair(empty, empty), scope, tuple_arities)
        self.pred_ext = pred_ext  # (name, hatted) -> set of arg tuples
        self.setfn_ext = setfn_ext  # (short, sem, hatted, args) -> frozenset

    def holds_pred(self, name: str, hatted: bool, args: tuple) -> bool:
        return args in self.pred_ext.get((name, hatted), ())

    def set_value(self, term: SetTerm, args: tuple) -> frozenset:
        return self.setfn_ext[(term.short, term.sem, term.hatted, args)]


def ih_interpretation(pair: HtPair, scope: Scope,
                      tuple_arities: Sequence[int] = ()) -> IhInterpretation:
    return IhInterpretation(pair, scope, tuple_arities)


def _hat_term_value(t: FoTerm, interp: IhInterpretation, env: dict):
    if isinstance(t, FoVar):
        return env[t]
    if isinstance(t, (GroundTerm, UminusTerm)):
        return _general_value(t, env)
    if isinstance(t, TupleTerm):
        return tuple(_hat_term_value(a, interp, env) for a in t.args)
    if isinstance(t, SetTerm):
        args = tuple(_hat_term_value(a, interp, env) for a in t.args)
        return interp.set_value(t, args)
    if isinstance(t, AggTerm):
        return OPERATIONS[t.op](_hat_term_value(t.arg, interp, env))
    raise TypeError(f"unknown term {t!r}")


def eval_hat(f: FoFormula, interp: IhInterpretation, env: dict) -> bool:
    """Classical satisfaction over the hatted signature."""
    if isinstance(f, Falsum):
        return False
    if isinstance(f, PredAtom):
        args = tuple(_hat_term_value(a, interp, env) for a in f.args)
        return interp.holds_pred(f.predicate, f.hatted, args)
    if isinstance(f, Eq):
        return _hat_term_value(f.lhs, interp, env) == _hat_term_value(f.rhs, interp, env)
    if isinstance(f, Cmp):
        return relation_holds(f.rel, _hat_term_value(f.lhs, interp, env),
                              _hat_term_value(f.rhs, interp, env))
    if isinstance(f, Member):
        return _hat_term_value(f.item, interp, env) in _hat_term_value(f.container, interp, env)
    if isinstance(f, StrongNeg):
        return not eval_hat(f.arg, interp, env)
    if isinstance(f, And):
        return eval_hat(f.lhs, interp, env) and eval_hat(f.rhs, interp, env)
    if isinstance(f, Or):
        return eval_hat(f.lhs, interp, env) or eval_hat(f.rhs, interp, env)
    if isinstance(f, Implies):
        return not eval_hat(f.lhs, interp, env) or eval_hat(f.rhs, interp, env)
    if isinstance(f, (Forall, Exists)):
        if f.var.sort is Sort.GENERAL:
            domain: Iterable = interp.pool
        elif f.var.sort is Sort.TUPLE:
            domain = interp.tuple_universe()
        else:
            domain = interp.set_universe()
        results = (eval_hat(f.body, interp, {**env, f.var: d}) for d in domain)
        return all(results) if isinstance(f, Forall) else any(results)
    raise TypeError(f"unknown formula {f!r}")


# ---------------------------------------------------------------------------
# TPTP TFF emission
# ---------------------------------------------------------------------------

_GENERAL, _TUPLE, _SET = "general", "tuple_sort", "set_sort"
_CMP_NAMES = {"<": "less", ">": "greater", "<=": "leq", ">=": "geq", "!=": "neq"}


def tptp_ground_name(t: ProgramTerm) -> str:
    if isinstance(t, Numeral):
        return f"num_{t.value}" if t.value >= 0 else f"num_m{-t.value}"
    if isinstance(t, SymbolicConstant):
        return f"sc_{t.name}"
    if isinstance(t, Inf):
        return "t_inf"
    if isinstance(t, Sup):
        return "t_sup"
    raise ValueError(f"not a ground term: {t}")


def tptp_pred_name(name: str, arity: int, hatted: bool) -> str:
    base = f"p_{name}_{arity}"
    return base + "_hat" if hatted else base


def _tptp_term(t: FoTerm) -> str:
    if isinstance(t, FoVar):
        return t.name
    if isinstance(t, GroundTerm):
        return tptp_ground_name(t.term)
    if isinstance(t, UminusTerm):
        return f"uminus({_tptp_term(t.arg)})"
    if isinstance(t, TupleTerm):
        if not t.args:
            return "tuple_0"
        return f"tuple_{len(t.args)}({','.join(_tptp_term(a) for a in t.args)})"
    if isinstance(t, SetTerm):
        if not t.args:
            return t.fn_name()
        return f"{t.fn_name()}({','.join(_tptp_term(a) for a in t.args)})"
    if isinstance(t, AggTerm):
        return f"{t.op}({_tptp_term(t.arg)})"
    raise TypeError(f"unknown term {t!r}")


def _sort_name(sort: Sort) -> str:
    return {Sort.GENERAL: _GENERAL, Sort.TUPLE: _TUPLE, Sort.SET: _SET}[sort]


def _tptp_formula(f: FoFormula) -> str:
    if isinstance(f, Falsum):
        return "$false"
    if isinstance(f, PredAtom):
        name = tptp_pred_name(f.predicate, len(f.args), f.hatted)
        if not f.args:
            return name
        return f"{name}({','.join(_tptp_term(a) for a in f.args)})"
    if isinstance(f, Eq):
        return f"({_tptp_term(f.lhs)} = {_tptp_term(f.rhs)})"
    if isinstance(f, Cmp):
        return f"{_CMP_NAMES[f.rel]}({_tptp_term(f.lhs)},{_tptp_term(f.rhs)})"
    if isinstance(f, Member):
        return f"member({_tptp_term(f.item)},{_tptp_term(f.container)})"
    if isinstance(f, StrongNeg):
        raise ValueError("strong negation cannot be emitted; gamma/nn the formula first")
    if is_neg(f):
        return f"~({_tptp_formula(f.lhs)})"
    if isinstance(f, And):
        return f"({_tptp_formula(f.lhs)} & {_tptp_formula(f.rhs)})"
    if isinstance(f, Or):
        return f"({_tptp_formula(f.lhs)} | {_tptp_formula(f.rhs)})"
    if isinstance(f, Implies):
        return f"({_tptp_formula(f.lhs)} => {_tptp_formula(f.rhs)})"
    if isinstance(f, (Forall, Exists)):
        symbol = "!" if isinstance(f, Forall) else "?"
        names = []
        body: FoFormula = f
        kind = type(f)
        while isinstance(body, kind):
            names.append(f"{body.var.name}: {_sort_name(body.var.sort)}")
            body = body.body
        return f"({symbol} [{', '.join(names)}]: {_tptp_formula(body)})"
    raise TypeError(f"unknown formula {f!r}")


def emit_tptp(vc: VerificationCondition, *, include_standardness: bool = True) -> str:
    """Render a verification condition as a TPTP TFF problem."""
    formulas: list[FoFormula] = [vc.goal]
    if include_standardness:
        formulas.extend(f for _, f in vc.standardness_axioms)
    inv = _inventory(formulas)
    lines = [
        "% Strong-equivalence verification condition (typed first-order form).",
        f"% Semantics: {vc.sem}.",
        "% Provers must treat this as a satisfiability/validity check over the",
        "% declared sorts.  Known gaps against the intended standard models:",
        "%   - count and sum are uninterpreted (no integer arithmetic is axiomatized);",
        "%   - only the finitely many ground terms occurring below carry order facts;",
        "%   - a 'satisfiable, countermodel found' verdict therefore needs manual",
        "%     inspection before concluding non-equivalence.",
        "",
        f"tff(sort_general, type, {_GENERAL}: $tType).",
        f"tff(sort_tuple, type, {_TUPLE}: $tType).",
        f"tff(sort_set, type, {_SET}: $tType).",
    ]
    for term in sorted(inv.ground_terms, key=ground_term_key):
        lines.append(f"tff(decl_{tptp_ground_name(term)}, type, {tptp_ground_name(term)}: {_GENERAL}).")
    if inv.uses_uminus:
        lines.append(f"tff(decl_uminus, type, uminus: {_GENERAL} > {_GENERAL}).")
    for name, arity, hatted in sorted(inv.preds):
        sym = tptp_pred_name(name, arity, hatted)
        if arity == 0:
            lines.append(f"tff(decl_{sym}, type, {sym}: $o).")
        elif arity == 1:
            lines.append(f"tff(decl_{sym}, type, {sym}: {_GENERAL} > $o).")
        else:
            args = " * ".join([_GENERAL] * arity)
            lines.append(f"tff(decl_{sym}, type, {sym}: ({args}) > $o).")
    for rel in sorted(inv.cmps | ({"<"} if (inv.cmps or inv.ground_terms) else set())):
        sym = _CMP_NAMES[rel]
        lines.append(f"tff(decl_{sym}, type, {sym}: ({_GENERAL} * {_GENERAL}) > $o).")
    if inv.uses_member:
        lines.append(f"tff(decl_member, type, member: ({_TUPLE} * {_SET}) > $o).")
    for k in sorted(inv.tuple_arities):
        if k == 0:
            lines.append(f"tff(decl_tuple_0, type, tuple_0: {_TUPLE}).")
        elif k == 1:
            lines.append(f"tff(decl_tuple_1, type, tuple_1: {_GENERAL} > {_TUPLE}).")
        else:
            args = " * ".join([_GENERAL] * k)
            lines.append(f"tff(decl_tuple_{k}, type, tuple_{k}: ({args}) > {_TUPLE}).")
    for op in sorted(inv.agg_ops):
        lines.append(f"tff(decl_{op}, type, {op}: {_SET} > {_GENERAL}).")
    for short, sem, hatted, arity, _sym in sorted(inv.setfns, key=lambda x: x[:4]):
        name = SetTerm(short, _sym, sem, hatted, ()).fn_name()
        if arity == 0:
            lines.append(f"tff(decl_{name}, type, {name}: {_SET}).")
        elif arity == 1:
            lines.append(f"tff(decl_{name}, type, {name}: {_GENERAL} > {_SET}).")
        else:
            args = " * ".join([_GENERAL] * arity)
            lines.append(f"tff(decl_{name}, type, {name}: ({args}) > {_SET}).")
    lines.append("")
    for (name, arity), axiom in zip(vc.sig.sorted_predicates(), vc.ht_axioms):
        lines.append(f"tff(ht_{tptp_pred_name(name, arity, False)}, axiom, {_tptp_formula(axiom)}).")
    kinds = ("there", "here_cli", "here_dlv")
    for i, axiom in enumerate(vc.agg_axioms):
        sym = vc.sig.set_symbols[i // 3]
        lines.append(
            f"tff(agg_{kinds[i % 3]}_{vc.sig.short_name(sym)}, axiom, {_tptp_formula(axiom)}).")
    if include_standardness:
        for name, axiom in vc.standardness_axioms:
            lines.append(f"tff({name}, axiom, {_tptp_formula(axiom)}).")
    lines.append("")
    lines.append(f"tff(goal, conjecture, {_tptp_formula(vc.goal)}).")
    lines.append("")
    return "\n".join(lines)
