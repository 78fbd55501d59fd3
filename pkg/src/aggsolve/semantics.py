"""Desk-scale executable semantics.

Everything here is bounded by a :class:`Scope`: a finite pool of ground
terms (an integer interval plus symbolic constants) that stands in for the
infinite instantiation domain.  Two routes to answer sets are provided and
cross-checked in the tests:

* the propositional route — ground the program over the scope, expand each
  aggregate atom into its subset conjunction, then apply the FT reduct
  (cli) or the FLP reduct (dlv) and search for minimal models;
* the model-theoretic route — evaluate the translated first-order theory
  on here-and-there pairs whose set-function values are derived from the
  pair, and keep the models with no strictly smaller here-world.

The same pair enumeration powers the bounded strong-equivalence checker: a
counterexample pair refutes strong equivalence outright, while
"equivalent within scope" is evidence, not a proof.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import folog, syntax
from .analysis import SetSymbol, Signature, build_signature, global_vars
from .syntax import (
    AggregateAtom,
    AggregateLiteral,
    Atom,
    BasicLiteral,
    Comparison,
    Numeral,
    Program,
    ProgramTerm,
    Rule,
    SymbolicConstant,
    OPERATIONS,
    element_variables,
    ground_term_key,
    relation_holds,
    subst_basic_literal,
    subst_rule,
    subst_term,
)
from .translate import tau_program

PropInterp = frozenset  # of ground Atom


class ScopeError(Exception):
    """Grounding or enumeration outgrew the configured bounds."""


@dataclass(frozen=True)
class Scope:
    """Finite universe for the oracle.

    The ground-term pool is the numerals int_min..int_max plus the symbolic
    constants; int_min > int_max encodes an empty integer interval.  #inf
    and #sup participate in the term order but are never instantiated.
    max_subset caps the aggregate expansion base set.
    """

    constants: tuple[str, ...] = ()
    int_min: int = 0
    int_max: int = -1
    max_subset: int = 12

    def pool(self) -> tuple[ProgramTerm, ...]:
        nums = [Numeral(n) for n in range(self.int_min, self.int_max + 1)]
        consts = [SymbolicConstant(c) for c in sorted(set(self.constants))]
        return tuple(nums + consts)


@dataclass(frozen=True)
class HtPair:
    here: frozenset
    there: frozenset

    def __post_init__(self):
        if not self.here <= self.there:
            raise ValueError("here-world must be a subset of the there-world")


def atom_key(a: Atom):
    return (a.predicate, len(a.args), tuple(ground_term_key(t) for t in a.args))


# ---------------------------------------------------------------------------
# Ground (propositional) formulas: finite stand-ins for infinitary ones
# ---------------------------------------------------------------------------

class GroundFormula:
    __slots__ = ()


@dataclass(frozen=True)
class GAtom(GroundFormula):
    atom: Atom


@dataclass(frozen=True)
class GAnd(GroundFormula):
    parts: tuple[GroundFormula, ...]


@dataclass(frozen=True)
class GOr(GroundFormula):
    parts: tuple[GroundFormula, ...]


@dataclass(frozen=True)
class GImpl(GroundFormula):
    lhs: GroundFormula
    rhs: GroundFormula


@dataclass(frozen=True)
class GSneg(GroundFormula):
    arg: GroundFormula


G_TRUE = GAnd(())
G_FALSE = GOr(())


def gnot(f: GroundFormula) -> GroundFormula:
    return GImpl(f, G_FALSE)


def eval_prop(f: GroundFormula, interp: frozenset) -> bool:
    """Classical satisfaction; strong negation behaves classically."""
    if isinstance(f, GAtom):
        return f.atom in interp
    if isinstance(f, GAnd):
        return all(eval_prop(p, interp) for p in f.parts)
    if isinstance(f, GOr):
        return any(eval_prop(p, interp) for p in f.parts)
    if isinstance(f, GImpl):
        return not eval_prop(f.lhs, interp) or eval_prop(f.rhs, interp)
    if isinstance(f, GSneg):
        return not eval_prop(f.arg, interp)
    raise TypeError(f"not a ground formula: {f!r}")


def eval_ht_prop(f: GroundFormula, pair: HtPair) -> bool:
    """Here-and-there satisfaction of a ground formula."""
    if isinstance(f, GAtom):
        return f.atom in pair.here and f.atom in pair.there
    if isinstance(f, GAnd):
        return all(eval_ht_prop(p, pair) for p in f.parts)
    if isinstance(f, GOr):
        return any(eval_ht_prop(p, pair) for p in f.parts)
    if isinstance(f, GImpl):
        return ((not eval_prop(f.lhs, pair.there) or eval_prop(f.rhs, pair.there))
                and (not eval_ht_prop(f.lhs, pair) or eval_ht_prop(f.rhs, pair)))
    if isinstance(f, GSneg):
        return not eval_prop(f.arg, pair.there) and not eval_prop(f.arg, pair.here)
    raise TypeError(f"not a ground formula: {f!r}")


def ft_reduct(f: GroundFormula, interp: frozenset) -> GroundFormula:
    """FT reduct of a standard ground formula."""
    if isinstance(f, GSneg):
        raise ValueError("FT reduct is defined on standard formulas only")
    if not eval_prop(f, interp):
        return G_FALSE
    if isinstance(f, GAtom):
        return f
    if isinstance(f, GAnd):
        return GAnd(tuple(ft_reduct(p, interp) for p in f.parts))
    if isinstance(f, GOr):
        return GOr(tuple(ft_reduct(p, interp) for p in f.parts))
    if isinstance(f, GImpl):
        return GImpl(ft_reduct(f.lhs, interp), ft_reduct(f.rhs, interp))
    raise TypeError(f"not a ground formula: {f!r}")


def flp_reduct(f: GroundFormula, interp: frozenset) -> GroundFormula:
    """FLP reduct of a conjunction of ground implications."""
    if not isinstance(f, GAnd):
        raise ValueError("FLP reduct expects a conjunction of implications")
    kept = []
    for part in f.parts:
        if not isinstance(part, GImpl):
            raise ValueError("FLP reduct expects a conjunction of implications")
        kept.append(part if eval_prop(part.lhs, interp) else G_TRUE)
    return GAnd(tuple(kept))


# ---------------------------------------------------------------------------
# Grounding
# ---------------------------------------------------------------------------

def herbrand_instances(rule: Rule, scope: Scope) -> list[Rule]:
    """One instance per assignment of pool terms to the rule's global vars."""
    z = global_vars(rule)
    pool = scope.pool()
    out = []
    for values in itertools.product(pool, repeat=len(z)):
        binding = dict(zip(z, values))
        try:
            out.append(subst_rule(rule, binding))
        except ValueError as exc:  # -X instantiated with a non-numeral
            raise ScopeError(str(exc)) from None
    return out


def expand_aggregate(agg: AggregateAtom, scope: Scope) -> GroundFormula:
    """Subset conjunction of a ground aggregate atom over the scope.

    For every subset of the local-variable instantiations that fails the
    guard comparison, emit "if all its condition instances hold then some
    instance outside it holds".  Negations inside conditions become
    ordinary propositional negation.
    """
    element = agg.element
    if not syntax.is_ground(agg.guard):
        raise ScopeError(f"aggregate guard is not ground: {agg.guard}")
    locals_ = tuple(sorted(element_variables(element)))
    pool = scope.pool()
    size = len(pool) ** len(locals_)
    if size > scope.max_subset:
        raise ScopeError(
            f"aggregate expansion needs {size} instantiations, over the cap of {scope.max_subset}")
    psi = list(itertools.product(pool, repeat=len(locals_)))

    def instantiate(y):
        binding = dict(zip(locals_, y))
        try:
            lits = tuple(_ground_literal_prop(subst_basic_literal(l, binding)) for l in element.conditions)
            terms = tuple(subst_term(t, binding) for t in element.terms)
        except ValueError as exc:
            raise ScopeError(str(exc)) from None
        return lits, terms

    instances = [instantiate(y) for y in psi]
    op = OPERATIONS[agg.op]
    conjuncts = []
    for mask in range(2 ** len(psi)):
        delta = [i for i in range(len(psi)) if mask >> i & 1]
        tuples = {instances[i][1] for i in delta}
        if relation_holds(agg.rel, op(tuples), agg.guard):
            continue  # this subset justifies the atom
        antecedent = GAnd(tuple(l for i in delta for l in instances[i][0]))
        consequent = GOr(tuple(GAnd(instances[i][0]) for i in range(len(psi)) if i not in delta))
        conjuncts.append(GImpl(antecedent, consequent))
    return GAnd(tuple(conjuncts))


def _ground_literal_prop(lit: BasicLiteral) -> GroundFormula:
    inner = lit.inner
    if isinstance(inner, Atom):
        base: GroundFormula = GAtom(inner)
    elif isinstance(inner, Comparison):
        base = G_TRUE if relation_holds(inner.rel, inner.lhs, inner.rhs) else G_FALSE
    else:
        raise TypeError(f"unexpected literal body {inner!r}")
    for _ in range(lit.negation):
        base = gnot(base)
    return base


def _prop_literal(lit, scope: Scope) -> GroundFormula:
    if isinstance(lit, BasicLiteral):
        return _ground_literal_prop(lit)
    base = expand_aggregate(lit.inner, scope)
    for _ in range(lit.negation):
        base = gnot(base)
    return base


def ground_program(program: Program, scope: Scope) -> list[GImpl]:
    """Propositional translation: one implication per ground rule instance."""
    out = []
    for rule in program.rules:
        for inst in herbrand_instances(rule, scope):
            body = GAnd(tuple(_prop_literal(l, scope) for l in inst.body))
            head = G_FALSE if inst.head is None else GAtom(inst.head)
            out.append(GImpl(body, head))
    return out


def _prop_atoms(f: GroundFormula, acc: set):
    if isinstance(f, GAtom):
        acc.add(f.atom)
    elif isinstance(f, (GAnd, GOr)):
        for p in f.parts:
            _prop_atoms(p, acc)
    elif isinstance(f, GImpl):
        _prop_atoms(f.lhs, acc)
        _prop_atoms(f.rhs, acc)
    elif isinstance(f, GSneg):
        _prop_atoms(f.arg, acc)


def _subsets_by_size(atoms: Sequence[Atom]) -> Iterator[frozenset]:
    for k in range(len(atoms) + 1):
        for combo in itertools.combinations(atoms, k):
            yield frozenset(combo)


def answer_sets(program: Program, scope: Scope, sem: str) -> set[frozenset]:
    """Brute-force clingo (FT) or dlv (FLP) answer sets within the scope.

    Candidates range over atoms occurring in some ground head: a model
    containing any other atom always admits a smaller here-world, so
    nothing is lost.
    """
    if sem not in ("cli", "dlv"):
        raise ValueError(f"unknown semantics {sem!r}")
    impls = ground_program(program, scope)
    head_atoms: set = set()
    for impl in impls:
        _prop_atoms(impl.rhs, head_atoms)
    ordered = sorted(head_atoms, key=atom_key)
    full = GAnd(tuple(impls))
    found: set[frozenset] = set()
    for candidate in _subsets_by_size(ordered):
        if sem == "cli":
            reduct = ft_reduct(full, candidate)
        else:
            reduct = flp_reduct(full, candidate)
        if not eval_prop(reduct, candidate):
            continue
        inside = sorted(candidate, key=atom_key)
        minimal = True
        for k in range(len(inside)):
            for combo in itertools.combinations(inside, k):
                if eval_prop(reduct, frozenset(combo)):
                    minimal = False
                    break
            if not minimal:
                break
        if minimal:
            found.add(candidate)
    return found


# ---------------------------------------------------------------------------
# Evaluation of translated theories on here-and-there pairs
# ---------------------------------------------------------------------------

class _Worlds:
    """Derived set-function values for one pair, with memoisation.

    The there-value does not depend on the semantics (the two negations
    coincide classically); the here-value does: cli reads conditions
    through the pair, dlv reads them classically at the here-world.
    """

    def __init__(self, pair: HtPair, scope: Scope):
        self.pair = pair
        self.scope = scope
        self.pool = scope.pool()
        self._cache: dict = {}

    def atoms(self, world: str) -> frozenset:
        return self.pair.there if world == "there" else self.pair.here

    def set_value(self, sym: SetSymbol, sem: str, world: str, args: tuple) -> frozenset:
        key = (sym, world if world == "there" else (world, sem), args)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        locals_ = sym.local_variables()
        base = dict(zip(sym.globals, args))
        result = set()
        for ys in itertools.product(self.pool, repeat=len(locals_)):
            binding = base | dict(zip(locals_, ys))
            try:
                if all(self._condition_holds(subst_basic_literal(l, binding), sem, world)
                       for l in sym.element.conditions):
                    result.add(tuple(subst_term(t, binding) for t in sym.element.terms))
            except ValueError as exc:
                raise ScopeError(str(exc)) from None
        value = frozenset(result)
        self._cache[key] = value
        return value

    def _condition_holds(self, lit: BasicLiteral, sem: str, world: str) -> bool:
        inner = lit.inner
        if isinstance(inner, Atom):
            def sat(w: str) -> bool:
                return inner in self.atoms(w)
        else:
            truth = relation_holds(inner.rel, inner.lhs, inner.rhs)

            def sat(w: str) -> bool:
                return truth
        if world == "there" or sem == "dlv":
            # classical at the chosen world; both negations are classical
            value = sat(world)
            return not value if lit.negation == 1 else value
        # here-value under cli: the pair satisfies the translated literal
        if lit.negation == 0:
            return sat("here") and sat("there")
        if lit.negation == 1:
            return not sat("there")
        return sat("there")


def agg_set_value(sym: SetSymbol, x: str, world: str, args: tuple,
                  pair: HtPair, scope: Scope) -> frozenset:
    """Value of a set function at the here- or there-world of a pair."""
    if world not in ("here", "there"):
        raise ValueError(f"world must be 'here' or 'there', got {world!r}")
    return _Worlds(pair, scope).set_value(sym, x, world, args)


def _general_value(t: folog.FoTerm, env: dict):
    if isinstance(t, folog.FoVar):
        return env[t]
    if isinstance(t, folog.GroundTerm):
        return t.term
    if isinstance(t, folog.UminusTerm):
        v = _general_value(t.arg, env)
        if isinstance(v, Numeral):
            return Numeral(-v.value)
        raise ScopeError(f"cannot negate non-numeral term {v}")
    raise TypeError(f"not a general-sort term: {t!r}")


def _term_value(t: folog.FoTerm, env: dict, worlds: _Worlds, world: str):
    if isinstance(t, (folog.FoVar, folog.GroundTerm, folog.UminusTerm)):
        return _general_value(t, env)
    if isinstance(t, folog.TupleTerm):
        return tuple(_term_value(a, env, worlds, world) for a in t.args)
    if isinstance(t, folog.SetTerm):
        if t.hatted:
            raise ValueError("hatted symbols do not occur in theories over the base signature")
        args = tuple(_term_value(a, env, worlds, world) for a in t.args)
        return worlds.set_value(t.sym, t.sem, world, args)
    if isinstance(t, folog.AggTerm):
        return OPERATIONS[t.op](_term_value(t.arg, env, worlds, world))
    raise TypeError(f"unknown term {t!r}")


def _eval_classical(f: folog.FoFormula, env: dict, worlds: _Worlds, world: str) -> bool:
    if isinstance(f, folog.Falsum):
        return False
    if isinstance(f, folog.PredAtom):
        if f.hatted:
            raise ValueError("hatted symbols do not occur in theories over the base signature")
        args = tuple(_term_value(a, env, worlds, world) for a in f.args)
        return Atom(f.predicate, args) in worlds.atoms(world)
    if isinstance(f, folog.Eq):
        return _term_value(f.lhs, env, worlds, world) == _term_value(f.rhs, env, worlds, world)
    if isinstance(f, folog.Cmp):
        return relation_holds(f.rel, _term_value(f.lhs, env, worlds, world),
                              _term_value(f.rhs, env, worlds, world))
    if isinstance(f, folog.Member):
        return (_term_value(f.item, env, worlds, world)
                in _term_value(f.container, env, worlds, world))
    if isinstance(f, folog.StrongNeg):
        return not _eval_classical(f.arg, env, worlds, world)
    if isinstance(f, folog.And):
        return _eval_classical(f.lhs, env, worlds, world) and _eval_classical(f.rhs, env, worlds, world)
    if isinstance(f, folog.Or):
        return _eval_classical(f.lhs, env, worlds, world) or _eval_classical(f.rhs, env, worlds, world)
    if isinstance(f, folog.Implies):
        return (not _eval_classical(f.lhs, env, worlds, world)
                or _eval_classical(f.rhs, env, worlds, world))
    if isinstance(f, (folog.Forall, folog.Exists)):
        if f.var.sort is not folog.Sort.GENERAL:
            raise ValueError("the oracle only instantiates general-sort quantifiers")
        results = (
            _eval_classical(f.body, {**env, f.var: d}, worlds, world) for d in worlds.pool)
        return all(results) if isinstance(f, folog.Forall) else any(results)
    raise TypeError(f"unknown formula {f!r}")


def _eval_ht(f: folog.FoFormula, env: dict, worlds: _Worlds) -> bool:
    if isinstance(f, folog.Falsum):
        return False
    if isinstance(f, (folog.PredAtom, folog.Eq, folog.Cmp, folog.Member)):
        return (_eval_classical(f, env, worlds, "there")
                and _eval_classical(f, env, worlds, "here"))
    if isinstance(f, folog.StrongNeg):
        return (not _eval_classical(f.arg, env, worlds, "there")
                and not _eval_classical(f.arg, env, worlds, "here"))
    if isinstance(f, folog.And):
        return _eval_ht(f.lhs, env, worlds) and _eval_ht(f.rhs, env, worlds)
    if isinstance(f, folog.Or):
        return _eval_ht(f.lhs, env, worlds) or _eval_ht(f.rhs, env, worlds)
    if isinstance(f, folog.Implies):
        return (_eval_classical(f, env, worlds, "there")
                and (not _eval_ht(f.lhs, env, worlds) or _eval_ht(f.rhs, env, worlds)))
    if isinstance(f, (folog.Forall, folog.Exists)):
        if f.var.sort is not folog.Sort.GENERAL:
            raise ValueError("the oracle only instantiates general-sort quantifiers")
        results = (_eval_ht(f.body, {**env, f.var: d}, worlds) for d in worlds.pool)
        return all(results) if isinstance(f, folog.Forall) else any(results)
    raise TypeError(f"unknown formula {f!r}")


def eval_ht(f: folog.FoFormula, pair: HtPair, scope: Scope) -> bool:
    """Here-and-there satisfaction of a closed formula over the signature."""
    return _eval_ht(f, {}, _Worlds(pair, scope))


def eval_classical(f: folog.FoFormula, pair: HtPair, world: str, scope: Scope) -> bool:
    """Classical satisfaction at one world of a pair.

    The here-world's cli set functions take their pair-derived values, so
    this is not the same as collapsing the pair onto its here-world.
    """
    if world not in ("here", "there"):
        raise ValueError(f"world must be 'here' or 'there', got {world!r}")
    return _eval_classical(f, {}, _Worlds(pair, scope), world)


def _theory_holds_ht(theory: Iterable[folog.FoFormula], worlds: _Worlds) -> bool:
    return all(_eval_ht(f, {}, worlds) for f in theory)


# ---------------------------------------------------------------------------
# Atom universes of translated theories
# ---------------------------------------------------------------------------

def _collect_term_atoms(t: folog.FoTerm, env: dict, pool, acc: set):
    if isinstance(t, (folog.TupleTerm,)):
        for a in t.args:
            _collect_term_atoms(a, env, pool, acc)
    elif isinstance(t, folog.AggTerm):
        _collect_term_atoms(t.arg, env, pool, acc)
    elif isinstance(t, folog.SetTerm):
        args = tuple(_general_value(a, env) for a in t.args)
        sym = t.sym
        base = dict(zip(sym.globals, args))
        for ys in itertools.product(pool, repeat=len(sym.local_variables())):
            binding = base | dict(zip(sym.local_variables(), ys))
            for lit in sym.element.conditions:
                if isinstance(lit.inner, Atom):
                    acc.add(subst_atom_ground(lit.inner, binding))


def subst_atom_ground(a: Atom, binding: dict) -> Atom:
    return syntax.subst_atom(a, binding)


def _collect_formula_atoms(f: folog.FoFormula, env: dict, pool, acc: set, heads_only: bool):
    if isinstance(f, folog.Falsum):
        return
    if isinstance(f, folog.PredAtom):
        acc.add(Atom(f.predicate, tuple(_general_value(a, env) for a in f.args)))
        return
    if isinstance(f, (folog.Eq, folog.Cmp)):
        if not heads_only:
            _collect_term_atoms(f.lhs, env, pool, acc)
            _collect_term_atoms(f.rhs, env, pool, acc)
        return
    if isinstance(f, folog.Member):
        if not heads_only:
            _collect_term_atoms(f.item, env, pool, acc)
            _collect_term_atoms(f.container, env, pool, acc)
        return
    if isinstance(f, folog.StrongNeg):
        if not heads_only:
            _collect_formula_atoms(f.arg, env, pool, acc, heads_only)
        return
    if isinstance(f, folog.Implies):
        if heads_only:
            _collect_formula_atoms(f.rhs, env, pool, acc, heads_only)
        else:
            _collect_formula_atoms(f.lhs, env, pool, acc, heads_only)
            _collect_formula_atoms(f.rhs, env, pool, acc, heads_only)
        return
    if isinstance(f, (folog.And, folog.Or)):
        if heads_only and isinstance(f, folog.Or):
            return
        _collect_formula_atoms(f.lhs, env, pool, acc, heads_only)
        _collect_formula_atoms(f.rhs, env, pool, acc, heads_only)
        return
    if isinstance(f, (folog.Forall, folog.Exists)):
        if f.var.sort is not folog.Sort.GENERAL:
            raise ValueError("the oracle only instantiates general-sort quantifiers")
        for d in pool:
            _collect_formula_atoms(f.body, {**env, f.var: d}, pool, acc, heads_only)
        return
    raise TypeError(f"unknown formula {f!r}")


def theory_atoms(theory: Iterable[folog.FoFormula], scope: Scope) -> list[Atom]:
    """All ground atoms a theory can touch, element conditions included."""
    acc: set = set()
    pool = scope.pool()
    for f in theory:
        _collect_formula_atoms(f, {}, pool, acc, heads_only=False)
    return sorted(acc, key=atom_key)


def theory_head_atoms(theory: Iterable[folog.FoFormula], scope: Scope) -> list[Atom]:
    acc: set = set()
    pool = scope.pool()
    for f in theory:
        _collect_formula_atoms(f, {}, pool, acc, heads_only=True)
    return sorted(acc, key=atom_key)


# ---------------------------------------------------------------------------
# Stable models of theories and the bounded strong-equivalence check
# ---------------------------------------------------------------------------

def agg_stable_models(theory: Sequence[folog.FoFormula], scope: Scope) -> set[frozenset]:
    """Models with no strictly smaller here-world satisfying the theory.

    Smaller is strict inclusion on predicate atoms: for derived-value pairs
    that is exactly the stable-model ordering.
    """
    heads = theory_head_atoms(theory, scope)
    found: set[frozenset] = set()
    for candidate in _subsets_by_size(heads):
        there_worlds = _Worlds(HtPair(candidate, candidate), scope)
        if not _theory_holds_ht(theory, there_worlds):
            continue
        inside = sorted(candidate, key=atom_key)
        stable = True
        for k in range(len(inside)):
            for combo in itertools.combinations(inside, k):
                pair_worlds = _Worlds(HtPair(frozenset(combo), candidate), scope)
                if _theory_holds_ht(theory, pair_worlds):
                    stable = False
                    break
            if not stable:
                break
        if stable:
            found.add(candidate)
    return found


MODES = ("cli-cli", "dlv-dlv", "cli-dlv")


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent_within_scope: bool
    counterexample: HtPair | None
    atoms: tuple[Atom, ...]

    def __bool__(self) -> bool:
        return self.equivalent_within_scope


def check_strong_equivalence(left: Program, right: Program, scope: Scope, mode: str, *,
                             strict_item3: bool = False,
                             max_pairs: int = 2_000_000) -> EquivalenceResult:
    """Enumerate pairs over the shared signature's occurring atoms.

    Returns the enumeration-first pair satisfying exactly one of the two
    translated theories, or the equivalent-within-scope verdict.  A
    counterexample genuinely refutes strong equivalence; the equivalence
    verdict only covers the given scope.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    sem_left, sem_right = mode.split("-")
    sig = build_signature([left, right])
    th_left = tau_program(sem_left, left, sig, strict_item3=strict_item3)
    th_right = tau_program(sem_right, right, sig, strict_item3=strict_item3)
    atoms = theory_atoms(list(th_left) + list(th_right), scope)
    if 3 ** len(atoms) > max_pairs:
        raise ScopeError(
            f"{3 ** len(atoms)} here-and-there pairs over {len(atoms)} atoms, over the cap of {max_pairs}")
    for there in _subsets_by_size(atoms):
        worlds_tt = _Worlds(HtPair(there, there), scope)
        model_left = _theory_holds_ht(th_left, worlds_tt)
        model_right = _theory_holds_ht(th_right, worlds_tt)
        if not model_left and not model_right:
            continue  # persistence: no pair with this there-world satisfies either
        inside = sorted(there, key=atom_key)
        for k in range(len(inside) + 1):
            for combo in itertools.combinations(inside, k):
                pair = HtPair(frozenset(combo), there)
                worlds = _Worlds(pair, scope)
                sat_left = model_left and _theory_holds_ht(th_left, worlds)
                sat_right = model_right and _theory_holds_ht(th_right, worlds)
                if sat_left != sat_right:
                    return EquivalenceResult(False, pair, tuple(atoms))
    return EquivalenceResult(True, None, tuple(atoms))
