"""Global variables, set symbols and the three-sorted target signature.

A variable is *global* in a rule when it occurs in a non-aggregate literal,
in the head, or in the guard of an aggregate literal; every other variable
is local to the aggregate elements it appears in.  Each aggregate literal
occurrence contributes a *set symbol*: its element paired with the
lexicographically ordered list of element variables that are global in the
host rule.  The signature collects predicate symbols (name + arity) and set
symbols, and assigns each set symbol a deterministic short name.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Sequence

from .syntax import (
    AggregateElement,
    AggregateLiteral,
    BasicLiteral,
    Program,
    Rule,
    atom_variables,
    element_variables,
    term_variables,
)


@dataclass(frozen=True)
class SetSymbol:
    """An aggregate element together with its host-rule global variables.

    Identity is structural on (element, globals); short names are assigned
    by the signature, not carried here.
    """

    element: AggregateElement
    globals: tuple[str, ...]  # lexicographically sorted, all occur in element

    def local_variables(self) -> tuple[str, ...]:
        return tuple(sorted(element_variables(self.element) - set(self.globals)))

    @property
    def tuple_arity(self) -> int:
        return len(self.element.terms)


def global_vars(rule: Rule) -> tuple[str, ...]:
    """Lexicographically sorted global variables of a rule."""
    out: set[str] = set()
    if rule.head is not None:
        out |= atom_variables(rule.head)
    for lit in rule.body:
        if isinstance(lit, BasicLiteral):
            out |= atom_variables(lit.inner)
        else:
            out |= term_variables(lit.inner.guard)
    return tuple(sorted(out))


def set_symbols_of(rule: Rule) -> set[SetSymbol]:
    """Set symbols occurring in a rule, duplicates merged structurally."""
    z = set(global_vars(rule))
    out: set[SetSymbol] = set()
    for lit in rule.body:
        if isinstance(lit, AggregateLiteral):
            element = lit.inner.element
            xs = tuple(sorted(element_variables(element) & z))
            out.add(SetSymbol(element, xs))
    return out


def _short_name(index: int, sym: SetSymbol) -> str:
    digest = hashlib.sha1(f"{sym.element}/{','.join(sym.globals)}".encode()).hexdigest()[:6]
    return f"s_{index}_{digest}"


@dataclass(frozen=True, eq=True)
class Signature:
    """The target signature over a family of programs.

    Carries the predicate symbols (name, arity) and set symbols; the derived
    function constants (tuple constructors, count/sum, membership, the
    comparison predicates and the per-set-symbol cli/dlv functions) follow
    from these and need no explicit representation.
    """

    predicates: frozenset[tuple[str, int]]
    set_symbols: tuple[SetSymbol, ...]  # deterministic enumeration order
    short_names: dict[SetSymbol, str] = field(compare=False, hash=False)

    def __hash__(self):  # dict field; hash on the stable parts
        return hash((self.predicates, self.set_symbols))

    def short_name(self, sym: SetSymbol) -> str:
        return self.short_names[sym]

    def sorted_predicates(self) -> list[tuple[str, int]]:
        return sorted(self.predicates)

    def tuple_arities(self) -> list[int]:
        return sorted({s.tuple_arity for s in self.set_symbols})


def _rule_predicates(rule: Rule) -> set[tuple[str, int]]:
    preds: set[tuple[str, int]] = set()

    def visit_basic(lit: BasicLiteral):
        inner = lit.inner
        if hasattr(inner, "predicate"):
            preds.add((inner.predicate, len(inner.args)))

    if rule.head is not None:
        preds.add((rule.head.predicate, len(rule.head.args)))
    for lit in rule.body:
        if isinstance(lit, BasicLiteral):
            visit_basic(lit)
        else:
            for cond in lit.inner.element.conditions:
                visit_basic(cond)
    return preds


def build_signature(programs: Sequence[Program]) -> Signature:
    """Signature over the union of the given programs.

    Set symbols are enumerated in rule order then body-literal order over
    the concatenated programs, so identical elements in two compared
    programs share one short name.
    """
    predicates: set[tuple[str, int]] = set()
    ordered: list[SetSymbol] = []
    seen: set[SetSymbol] = set()
    for program in programs:
        for rule in program.rules:
            predicates |= _rule_predicates(rule)
            z = set(global_vars(rule))
            for lit in rule.body:
                if isinstance(lit, AggregateLiteral):
                    element = lit.inner.element
                    xs = tuple(sorted(element_variables(element) & z))
                    sym = SetSymbol(element, xs)
                    if sym not in seen:
                        seen.add(sym)
                        ordered.append(sym)
    names = {sym: _short_name(i, sym) for i, sym in enumerate(ordered)}
    return Signature(frozenset(predicates), tuple(ordered), names)
