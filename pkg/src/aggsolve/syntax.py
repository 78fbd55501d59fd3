"""Source-language AST, parser, printer, ground-term order and aggregate ops.

The mini-language accepted by :func:`parse_program`:

    program    := { rule }
    rule       := ( atom | "#false" )? ":-" body "." | atom "."
    body       := literal { "," literal }
    literal    := { "not" } ( atom | comparison | aggatom )
    aggatom    := ("#count"|"#sum") "{" terms [ ":" [ conditions ] ] "}" relop term
    comparison := term relop term
    relop      := "=" | "!=" | "<" | ">" | "<=" | ">="
    term       := [ "-" ] ( integer | lowercase-id | UPPERCASE-ID | "#inf" | "#sup" )

`%` starts a comment running to end of line.  A rule with empty head
(`:- body.`) is a constraint.  Unary minus folds into integer literals;
over a variable it stands for the negated value of whatever numeral the
variable is instantiated with (`q(-X) :- p(X).`), and negating anything
that is not a numeral is an instantiation-time error.  Three or more
`not` in a row is a parse error.  There are no arity checks: the same
name at two arities is two distinct predicate symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

RELOPS = ("=", "!=", "<", ">", "<=", ">=")
OP_NAMES = ("count", "sum")


class ParseError(Exception):
    """Lexical or syntax error, carrying a 1-based source location."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Terms
# ---------------------------------------------------------------------------

class ProgramTerm:
    """Base class for program terms."""

    __slots__ = ()


@dataclass(frozen=True)
class Numeral(ProgramTerm):
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class SymbolicConstant(ProgramTerm):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Variable(ProgramTerm):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Inf(ProgramTerm):
    def __str__(self) -> str:
        return "#inf"


@dataclass(frozen=True)
class Sup(ProgramTerm):
    def __str__(self) -> str:
        return "#sup"


@dataclass(frozen=True)
class UMinus(ProgramTerm):
    """Negated term; only ever wraps a variable (numerals fold eagerly)."""

    arg: ProgramTerm

    def __str__(self) -> str:
        return f"-{self.arg}"


INF = Inf()
SUP = Sup()


# ---------------------------------------------------------------------------
# Atoms, literals, rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple[ProgramTerm, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class Comparison:
    lhs: ProgramTerm
    rel: str
    rhs: ProgramTerm

    def __str__(self) -> str:
        return f"{self.lhs} {self.rel} {self.rhs}"


@dataclass(frozen=True)
class BasicLiteral:
    negation: int  # number of leading `not`, 0..2
    inner: Union[Atom, Comparison]

    def __str__(self) -> str:
        return "not " * self.negation + str(self.inner)


@dataclass(frozen=True)
class AggregateElement:
    terms: tuple[ProgramTerm, ...]  # nonempty
    conditions: tuple[BasicLiteral, ...] = ()

    def __str__(self) -> str:
        ts = ",".join(map(str, self.terms))
        if not self.conditions:
            return ts
        return f"{ts} : {', '.join(map(str, self.conditions))}"


@dataclass(frozen=True)
class AggregateAtom:
    op: str  # "count" | "sum"
    element: AggregateElement
    rel: str
    guard: ProgramTerm

    def __str__(self) -> str:
        return f"#{self.op}{{{self.element}}} {self.rel} {self.guard}"


@dataclass(frozen=True)
class AggregateLiteral:
    negation: int
    inner: AggregateAtom

    def __str__(self) -> str:
        return "not " * self.negation + str(self.inner)


Literal = Union[BasicLiteral, AggregateLiteral]


@dataclass(frozen=True)
class Rule:
    head: Atom | None  # None encodes the #false head (a constraint)
    body: tuple[Literal, ...] = ()

    def __str__(self) -> str:
        body = ", ".join(map(str, self.body))
        if self.head is None:
            return f":- {body}."
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {body}."


@dataclass(frozen=True, eq=False)
class Program:
    """An ordered list of rules; equality and hashing are set-based."""

    rules: tuple[Rule, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return frozenset(self.rules) == frozenset(other.rules)

    def __hash__(self) -> int:
        return hash(frozenset(self.rules))

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    def union(self, other: "Program") -> "Program":
        return Program(self.rules + other.rules)


def print_program(program: Program) -> str:
    return str(program)


# ---------------------------------------------------------------------------
# Syntactic queries and substitution
# ---------------------------------------------------------------------------

def term_variables(t: ProgramTerm) -> set[str]:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, UMinus):
        return term_variables(t.arg)
    return set()


def is_ground(t: ProgramTerm) -> bool:
    return not term_variables(t)


def atom_variables(a: Union[Atom, Comparison]) -> set[str]:
    if isinstance(a, Atom):
        out: set[str] = set()
        for t in a.args:
            out |= term_variables(t)
        return out
    return term_variables(a.lhs) | term_variables(a.rhs)


def element_variables(e: AggregateElement) -> set[str]:
    out: set[str] = set()
    for t in e.terms:
        out |= term_variables(t)
    for lit in e.conditions:
        out |= atom_variables(lit.inner)
    return out


def subst_term(t: ProgramTerm, binding: Mapping[str, ProgramTerm]) -> ProgramTerm:
    if isinstance(t, Variable):
        return binding.get(t.name, t)
    if isinstance(t, UMinus):
        inner = subst_term(t.arg, binding)
        if isinstance(inner, Numeral):
            return Numeral(-inner.value)
        if isinstance(inner, (Variable, UMinus)):
            return UMinus(inner)
        raise ValueError(f"cannot negate non-numeral term {inner}")
    return t


def subst_atom(a: Atom, binding: Mapping[str, ProgramTerm]) -> Atom:
    return Atom(a.predicate, tuple(subst_term(t, binding) for t in a.args))


def subst_basic_literal(l: BasicLiteral, binding: Mapping[str, ProgramTerm]) -> BasicLiteral:
    if isinstance(l.inner, Atom):
        return BasicLiteral(l.negation, subst_atom(l.inner, binding))
    c = l.inner
    return BasicLiteral(l.negation, Comparison(subst_term(c.lhs, binding), c.rel, subst_term(c.rhs, binding)))


def subst_element(e: AggregateElement, binding: Mapping[str, ProgramTerm]) -> AggregateElement:
    return AggregateElement(
        tuple(subst_term(t, binding) for t in e.terms),
        tuple(subst_basic_literal(l, binding) for l in e.conditions),
    )


def subst_literal(l: Literal, binding: Mapping[str, ProgramTerm]) -> Literal:
    if isinstance(l, BasicLiteral):
        return subst_basic_literal(l, binding)
    a = l.inner
    agg = AggregateAtom(a.op, subst_element(a.element, binding), a.rel, subst_term(a.guard, binding))
    return AggregateLiteral(l.negation, agg)


def subst_rule(r: Rule, binding: Mapping[str, ProgramTerm]) -> Rule:
    head = None if r.head is None else subst_atom(r.head, binding)
    return Rule(head, tuple(subst_literal(l, binding) for l in r.body))


# ---------------------------------------------------------------------------
# Total order on ground terms
# ---------------------------------------------------------------------------

def ground_term_key(t: ProgramTerm):
    """Sort key realizing the total order: #inf < numerals < constants < #sup.

    Numerals compare as integers; symbolic constants lexicographically
    (the concrete order on constants is a free choice, fixed here).
    """
    if isinstance(t, Inf):
        return (0,)
    if isinstance(t, Numeral):
        return (1, t.value)
    if isinstance(t, SymbolicConstant):
        return (2, t.name)
    if isinstance(t, Sup):
        return (3,)
    raise ValueError(f"not a ground term: {t}")


def ground_term_cmp(a: ProgramTerm, b: ProgramTerm) -> int:
    ka, kb = ground_term_key(a), ground_term_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def relation_holds(rel: str, a: ProgramTerm, b: ProgramTerm) -> bool:
    c = ground_term_cmp(a, b)
    if rel == "=":
        return c == 0
    if rel == "!=":
        return c != 0
    if rel == "<":
        return c < 0
    if rel == ">":
        return c > 0
    if rel == "<=":
        return c <= 0
    if rel == ">=":
        return c >= 0
    raise ValueError(f"unknown comparison symbol {rel!r}")


# ---------------------------------------------------------------------------
# Aggregate operation functions
# ---------------------------------------------------------------------------

def tuple_weight(t: tuple[ProgramTerm, ...]) -> int:
    """Weight of a tuple: its first member's integer if a numeral, else 0."""
    if t and isinstance(t[0], Numeral):
        return t[0].value
    return 0


def op_count(delta: Iterable[tuple[ProgramTerm, ...]]) -> ProgramTerm:
    """Cardinality as a numeral.

    The infinite-set branch of the definition (value #sup) is unreachable:
    the artifact only ever materializes finite sets.
    """
    return Numeral(len(set(delta)))


def op_sum(delta: Iterable[tuple[ProgramTerm, ...]]) -> ProgramTerm:
    """Sum of tuple weights as a numeral; the empty set sums to 0.

    The branch for infinitely many non-zero weights (value 0) is likewise
    unreachable at finite scale.
    """
    return Numeral(sum(tuple_weight(t) for t in set(delta)))


# Extension hook: new operation names register their evaluation here.
OPERATIONS = {"count": op_count, "sum": op_sum}


# ---------------------------------------------------------------------------
# Lexer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


_PUNCT = (":-", "<=", ">=", "!=", "=", "<", ">", ".", ",", ":", "{", "}", "(", ")", "-")
_KEYWORDS = ("#count", "#sum", "#inf", "#sup", "#false")


def _tokenize(source: str) -> Iterator[_Token]:
    line, col, i, n = 1, 1, 0, len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == "#":
            for kw in _KEYWORDS:
                if source.startswith(kw, i):
                    yield _Token(kw, kw, line, col)
                    i += len(kw)
                    col += len(kw)
                    break
            else:
                raise ParseError(f"unknown directive starting with {source[i:i+8]!r}", line, col)
            continue
        if ch.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            yield _Token("int", source[i:j], line, col)
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            if word == "not":
                yield _Token("not", word, line, col)
            elif word[0].isupper():
                yield _Token("var", word, line, col)
            elif word[0].islower():
                yield _Token("id", word, line, col)
            else:
                raise ParseError(f"identifier may not start with {word[0]!r}", line, col)
            col += j - i
            i = j
            continue
        for p in _PUNCT:
            if source.startswith(p, i):
                yield _Token(p, p, line, col)
                i += len(p)
                col += len(p)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    yield _Token("eof", "", line, col)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self.tokens = list(_tokenize(source))
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        t = self.tok
        self.pos += 1
        return t

    def _expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {self.tok.text or 'end of input'!r}",
                             self.tok.line, self.tok.col)
        return self._advance()

    def _error(self, message: str):
        raise ParseError(message, self.tok.line, self.tok.col)

    def program(self) -> Program:
        rules = []
        while self.tok.kind != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))

    def rule(self) -> Rule:
        head: Atom | None
        if self.tok.kind == ":-":
            head = None
        elif self.tok.kind == "#false":
            self._advance()
            head = None
        else:
            head = self.atom()
            if self.tok.kind == ".":
                self._advance()
                return Rule(head, ())
        self._expect(":-")
        body = [self.literal()]
        while self.tok.kind == ",":
            self._advance()
            body.append(self.literal())
        self._expect(".")
        return Rule(head, tuple(body))

    def literal(self) -> Literal:
        negation = 0
        while self.tok.kind == "not":
            self._advance()
            negation += 1
        if negation > 2:
            self._error("more than two occurrences of 'not'")
        if self.tok.kind in ("#count", "#sum"):
            return AggregateLiteral(negation, self.aggregate_atom())
        return BasicLiteral(negation, self.atomic_formula())

    def aggregate_atom(self) -> AggregateAtom:
        op = self._advance().text[1:]  # strip '#'
        self._expect("{")
        terms = [self.term()]
        while self.tok.kind == ",":
            self._advance()
            terms.append(self.term())
        conditions: list[BasicLiteral] = []
        if self.tok.kind == ":":
            self._advance()
            if self.tok.kind != "}":
                lit = self.literal()
                if not isinstance(lit, BasicLiteral):
                    self._error("aggregate conditions must be basic literals")
                conditions.append(lit)
                while self.tok.kind == ",":
                    self._advance()
                    lit = self.literal()
                    if not isinstance(lit, BasicLiteral):
                        self._error("aggregate conditions must be basic literals")
                    conditions.append(lit)
        self._expect("}")
        rel = self.relop()
        guard = self.term()
        return AggregateAtom(op, AggregateElement(tuple(terms), tuple(conditions)), rel, guard)

    def atomic_formula(self) -> Union[Atom, Comparison]:
        # An id followed by '(' can only be an atom; otherwise parse a term
        # and decide between comparison and nullary atom by the next token.
        if self.tok.kind == "id" and self.tokens[self.pos + 1].kind == "(":
            return self.atom()
        t = self.term()
        if self.tok.kind in RELOPS:
            rel = self.relop()
            return Comparison(t, rel, self.term())
        if isinstance(t, SymbolicConstant):
            return Atom(t.name, ())
        self._error("expected a comparison operator")
        raise AssertionError  # unreachable

    def atom(self) -> Atom:
        name = self._expect("id").text
        args: list[ProgramTerm] = []
        if self.tok.kind == "(":
            self._advance()
            args.append(self.term())
            while self.tok.kind == ",":
                self._advance()
                args.append(self.term())
            self._expect(")")
        return Atom(name, tuple(args))

    def relop(self) -> str:
        if self.tok.kind not in RELOPS:
            self._error("expected a comparison operator")
        return self._advance().text

    def term(self) -> ProgramTerm:
        if self.tok.kind == "-":
            self._advance()
            inner = self.term()
            if isinstance(inner, Numeral):
                return Numeral(-inner.value)
            if isinstance(inner, (Variable, UMinus)):
                return UMinus(inner)
            self._error("only numerals and variables may be negated")
        t = self.tok
        if t.kind == "int":
            self._advance()
            return Numeral(int(t.text))
        if t.kind == "id":
            self._advance()
            return SymbolicConstant(t.text)
        if t.kind == "var":
            self._advance()
            return Variable(t.text)
        if t.kind == "#inf":
            self._advance()
            return INF
        if t.kind == "#sup":
            self._advance()
            return SUP
        self._error(f"expected a term, found {t.text or 'end of input'!r}")
        raise AssertionError  # unreachable


def parse_program(source: str) -> Program:
    """Parse program text; raises :class:`ParseError` with a location."""
    return _Parser(source).program()


def parse_rule(source: str) -> Rule:
    """Parse exactly one rule (convenience for tests and fixtures)."""
    program = parse_program(source)
    if len(program.rules) != 1:
        raise ValueError(f"expected exactly one rule, got {len(program.rules)}")
    return program.rules[0]
