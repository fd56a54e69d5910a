"""Witness statement language: parser and compiler to automata over triples.

Concrete syntax (whitespace-insensitive, ``#`` starts a comment)::

    stmt    := expr EOF
    expr    := term ( '|' term )*
    term    := factor factor*
    factor  := atom '*'?
    atom    := triple | '(' expr ')'
    triple  := '[' sym ',' sym ',' sym ']'
    sym     := IDENT | '?'

Star binds tightest, then concatenation, then alternation.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import StatementSyntaxError, UnknownSymbolError
from .fsm import Alphabet, Triple
from .lts import bounded_language, reachable
from .patterns import Alt, Atom, Concat, Expr, Observation, Star

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>\#[^\n]*)"
    r"|(?P<ident>[A-Za-z0-9_.]+)|(?P<punct>[\[\],|*()?])"
)

_NAMES = {
    "[": "'['",
    "]": "']'",
    ",": "','",
    "|": "'|'",
    "*": "'*'",
    "(": "'('",
    ")": "')'",
    "?": "'?'",
    "ident": "identifier",
    "eof": "end of input",
}


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text):
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise StatementSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident":
            yield _Token("ident", m.group(), line, pos - line_start + 1)
        elif kind == "punct":
            yield _Token(m.group(), m.group(), line, pos - line_start + 1)
        pos = m.end()
    yield _Token("eof", "", line, pos - line_start + 1)


class _Parser:
    def __init__(self, text):
        self.tokens = list(_tokenize(text))
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def fail(self, expected):
        tok = self.tok
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise StatementSyntaxError(
            f"unexpected {got}",
            tok.line,
            tok.column,
            [_NAMES[k] for k in expected],
        )

    def take(self, *kinds):
        if self.tok.kind not in kinds:
            self.fail(kinds)
        tok = self.tok
        self.pos += 1
        return tok

    def statement(self):
        expr = self.expr(closing="eof")
        self.take("eof")
        return expr

    def expr(self, closing):
        terms = [self.term(closing)]
        while self.tok.kind == "|":
            self.pos += 1
            terms.append(self.term(closing))
        return terms[0] if len(terms) == 1 else Alt(terms)

    def term(self, closing):
        factors = [self.factor(closing)]
        while self.tok.kind in ("[", "("):
            factors.append(self.factor(closing))
        if self.tok.kind not in ("|", closing):
            self.fail(("[", "(", "*", "|", closing))
        return factors[0] if len(factors) == 1 else Concat(factors)

    def factor(self, closing):
        tok = self.take("[", "(")
        if tok.kind == "(":
            node = self.expr(closing=")")
            self.take(")")
        else:
            syms = [self.sym()]
            for _ in range(2):
                self.take(",")
                syms.append(self.sym())
            self.take("]")
            node = Atom(Observation(*syms))
        if self.tok.kind == "*":
            self.pos += 1
            node = Star(node)
        return node

    def sym(self):
        tok = self.take("ident", "?")
        return None if tok.kind == "?" else tok.text


def parse_statement(text: str) -> Expr:
    """Parse statement source into a pattern tree.

    Raises :class:`StatementSyntaxError` with line, column and the set of
    tokens that would have been accepted.
    """
    return _Parser(text).statement()


def _as_alphabet(alphabet) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


def expand_pattern(p: Observation, alphabet) -> list[Triple]:
    """Triples of ``alphabet`` that agree with ``p`` at every named position."""
    alphabet = _as_alphabet(alphabet)
    for value, declared, what in (
        (p.source, alphabet.states, "state"),
        (p.event, alphabet.events, "event"),
        (p.target, alphabet.states, "state"),
    ):
        if value is not None and value not in declared:
            raise UnknownSymbolError(f"statement names undeclared {what} {value!r}", value)
    return [t for t in alphabet if p.matches(t)]


@dataclass(frozen=True)
class StatementNfa:
    """An ε-free nondeterministic automaton over the triple alphabet.

    States are ``0 .. n-1`` numbered breadth-first from ``start``.
    """

    states: tuple[int, ...]
    alphabet: Alphabet
    edges: Mapping[int, tuple[tuple[Triple, int], ...]]
    start: int
    accepting: frozenset[int]

    __hash__ = None  # type: ignore[assignment]

    @property
    def transitions(self) -> list[tuple[int, Triple, int]]:
        return [(s, t, n) for s in self.states for t, n in self.edges[s]]

    def moves(self, state):
        return self.edges.get(state, ())

    def accepts(self, seq) -> bool:
        return nfa_accepts(self, seq)

    def language(self, max_len: int) -> set[tuple[Triple, ...]]:
        return bounded_language(self.start, self.accepting, self.moves, max_len)


class _Builder:
    """Inductive ε-automaton construction; one fragment per tree node."""

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.count = 0
        self.eps = {}
        self.sym = {}

    def new(self):
        n = self.count
        self.count += 1
        self.eps[n] = []
        self.sym[n] = []
        return n

    def fragment(self, expr):
        if isinstance(expr, Atom):
            s, f = self.new(), self.new()
            for t in expand_pattern(expr.pattern, self.alphabet):
                self.sym[s].append((t, f))
            return s, f
        if isinstance(expr, Concat):
            parts = [self.fragment(c) for c in expr.children]
            for (_, f), (s, _) in zip(parts, parts[1:]):
                self.eps[f].append(s)
            return parts[0][0], parts[-1][1]
        if isinstance(expr, Alt):
            s, f = self.new(), self.new()
            for cs, cf in (self.fragment(c) for c in expr.children):
                self.eps[s].append(cs)
                self.eps[cf].append(f)
            return s, f
        if isinstance(expr, Star):
            s, f = self.new(), self.new()
            cs, cf = self.fragment(expr.child)
            self.eps[s] += [cs, f]
            self.eps[cf] += [cs, f]
            return s, f
        raise TypeError(f"not a statement node: {expr!r}")

    def closure(self, n):
        return reachable([n], lambda s: self.eps[s])


def _remove_epsilons(builder, start, final):
    edges, accepting = {}, set()
    for n in range(builder.count):
        out = []
        for r in builder.closure(n):
            out += builder.sym[r]
            if r == final:
                accepting.add(n)
        edges[n] = out
    live = list(reachable([start], lambda s: (m for _, m in edges[s])))
    return live, edges, accepting


def _quotient(states, edges, accepting, alphabet, start):
    """Merge bisimilar states; the language is unchanged."""
    block = {s: int(s in accepting) for s in states}
    n_blocks = len(set(block.values()))
    while True:
        ids = {}
        new_block = {}
        for s in sorted(states):
            sig = (block[s], frozenset((t, block[m]) for t, m in edges[s]))
            new_block[s] = ids.setdefault(sig, len(ids))
        block = new_block
        if len(ids) == n_blocks:
            break
        n_blocks = len(ids)

    rep = {}
    for s in sorted(states):
        rep.setdefault(block[s], s)

    def out(b):
        pairs = {(t, block[m]) for t, m in edges[rep[b]]}
        return sorted(pairs, key=lambda p: (alphabet.index(p[0]), p[1]))

    order = list(reachable([block[start]], lambda b: (m for _, m in out(b))))
    number = {b: i for i, b in enumerate(order)}
    new_edges = {
        number[b]: tuple((t, number[m]) for t, m in out(b)) for b in order
    }
    new_accepting = frozenset(number[block[s]] for s in states if s in accepting)
    return tuple(range(len(order))), MappingProxyType(new_edges), new_accepting


def compile_statement(expr: Expr, alphabet) -> StatementNfa:
    """Compile a statement tree to an ε-free automaton over ``alphabet``.

    Atoms become one edge per matching triple; concatenation, alternation
    and star are glued with ε-moves, which are then eliminated.  Bisimilar
    states are merged last, so ``([?,a,?]|[?,b,?])*`` comes out as a single
    looping state.
    """
    alphabet = _as_alphabet(alphabet)
    builder = _Builder(alphabet)
    start, final = builder.fragment(expr)
    live, edges, accepting = _remove_epsilons(builder, start, final)
    states, new_edges, new_accepting = _quotient(
        live, edges, accepting, alphabet, start
    )
    return StatementNfa(states, alphabet, new_edges, 0, new_accepting)


def nfa_accepts(nfa: StatementNfa, seq: Iterable) -> bool:
    current = {nfa.start}
    for t in seq:
        try:
            current = {m for s in current for u, m in nfa.edges[s] if u == t}
        except TypeError:
            return False
        if not current:
            return False
    return bool(current & nfa.accepting)
