"""Reading and writing model, evidence and DOT files.

Model files are line oriented; ``#`` starts a comment::

    states: A B
    events: 1
    initial: A          # optional
    A 1 -> B
    B 1 -> B

Evidence files hold optional ``initial:`` and ``final:`` lines.
"""

from __future__ import annotations

import re

from .analysis import ProductAutomaton
from .computation import ComputationDfa, Evidence
from .errors import ModelSyntaxError
from .fsm import Fsm, check, is_identifier
from .statement import StatementNfa

_WORD_RE = re.compile(r"\S+")


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        words = [(m.group(), m.start() + 1) for m in _WORD_RE.finditer(line)]
        if words:
            yield lineno, words


def _idents(lineno, words):
    names = []
    for word, col in words:
        if not is_identifier(word):
            raise ModelSyntaxError(f"malformed identifier {word!r}", lineno, col)
        if word in names:
            raise ModelSyntaxError(f"duplicate declaration of {word}", lineno, col)
        names.append(word)
    return names


def _directive(words):
    """Split ``key: a b c`` into ``key`` and the remaining words."""
    head, col = words[0]
    if ":" in head:
        key, _, tail = head.partition(":")
        rest = [(tail, col + len(key) + 1)] if tail else []
        return key, rest + words[1:]
    if len(words) > 1 and words[1][0].startswith(":"):
        tail = words[1][0][1:]
        rest = [(tail, words[1][1] + 1)] if tail else []
        return head, rest + words[2:]
    return None, words


def parse_model(text: str) -> Fsm:
    """Parse a model document and return the validated model.

    Syntax errors carry line and column.  A model that parses but is not
    total raises :class:`~fsmrecon.errors.ModelError` listing each gap.
    """
    sections = {}
    delta = {}
    for lineno, words in _lines(text):
        key, rest = _directive(words)
        if key is not None:
            if key not in ("states", "events", "initial"):
                raise ModelSyntaxError(f"unknown section {key!r}", lineno, words[0][1])
            if key in sections:
                raise ModelSyntaxError(f"section {key!r} given twice", lineno, words[0][1])
            if key == "initial" and "states" not in sections:
                raise ModelSyntaxError("initial states used before 'states:'", lineno, words[0][1])
            names = _idents(lineno, rest)
            if key == "initial":
                for (word, col) in rest:
                    if word not in sections["states"]:
                        raise ModelSyntaxError(f"undeclared state {word}", lineno, col)
            sections[key] = names
            continue

        if len(words) != 4 or words[2][0] != "->":
            raise ModelSyntaxError(
                "expected a transition '<state> <event> -> <state>'", lineno, words[0][1]
            )
        if "states" not in sections or "events" not in sections:
            raise ModelSyntaxError(
                "transition before 'states:' and 'events:' declarations", lineno, words[0][1]
            )
        (src, c1), (ev, c2), _, (dst, c3) = words
        for name, col, kind in ((src, c1, "states"), (ev, c2, "events"), (dst, c3, "states")):
            if name not in sections[kind]:
                raise ModelSyntaxError(f"undeclared {kind[:-1]} {name}", lineno, col)
        if (src, ev) in delta:
            raise ModelSyntaxError(
                f"second transition for ({src},{ev}); the model must be deterministic",
                lineno,
                c1,
            )
        delta[src, ev] = dst

    for key in ("states", "events"):
        if key not in sections:
            raise ModelSyntaxError(f"missing '{key}:' section")
    model = Fsm(
        sections["states"], sections["events"], delta, sections.get("initial", ())
    )
    return check(model)


def serialize_model(model: Fsm) -> str:
    lines = [
        "states: " + " ".join(model.states),
        "events: " + " ".join(model.events),
    ]
    if model.initial:
        lines.append("initial: " + " ".join(q for q in model.states if q in model.initial))
    for q in model.states:
        for e in model.events:
            lines.append(f"{q} {e} -> {model.delta[q, e]}")
    return "\n".join(lines) + "\n"


def parse_evidence(text: str, model: Fsm | None = None) -> Evidence:
    found = {}
    for lineno, words in _lines(text):
        key, rest = _directive(words)
        if key not in ("initial", "final"):
            raise ModelSyntaxError("expected 'initial:' or 'final:'", lineno, words[0][1])
        if key in found:
            raise ModelSyntaxError(f"'{key}:' given twice", lineno, words[0][1])
        names = _idents(lineno, rest)
        if model is not None:
            for word, col in rest:
                if word not in model.states:
                    raise ModelSyntaxError(f"undeclared state {word}", lineno, col)
        found[key] = names
    return Evidence(found.get("initial"), found.get("final"))


def serialize_evidence(evidence: Evidence, order=None) -> str:
    def names(values):
        if order is not None:
            return [q for q in order if q in values]
        return sorted(values)

    lines = []
    if evidence.initial is not None:
        lines.append("initial: " + " ".join(names(evidence.initial)))
    if evidence.final is not None:
        lines.append("final: " + " ".join(names(evidence.final)))
    return "\n".join(lines) + "\n"


def _quote(s):
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _graph_parts(automaton):
    if isinstance(automaton, ComputationDfa):
        return "computation", str, automaton.transitions()
    if isinstance(automaton, StatementNfa):
        return "statement", lambda n: f"n{n}", automaton.transitions
    if isinstance(automaton, ProductAutomaton):
        return "product", lambda p: f"({p[0]},n{p[1]})", automaton.transitions
    raise TypeError(f"cannot export {type(automaton).__name__} to DOT")


def to_dot(automaton) -> str:
    """Render an automaton as a Graphviz digraph.

    Accepting states are double circles, the start state is bold (a
    diamond when it does not accept) and edges carry triple labels.
    """
    kind, name, transitions = _graph_parts(automaton)
    out = [f"digraph {kind} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for s in automaton.states:
        attrs = []
        if s in automaton.accepting:
            attrs.append("shape=doublecircle")
        elif s == automaton.start:
            attrs.append("shape=diamond")
        if s == automaton.start:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        out.append(f"  {_quote(name(s))}{suffix};")
    for s, t, n in transitions:
        out.append(f"  {_quote(name(s))} -> {_quote(name(n))} [label={_quote(t)}];")
    out.append("}")
    return "\n".join(out) + "\n"
