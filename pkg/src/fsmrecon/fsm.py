"""System models: finite state machines with a total transition function.

A model is ``M = (Q, events, delta)`` plus an optional set of known start
states.  Computations of a model are written as sequences of
:class:`Triple` values ``(source, event, target)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from collections.abc import Iterable, Mapping, Sequence
from typing import NamedTuple

from .errors import ModelError, UnknownSymbolError

IDENT_RE = re.compile(r"[A-Za-z0-9_.]+\Z")

# Name of the generic start state of derived automata.  Models may not use it.
START = "__g__"


def is_identifier(name) -> bool:
    return isinstance(name, str) and IDENT_RE.match(name) is not None


class Triple(NamedTuple):
    """One transition ``source -event-> target``."""

    source: str
    event: str
    target: str

    def __str__(self):
        return f"[{self.source},{self.event},{self.target}]"


def format_triples(triples: Iterable[Triple]) -> str:
    return "".join(str(t) for t in triples)


@dataclass(frozen=True)
class Fsm:
    """A deterministic system model.

    ``delta`` maps ``(state, event)`` pairs to the next state.  Constructing
    an ``Fsm`` does not check it; use :func:`validate` or :func:`check`.
    An empty ``initial`` set means the start state is unknown.
    """

    states: tuple[str, ...]
    events: tuple[str, ...]
    delta: Mapping[tuple[str, str], str]
    initial: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "events", tuple(self.events))
        object.__setattr__(self, "delta", MappingProxyType(dict(self.delta)))
        object.__setattr__(self, "initial", frozenset(self.initial))

    __hash__ = None  # type: ignore[assignment]

    def step(self, q: str, e: str) -> str:
        return step(self, q, e)

    def triples(self) -> list[Triple]:
        """All transitions in declaration order (states first, then events)."""
        return [
            Triple(q, e, self.delta[q, e])
            for q in self.states
            for e in self.events
            if (q, e) in self.delta
        ]


@dataclass(frozen=True)
class ValidationReport:
    defects: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.defects

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(self.defects)


def validate(model: Fsm) -> ValidationReport:
    defects = []
    for kind, names in (("state", model.states), ("event", model.events)):
        seen = set()
        for name in names:
            if not is_identifier(name):
                defects.append(f"malformed {kind} identifier {name!r}")
            elif name in seen:
                defects.append(f"duplicate {kind} {name}")
            seen.add(name)
    if START in model.states:
        defects.append(f"state name {START} is reserved")

    states = set(model.states)
    events = set(model.events)
    for (q, e), q2 in model.delta.items():
        if q not in states:
            defects.append(f"δ uses unknown state {q} at ({q},{e})")
        if e not in events:
            defects.append(f"δ uses unknown event {e} at ({q},{e})")
        if q2 not in states:
            defects.append(f"δ({q},{e}) = {q2} is not a state")
    for q in model.states:
        for e in model.events:
            if (q, e) not in model.delta:
                defects.append(f"δ undefined at ({q},{e})")
    for q in sorted(model.initial - states):
        defects.append(f"initial state {q} is not a state")
    return ValidationReport(tuple(defects))


def check(model: Fsm) -> Fsm:
    """Return ``model`` unchanged, or raise :class:`ModelError` listing defects."""
    report = validate(model)
    if not report.ok:
        raise ModelError(report.defects)
    return model


def step(model: Fsm, q: str, e: str) -> str:
    if q not in model.states:
        raise UnknownSymbolError(f"unknown state {q!r}", q)
    if e not in model.events:
        raise UnknownSymbolError(f"unknown event {e!r}", e)
    try:
        return model.delta[q, e]
    except KeyError:
        raise UnknownSymbolError(f"δ undefined at ({q},{e})", (q, e)) from None


def is_valid_computation(model: Fsm, seq: Sequence) -> bool:
    """True iff ``seq`` is a non-empty, δ-consistent, adjacent triple sequence.

    When the model has known start states the first triple must leave one
    of them.  Malformed input yields ``False``.
    """
    triples = []
    for t in seq:
        if not isinstance(t, (tuple, list)) or len(t) != 3:
            return False
        triples.append(Triple(*t))
    if not triples:
        return False
    if model.initial and triples[0].source not in model.initial:
        return False
    try:
        for i, t in enumerate(triples):
            if model.delta.get((t.source, t.event)) != t.target:
                return False
            if i and triples[i - 1].target != t.source:
                return False
    except TypeError:
        return False
    return True


class Alphabet(Sequence):
    """The ordered triple alphabet of a model, with its declared symbols.

    Behaves as a read-only sequence of :class:`Triple`; ``states`` and
    ``events`` record the declarations so that patterns can name symbols
    which happen to have no triple.
    """

    def __init__(self, triples, states=None, events=None):
        self._triples = tuple(Triple(*t) for t in triples)
        self._index = {t: i for i, t in enumerate(self._triples)}
        if states is None:
            states = dict.fromkeys(
                s for t in self._triples for s in (t.source, t.target)
            )
        if events is None:
            events = dict.fromkeys(t.event for t in self._triples)
        self.states = tuple(states)
        self.events = tuple(events)

    @classmethod
    def of(cls, model: Fsm) -> "Alphabet":
        return cls(model.triples(), model.states, model.events)

    def __getitem__(self, i):
        return self._triples[i]

    def __len__(self):
        return len(self._triples)

    def __iter__(self):
        return iter(self._triples)

    def __contains__(self, t):
        return t in self._index

    def index(self, t, *args):
        return self._index[t]

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return (self._triples, self.states, self.events) == (
            other._triples,
            other.states,
            other.events,
        )

    def __hash__(self):
        return hash(self._triples)

    def __repr__(self):
        return f"Alphabet({format_triples(self._triples)})"
