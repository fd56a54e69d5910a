"""The computation automaton of a system model.

For a model ``M`` the automaton reads strings of transition triples and
accepts exactly the computations of ``M``.  Its states are the model states
plus a fresh start state ``__g__``; reading triple ``(q, e, q2)`` moves from
``q`` (or from ``__g__``) to ``q2``.  A run is rejected as soon as the
partial transition function is undefined, so no dead state exists.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import UnknownSymbolError
from .fsm import START, Alphabet, Fsm, Triple, check
from .lts import bounded_language, coreachable, reachable


@dataclass(frozen=True)
class ComputationDfa:
    states: tuple[str, ...]
    alphabet: Alphabet
    delta1: Mapping[str, Mapping[Triple, str]]
    accepting: frozenset[str]
    start: str = START

    __hash__ = None  # type: ignore[assignment]

    @property
    def model_states(self) -> tuple[str, ...]:
        return tuple(s for s in self.states if s != self.start)

    def moves(self, state):
        return self.delta1.get(state, {}).items()

    def transitions(self) -> list[tuple[str, Triple, str]]:
        return [(s, t, n) for s in self.states for t, n in self.moves(s)]

    def accepts(self, seq) -> bool:
        return accepts(self, seq)

    def language(self, max_len: int) -> set[tuple[Triple, ...]]:
        return bounded_language(self.start, self.accepting, self.moves, max_len)


def _freeze(delta1):
    return MappingProxyType({s: MappingProxyType(dict(m)) for s, m in delta1.items()})


def build(model: Fsm) -> ComputationDfa:
    """Derive the computation automaton of a (validated) model.

    Every triple ``t`` of the model labels one edge out of its source state
    and one edge out of the start state, both to ``t.target``.  All model
    states accept.  Known start states of the model restrict the start
    edges right away.
    """
    check(model)
    alphabet = Alphabet.of(model)
    delta1 = {START: {}}
    for q in model.states:
        delta1[q] = {}
    for t in alphabet:
        delta1[START][t] = t.target
        delta1[t.source][t] = t.target
    dfa = ComputationDfa(
        states=(START, *model.states),
        alphabet=alphabet,
        delta1=_freeze(delta1),
        accepting=frozenset(model.states),
    )
    if model.initial:
        dfa = restrict_initial(dfa, model.initial)
    return dfa


def accepts(dfa: ComputationDfa, seq: Iterable) -> bool:
    state = dfa.start
    for t in seq:
        try:
            state = dfa.delta1[state][t]
        except (KeyError, TypeError):
            return False
    return state in dfa.accepting


def _check_states(dfa, names, what):
    names = frozenset(names)
    unknown = sorted(names - set(dfa.model_states))
    if unknown:
        raise UnknownSymbolError(
            f"{what} names unknown state(s): {', '.join(map(str, unknown))}", unknown[0]
        )
    return names


def restrict_initial(dfa: ComputationDfa, allowed: Iterable[str]) -> ComputationDfa:
    """Keep only the start edges whose triple leaves a state in ``allowed``."""
    allowed = _check_states(dfa, allowed, "initial restriction")
    delta1 = dict(dfa.delta1)
    delta1[dfa.start] = {
        t: n for t, n in dfa.delta1[dfa.start].items() if t.source in allowed
    }
    return ComputationDfa(dfa.states, dfa.alphabet, _freeze(delta1), dfa.accepting, dfa.start)


def restrict_final(dfa: ComputationDfa, evidence: Iterable[str]) -> ComputationDfa:
    """Replace the accepting set with the observed final states."""
    evidence = _check_states(dfa, evidence, "final restriction")
    return ComputationDfa(dfa.states, dfa.alphabet, dfa.delta1, evidence, dfa.start)


def trim(dfa: ComputationDfa) -> ComputationDfa:
    """Drop states that are unreachable or cannot reach an accepting state.

    The start state always survives, so an empty language trims to the
    start state alone.
    """
    fwd = reachable([dfa.start], lambda s: (n for _, n in dfa.moves(s)))
    fwd_set = set(fwd)
    edges = [e for e in dfa.transitions() if e[0] in fwd_set]
    bwd = set(coreachable(list(fwd), edges, dfa.accepting))
    keep = {s for s in fwd_set if s in bwd} | {dfa.start}
    delta1 = {
        s: {t: n for t, n in dfa.moves(s) if n in keep}
        for s in dfa.states
        if s in keep
    }
    return ComputationDfa(
        tuple(s for s in dfa.states if s in keep),
        dfa.alphabet,
        _freeze(delta1),
        dfa.accepting & keep,
        dfa.start,
    )


@dataclass(frozen=True)
class Evidence:
    """Observed start and/or final states; ``None`` means not observed."""

    initial: frozenset[str] | None = None
    final: frozenset[str] | None = None

    def __post_init__(self):
        for name in ("initial", "final"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, frozenset(value))


def apply_evidence(dfa: ComputationDfa, evidence: Evidence | None) -> ComputationDfa:
    if evidence is not None and evidence.initial is not None:
        dfa = restrict_initial(dfa, evidence.initial)
    if evidence is not None and evidence.final is not None:
        dfa = restrict_final(dfa, evidence.final)
    return dfa
