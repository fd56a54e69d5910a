"""Feasibility analysis: intersect a model with a witness statement.

A statement is feasible when some computation of the model, consistent
with the evidence, also matches the statement.  An infeasible verdict
shows the statement is impossible under the model.  A feasible verdict
only shows it is possible, never that it happened.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from .computation import ComputationDfa, Evidence, build, restrict_final, restrict_initial, trim
from .errors import AnalysisError, ReconError, StateBudgetExceeded
from .fsm import Alphabet, Fsm, Triple, format_triples
from .lts import bounded_language, coreachable
from .patterns import Expr
from .statement import StatementNfa, compile_statement, parse_statement

DEFAULT_MAX_STATES = 1_000_000


@dataclass(frozen=True)
class ProductAutomaton:
    """Reachable synchronous product of a computation DFA and a statement NFA.

    States are ``(dfa_state, nfa_state)`` pairs in breadth-first discovery
    order.
    """

    states: tuple[tuple, ...]
    alphabet: Alphabet
    edges: Mapping[tuple, tuple[tuple[Triple, tuple], ...]]
    start: tuple
    accepting: frozenset

    __hash__ = None  # type: ignore[assignment]

    def moves(self, state):
        return self.edges.get(state, ())

    @property
    def transitions(self):
        return [(s, t, n) for s in self.states for t, n in self.moves(s)]

    def accepts(self, seq) -> bool:
        current = {self.start}
        for t in seq:
            current = {n for s in current for u, n in self.moves(s) if u == t}
            if not current:
                return False
        return bool(current & self.accepting)

    def language(self, max_len: int):
        return bounded_language(self.start, self.accepting, self.moves, max_len)


def intersect(
    dfa: ComputationDfa, nfa: StatementNfa, max_states: int = DEFAULT_MAX_STATES
) -> ProductAutomaton:
    """Explore the product forward from ``(start, start)``.

    Raises :class:`StateBudgetExceeded` once more than ``max_states``
    product states have been discovered.
    """
    if tuple(dfa.alphabet) != tuple(nfa.alphabet):
        raise AnalysisError("intersect", "model and statement use different triple alphabets")
    by_symbol = {}
    for s in nfa.states:
        index = {}
        for t, m in nfa.edges[s]:
            index.setdefault(t, []).append(m)
        by_symbol[s] = index

    start = (dfa.start, nfa.start)
    seen = {start: None}
    edges = {}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        q, n = pair
        out = []
        index = by_symbol[n]
        for t, q2 in dfa.moves(q):
            for n2 in index.get(t, ()):
                nxt = (q2, n2)
                out.append((t, nxt))
                if nxt not in seen:
                    if len(seen) >= max_states:
                        raise StateBudgetExceeded(max_states)
                    seen[nxt] = None
                    queue.append(nxt)
        edges[pair] = tuple(out)
    states = tuple(seen)
    accepting = frozenset(
        (q, n) for q, n in states if q in dfa.accepting and n in nfa.accepting
    )
    return ProductAutomaton(states, dfa.alphabet, MappingProxyType(edges), start, accepting)


def is_empty(p: ProductAutomaton) -> bool:
    return not p.accepting


def trim_product(p: ProductAutomaton) -> ProductAutomaton:
    live = set(coreachable(p.states, p.transitions, p.accepting)) | {p.start}
    keep = [s for s in p.states if s in live]
    edges = {s: tuple((t, n) for t, n in p.moves(s) if n in live) for s in keep}
    return ProductAutomaton(
        tuple(keep),
        p.alphabet,
        MappingProxyType({s: edges[s] for s in keep}),
        p.start,
        p.accepting & set(keep),
    )


def shortest_witnesses(p: ProductAutomaton, limit: int = 1, max_nodes: int = DEFAULT_MAX_STATES):
    """Up to ``limit`` accepted strings, shortest first.

    Strings of equal length come out in triple-alphabet order.  The search
    runs over sets of product states, so a string reachable along several
    paths is reported once.
    """
    if limit < 1:
        return []
    live = set(coreachable(p.states, p.transitions, p.accepting))
    if p.start not in live:
        return []
    rank = {t: i for i, t in enumerate(p.alphabet)}
    first = frozenset([p.start])
    seen = {first}
    queue = deque([((), first)])
    found = []
    expanded = 0
    while queue:
        word, current = queue.popleft()
        if current & p.accepting:
            found.append(word)
            if len(found) == limit:
                break
        expanded += 1
        if expanded > max_nodes:
            raise StateBudgetExceeded(max_nodes)
        step = {}
        for s in current:
            for t, n in p.moves(s):
                if n in live:
                    step.setdefault(t, set()).add(n)
        for t in sorted(step, key=rank.__getitem__):
            nxt = frozenset(step[t])
            if limit == 1:
                # an earlier (shorter or smaller) word already reached this set
                if nxt in seen:
                    continue
                seen.add(nxt)
            queue.append((word + (t,), nxt))
    return found


def shortest_witness(p: ProductAutomaton):
    """The length-then-alphabet smallest accepted string, or ``None``."""
    found = shortest_witnesses(p, 1)
    return found[0] if found else None


@dataclass(frozen=True)
class ReductionReport:
    states_model: int
    states_product: int
    states_covered: int
    accepting_product: int
    reduced: bool


def reduction_report(model_dfa: ComputationDfa, p: ProductAutomaton) -> ReductionReport:
    """Compare the trimmed model with the trimmed product.

    ``states_covered`` counts model states that still occur in some live
    product state; the statement reduced the model when that is fewer than
    the model's own live states.
    """
    model_trim = trim(model_dfa)
    product_trim = trim_product(p)
    covered = {q for q, _ in product_trim.states}
    return ReductionReport(
        states_model=len(model_trim.states),
        states_product=len(product_trim.states),
        states_covered=len(covered),
        accepting_product=len(product_trim.accepting),
        reduced=len(covered) < len(model_trim.states),
    )


@dataclass(frozen=True)
class Verdict:
    feasible: bool
    witness: tuple[Triple, ...] | None
    report: ReductionReport
    stats: Mapping[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "witness": None if self.witness is None else [list(t) for t in self.witness],
            "states_model": self.report.states_model,
            "states_product": self.report.states_product,
            "reduced": self.report.reduced,
        }

    def __str__(self):
        if not self.feasible:
            return "INFEASIBLE"
        return f"FEASIBLE (witness: {format_triples(self.witness)})"


@dataclass(frozen=True)
class Pipeline:
    """Intermediate results of one analysis."""

    restricted_dfa: ComputationDfa
    model_dfa: ComputationDfa
    nfa: StatementNfa
    product: ProductAutomaton


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except AnalysisError:
        raise
    except ReconError as exc:
        raise AnalysisError(name, str(exc)) from exc


def prepare(model: Fsm, statement, evidence=None, max_states=DEFAULT_MAX_STATES) -> Pipeline:
    if isinstance(evidence, Mapping):
        evidence = Evidence(**evidence)
    dfa = _stage("build", build, model)
    if evidence is not None and evidence.initial is not None:
        dfa = _stage("restrict_initial", restrict_initial, dfa, evidence.initial)
    if evidence is not None and evidence.final is not None:
        dfa = _stage("restrict_final", restrict_final, dfa, evidence.final)
    restricted = dfa
    dfa = trim(dfa)
    if isinstance(statement, str):
        statement = _stage("parse", parse_statement, statement)
    nfa = _stage("compile", compile_statement, statement, dfa.alphabet)
    product = intersect(dfa, nfa, max_states)
    return Pipeline(restricted, dfa, nfa, product)


def analyze(
    model: Fsm,
    statement: Expr | str,
    evidence: Evidence | Mapping | None = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> Verdict:
    """Decide whether ``statement`` is feasible for ``model`` under ``evidence``.

    Errors from any stage are re-raised as :class:`AnalysisError` carrying
    the stage name.
    """
    run = prepare(model, statement, evidence, max_states)
    product = run.product
    witness = None
    if not is_empty(product):
        witness = tuple(_stage("witness", shortest_witness, product))
    report = reduction_report(run.model_dfa, product)
    trimmed = trim_product(product)
    stats = {
        "model_states": len(run.restricted_dfa.states),
        "model_transitions": len(run.restricted_dfa.transitions()),
        "trimmed_model_states": len(run.model_dfa.states),
        "trimmed_model_transitions": len(run.model_dfa.transitions()),
        "statement_states": len(run.nfa.states),
        "product_states": len(product.states),
        "product_transitions": len(product.transitions),
        "trimmed_product_states": len(trimmed.states),
        "trimmed_product_transitions": len(trimmed.transitions),
    }
    return Verdict(witness is not None, witness, report, MappingProxyType(stats))
