import ast
import inspect
import itertools
from types import MappingProxyType

import pytest
from hypothesis import given

import fsmrecon.oracle as oracle
from fsmrecon import Fsm, Triple, build, compile_statement, format_statement, parse_statement
from fsmrecon.computation import ComputationDfa
from fsmrecon.fsm import Alphabet
from fsmrecon.oracle import (
    BoundedLanguage,
    enumerate_computations,
    languages_equal_bounded,
    match_statement_naive,
)

from helpers import fsms

T = Triple
AB, BB = T("A", "1", "B"), T("B", "1", "B")


def test_figure1_computations_up_to_two(fig1):
    lang = enumerate_computations(fig1, 2)
    assert lang.strings == {(AB,), (BB,), (AB, BB), (BB, BB)}
    assert lang.max_len == 2


def test_no_transitions_no_computations():
    assert len(enumerate_computations(Fsm(["A"], [], {}), 3)) == 0
    assert len(enumerate_computations(Fsm([], ["1"], {}), 3)) == 0


def test_printer_cannot_end_in_evidence_within_five_steps(printer2):
    lang = enumerate_computations(printer2, 5, initial={"E.E"})
    assert len(lang) > 0
    assert not any(s[-1].target == "Del_B.Del_B" for s in lang)
    assert any(s[-1].target == "Del_B.Del_B" for s in enumerate_computations(printer2, 6))


@pytest.mark.parametrize("n", [0, 13, -1])
def test_enumeration_bounds(fig1, n):
    with pytest.raises(ValueError):
        enumerate_computations(fig1, n)


def test_bounded_language_rejects_out_of_range_members():
    with pytest.raises(ValueError):
        BoundedLanguage(1, frozenset({(AB, BB)}))
    with pytest.raises(ValueError):
        BoundedLanguage(1, frozenset({()}))


@given(fsms())
def test_enumeration_is_prefix_closed(model):
    lang = enumerate_computations(model, 4)
    for s in lang:
        for k in range(1, len(s)):
            assert s[:k] in lang


def test_match_naive_examples():
    alice = parse_statement("([?,Add_B,?]|[?,Take,?])*")
    assert not match_statement_naive(alice, [T("E.E", "Add_B", "B.E"), T("B.E", "Add_A", "B.A")])
    assert match_statement_naive(alice, [T("E.E", "Add_B", "B.E")])
    anything = parse_statement("[?,?,?]*")
    assert match_statement_naive(anything, [])
    assert match_statement_naive(anything, [AB, AB, T("x", "y", "z")])
    gap = parse_statement("[A,?,?][?,?,?][?,?,B]")
    assert match_statement_naive(gap, [AB, BB, BB])
    assert not match_statement_naive(gap, [AB, BB])


def test_match_naive_nested_stars():
    expr = parse_statement("(([A,?,?]*)*[B,?,?])*")
    a, b = T("A", "x", "A"), T("B", "x", "B")
    assert match_statement_naive(expr, [a, a, b, b, a, b])
    assert not match_statement_naive(expr, [a, b, a])


def test_dfa_matches_enumeration(fig1):
    dfa = build(fig1)
    assert languages_equal_bounded(dfa, enumerate_computations(fig1, 4), dfa.alphabet, 4) is None


def test_compiled_statement_matches_naive(fig2):
    alphabet = Alphabet.of(fig2)
    for text in ["[A,?,?]([?,2,?]|[B,?,?])*[?,?,C]", "([?,1,?][?,2,?])*|[C,?,C]*"]:
        expr = parse_statement(text)
        nfa = compile_statement(expr, alphabet)
        result = languages_equal_bounded(
            nfa, lambda s, e=expr: match_statement_naive(e, s), alphabet, 4
        )
        assert result is None, format_statement(expr)


def test_mutated_dfa_yields_counterexample(fig2):
    dfa = build(fig2)
    delta1 = {s: dict(m) for s, m in dfa.delta1.items()}
    del delta1["B"][T("B", "2", "C")]
    broken = ComputationDfa(dfa.states, dfa.alphabet, MappingProxyType(delta1), dfa.accepting)
    cex = languages_equal_bounded(broken, enumerate_computations(fig2, 3), dfa.alphabet, 3)
    assert cex == (T("A", "1", "B"), T("B", "2", "C"))


def test_counterexample_order_is_length_first():
    alphabet = [AB, BB]
    assert languages_equal_bounded(lambda s: len(s) == 2, lambda s: False, alphabet, 3) == (AB, AB)
    assert languages_equal_bounded(lambda s: True, lambda s: s != (), alphabet, 3) == ()


def test_oracle_is_independent():
    tree = ast.parse(inspect.getsource(oracle))
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module)
        elif isinstance(node, ast.Import):
            imported.update(a.name for a in node.names)
    internal = {m for m in imported if m and not m.startswith(("__future__", "itertools", "dataclasses"))}
    assert internal <= {"fsm", "patterns"}
