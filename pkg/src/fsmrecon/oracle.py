"""Brute-force ground truth for bounded languages.

Nothing here touches the automaton code paths: computations are enumerated
straight from the transition function, and statements are matched by
interpreting the pattern tree directly.  Tests compare both routes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .fsm import Fsm, Triple
from .patterns import Alt, Atom, Concat, Star

MAX_ENUMERATION_LEN = 12


@dataclass(frozen=True)
class BoundedLanguage:
    max_len: int
    strings: frozenset

    def __post_init__(self):
        for s in self.strings:
            if not 1 <= len(s) <= self.max_len:
                raise ValueError(f"string of length {len(s)} outside [1, {self.max_len}]")

    def __contains__(self, s):
        return tuple(s) in self.strings

    def __len__(self):
        return len(self.strings)

    def __iter__(self):
        return iter(self.strings)


def enumerate_computations(
    model: Fsm, max_len: int, initial=None, final=None
) -> BoundedLanguage:
    """All valid computations of ``model`` with length at most ``max_len``.

    ``initial`` defaults to the model's known start states (all states when
    unknown).  ``final``, if given, keeps only computations ending there.
    """
    if not 1 <= max_len <= MAX_ENUMERATION_LEN:
        raise ValueError(f"max_len must be in [1, {MAX_ENUMERATION_LEN}], got {max_len}")
    if initial is None:
        initial = model.initial
    starts = [q for q in model.states if not initial or q in initial]
    found = set()

    def extend(prefix, q):
        for e in model.events:
            t = Triple(q, e, model.delta[q, e])
            s = prefix + (t,)
            if final is None or t.target in final:
                found.add(s)
            if len(s) < max_len:
                extend(s, t.target)

    for q in starts:
        extend((), q)
    return BoundedLanguage(max_len, frozenset(found))


def match_statement_naive(expr, s) -> bool:
    """Does the triple sequence ``s`` match statement tree ``expr``?"""
    s = tuple(s)
    memo = {}

    def match(node, i, j):
        key = (id(node), -1, i, j)
        if key not in memo:
            memo[key] = _match(node, i, j)
        return memo[key]

    def _match(node, i, j):
        if isinstance(node, Atom):
            return j == i + 1 and node.pattern.matches(s[i])
        if isinstance(node, Alt):
            return any(match(c, i, j) for c in node.children)
        if isinstance(node, Concat):
            return concat(node, 0, i, j)
        if isinstance(node, Star):
            if i == j:
                return True
            # first non-empty chunk, then the rest under the same star
            return any(
                match(node.child, i, k) and match(node, k, j) for k in range(i + 1, j + 1)
            )
        raise TypeError(f"not a statement node: {node!r}")

    def concat(node, first, i, j):
        """children[first:] of a Concat node match s[i:j]"""
        key = (id(node), first, i, j)
        if key not in memo:
            rest = node.children[first:]
            if len(rest) == 1:
                memo[key] = match(rest[0], i, j)
            else:
                memo[key] = any(
                    match(rest[0], i, k) and concat(node, first + 1, k, j)
                    for k in range(i, j + 1)
                )
        return memo[key]

    return match(expr, 0, len(s))


def _as_predicate(acceptor):
    if callable(acceptor):
        return acceptor
    if hasattr(acceptor, "accepts"):
        return acceptor.accepts
    return lambda s: tuple(s) in acceptor


def all_strings(alphabet, max_len):
    """Every string over ``alphabet`` of length 0..max_len, length first."""
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def languages_equal_bounded(a, b, alphabet, max_len: int):
    """Compare two acceptors on every string up to ``max_len``.

    Acceptors are predicates, objects with ``accepts`` or containers of
    strings.  Returns ``None`` when they agree, otherwise the first
    disagreeing string in length-then-alphabet order.
    """
    pa, pb = _as_predicate(a), _as_predicate(b)
    for s in all_strings(tuple(alphabet), max_len):
        if bool(pa(s)) != bool(pb(s)):
            return s
    return None
