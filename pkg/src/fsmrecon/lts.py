"""Helpers shared by the automaton classes (graph search over labeled edges)."""

from __future__ import annotations

from collections import deque


def reachable(starts, successors):
    """States reachable from ``starts``; ``successors(s)`` yields next states."""
    seen = dict.fromkeys(starts)
    queue = deque(seen)
    while queue:
        s = queue.popleft()
        for n in successors(s):
            if n not in seen:
                seen[n] = None
                queue.append(n)
    return seen.keys()


def coreachable(states, edges, accepting):
    """States from which some state in ``accepting`` is reachable.

    ``edges`` is an iterable of ``(source, label, target)``.
    """
    preds = {s: [] for s in states}
    for s, _, n in edges:
        preds.setdefault(n, []).append(s)
    return reachable([s for s in states if s in accepting], lambda s: preds.get(s, ()))


def bounded_language(start, accepting, moves, max_len):
    """Every accepted string of length <= ``max_len``.

    Runs a subset simulation so nondeterministic automata work too;
    ``moves(state)`` yields ``(symbol, next_state)`` pairs.
    """
    out = set()
    frontier = {(): frozenset([start])}
    for _ in range(max_len + 1):
        nxt = {}
        for word, current in frontier.items():
            if current & accepting:
                out.add(word)
            if len(word) == max_len:
                continue
            for s in current:
                for sym, n in moves(s):
                    nxt.setdefault(word + (sym,), set()).add(n)
        frontier = {w: frozenset(v) for w, v in nxt.items()}
    return out
