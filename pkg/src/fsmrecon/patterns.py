"""Witness statement trees.

A statement is a regular pattern over observation triples.  Each position
of an observation is a symbol name or the wildcard ``?``.  The all-wildcard
observation ``[?,?,?]`` is the no-observation: it matches any single step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

WILDCARD = None  # wildcard positions are stored as None


class Observation(NamedTuple):
    source: Optional[str]
    event: Optional[str]
    target: Optional[str]

    @property
    def is_no_observation(self) -> bool:
        return self == (None, None, None)

    def matches(self, triple) -> bool:
        return all(p is None or p == x for p, x in zip(self, triple))

    def __str__(self):
        return "[" + ",".join("?" if p is None else p for p in self) + "]"


@dataclass(frozen=True)
class Atom:
    pattern: Observation


@dataclass(frozen=True)
class Concat:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Concat needs at least two children")


@dataclass(frozen=True)
class Alt:
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) < 2:
            raise ValueError("Alt needs at least two children")


@dataclass(frozen=True)
class Star:
    child: "Expr"


Expr = Union[Atom, Concat, Alt, Star]

_PRECEDENCE = {Alt: 0, Concat: 1, Star: 2, Atom: 3}


def atom(source=None, event=None, target=None) -> Atom:
    return Atom(Observation(source, event, target))


def format_statement(expr: Expr) -> str:
    """Canonical text for ``expr``; parsing it gives back an equal tree."""
    if isinstance(expr, Atom):
        return str(expr.pattern)
    if isinstance(expr, Star):
        inner = format_statement(expr.child)
        if not isinstance(expr.child, Atom):
            inner = f"({inner})"
        return inner + "*"
    # Same-kind children need parentheses too, otherwise they would flatten.
    level = _PRECEDENCE[type(expr)]
    parts = []
    for child in expr.children:
        text = format_statement(child)
        if _PRECEDENCE[type(child)] <= level:
            text = f"({text})"
        parts.append(text)
    return ("|" if isinstance(expr, Alt) else "").join(parts)


def observations(expr: Expr):
    """Yield every observation pattern in ``expr``, left to right."""
    if isinstance(expr, Atom):
        yield expr.pattern
    elif isinstance(expr, Star):
        yield from observations(expr.child)
    else:
        for child in expr.children:
            yield from observations(child)
