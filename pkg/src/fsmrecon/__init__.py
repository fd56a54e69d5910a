"""Finite state machine analysis of witness statements.

Build the computation automaton of a system model, compile a witness
statement over transition triples, intersect them under the evidence and
decide whether the statement is feasible.
"""

from .analysis import (
    ProductAutomaton,
    ReductionReport,
    Verdict,
    analyze,
    intersect,
    is_empty,
    reduction_report,
    shortest_witness,
    shortest_witnesses,
    trim_product,
)
from .computation import (
    ComputationDfa,
    Evidence,
    accepts,
    build,
    restrict_final,
    restrict_initial,
    trim,
)
from .errors import (
    AnalysisError,
    ModelError,
    ModelSyntaxError,
    ReconError,
    StateBudgetExceeded,
    StatementSyntaxError,
    UnknownSymbolError,
)
from .fsm import START, Alphabet, Fsm, Triple, is_valid_computation, step, validate
from .modelio import parse_evidence, parse_model, serialize_evidence, serialize_model, to_dot
from .patterns import Alt, Atom, Concat, Observation, Star, format_statement
from .printer import build_printer, printer_delta
from .statement import StatementNfa, compile_statement, expand_pattern, nfa_accepts, parse_statement

__version__ = "0.1.0"
