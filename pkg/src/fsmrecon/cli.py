"""Command line front end.

Exit codes: 0 feasible (or success), 1 infeasible, 2 usage or input
error, 3 state budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analysis, modelio, printer
from .computation import Evidence, apply_evidence, build, trim
from .errors import ReconError, StateBudgetExceeded
from .fsm import format_triples
from .statement import parse_statement

EXIT_FEASIBLE = 0
EXIT_INFEASIBLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ASSETS_ENV = "RECON_ASSETS"
PRINTER_MODEL = "printer-2slot.fsm"
BOB_STATEMENT = "ws_bob.stmt"
ALICE_STATEMENT = "ws_alice.stmt"
PRINTER_EVIDENCE = "printer.evidence"


class UsageError(Exception):
    pass


def assets_dir() -> Path:
    env = os.environ.get(ASSETS_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "assets"


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(args):
    model = modelio.parse_model(_read(args.model))
    statement = parse_statement(_read(args.statement)) if getattr(args, "statement", None) else None
    evidence = None
    if getattr(args, "evidence", None):
        evidence = modelio.parse_evidence(_read(args.evidence), model)
    return model, statement, evidence


def _report_lines(verdict):
    r = verdict.report
    lines = ["FEASIBLE" if verdict.feasible else "INFEASIBLE"]
    if verdict.feasible:
        lines.append("witness: " + format_triples(verdict.witness))
    lines += [
        f"model states (trimmed): {r.states_model}",
        f"product states (trimmed): {r.states_product}",
        f"model states covered by product: {r.states_covered}",
        f"reduced: {'yes' if r.reduced else 'no'}",
    ]
    return lines


def cmd_check(args) -> int:
    model, statement, evidence = _load(args)
    verdict = analysis.analyze(model, statement, evidence, args.max_states)
    if args.json:
        print(json.dumps(verdict.to_json(), indent=2))
    else:
        print("\n".join(_report_lines(verdict)))
    return EXIT_FEASIBLE if verdict.feasible else EXIT_INFEASIBLE


def cmd_witness(args) -> int:
    if args.limit < 1:
        raise UsageError("--limit must be at least 1")
    model, statement, evidence = _load(args)
    run = analysis.prepare(model, statement, evidence, args.max_states)
    found = analysis.shortest_witnesses(run.product, args.limit, args.max_states)
    if args.json:
        print(json.dumps([[list(t) for t in w] for w in found], indent=2))
    else:
        for w in found:
            print(format_triples(w))
    return EXIT_FEASIBLE if found else EXIT_INFEASIBLE


def cmd_graph(args) -> int:
    model, statement, evidence = _load(args)
    if statement is None:
        dfa = apply_evidence(build(model), evidence)
        target = trim(dfa) if args.trim else dfa
    else:
        product = analysis.prepare(model, statement, evidence, args.max_states).product
        target = analysis.trim_product(product) if args.trim else product
    text = modelio.to_dot(target)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from exc
    return 0


def cmd_validate(args) -> int:
    model = modelio.parse_model(_read(args.model))
    print(
        f"ok: {len(model.states)} states, {len(model.events)} events, "
        f"{len(model.delta)} transitions"
    )
    return 0


def printer_case(slots: int = 2):
    """Model and evidence of the printer case, from assets when ``slots == 2``."""
    if not 2 <= slots <= printer.MAX_SLOTS:
        raise UsageError(f"--slots must be between 2 and {printer.MAX_SLOTS}")
    assets = assets_dir()
    if slots == 2:
        model = modelio.parse_model(_read(assets / PRINTER_MODEL))
        evidence = modelio.parse_evidence(_read(assets / PRINTER_EVIDENCE), model)
    else:
        model = printer.build_printer(slots)
        start, final = printer.case_evidence(slots)
        evidence = Evidence({start}, {final})
    return model, evidence


def cmd_printer_demo(args) -> int:
    model, evidence = printer_case(args.slots)
    assets = assets_dir()
    verdicts = {}
    for who, name in (("Bob", BOB_STATEMENT), ("Alice", ALICE_STATEMENT)):
        statement = parse_statement(_read(assets / name))
        verdicts[who] = analysis.analyze(model, statement, evidence, args.max_states)
    if args.json:
        print(json.dumps({who: v.to_json() for who, v in verdicts.items()}, indent=2))
        return 0
    order = list(model.states)
    print(f"Printer model: {args.slots} slots, {len(model.states)} states, {len(model.events)} events")
    print(
        "Evidence: initial "
        + " ".join(q for q in order if q in evidence.initial)
        + ", final "
        + " ".join(q for q in order if q in evidence.final)
    )
    for who, verdict in verdicts.items():
        print(f"{who}: {verdict}")
    return 0


def _parser():
    p = argparse.ArgumentParser(
        prog="fsmrecon",
        description="Test witness statements against finite state machine models.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def analysis_args(sp, statement_required=True):
        sp.add_argument("model", help="model file")
        if statement_required:
            sp.add_argument("statement", help="witness statement file")
        else:
            sp.add_argument("--statement", help="witness statement file; graphs the product")
        sp.add_argument("--evidence", help="evidence file (initial/final states)")
        sp.add_argument(
            "--max-states",
            type=int,
            default=analysis.DEFAULT_MAX_STATES,
            help="product state budget (default %(default)s)",
        )

    sp = sub.add_parser("check", help="decide whether a statement is feasible")
    analysis_args(sp)
    sp.add_argument("--json", action="store_true", help="print a JSON verdict")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("witness", help="print shortest computations matching a statement")
    analysis_args(sp)
    sp.add_argument("--limit", type=int, default=1, help="maximum number of witnesses")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("graph", help="export the computation DFA or product as DOT")
    analysis_args(sp, statement_required=False)
    sp.add_argument("--trim", action="store_true", help="drop useless states first")
    sp.add_argument("-o", "--output", help="output path (default stdout)")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("validate", help="check a model file")
    sp.add_argument("model")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("printer-demo", help="run the bundled printer case")
    sp.add_argument("--slots", type=int, default=2, help="directory entries to model")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--max-states", type=int, default=analysis.DEFAULT_MAX_STATES)
    sp.set_defaults(func=cmd_printer_demo)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except StateBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ReconError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
