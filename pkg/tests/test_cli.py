import json
import random
import re
import shutil

import pytest

from fsmrecon import format_statement, serialize_model
from fsmrecon.cli import main

from helpers import random_expr, random_fsm

from test_modelio import ASSETS, NODE_RE

MODEL = str(ASSETS / "printer-2slot.fsm")
BOB = str(ASSETS / "ws_bob.stmt")
ALICE = str(ASSETS / "ws_alice.stmt")
EVIDENCE = str(ASSETS / "printer.evidence")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fig1_files(tmp_path, fig1):
    model = tmp_path / "fig1.fsm"
    model.write_text(serialize_model(fig1))
    stmt = tmp_path / "starts_in_a.stmt"
    stmt.write_text("[A,1,B][?,?,?]*\n")
    return model, stmt


def test_check_alice(capsys):
    code, out, _ = run(capsys, "check", MODEL, ALICE, "--evidence", EVIDENCE)
    assert code == 1
    assert out.splitlines()[0] == "INFEASIBLE"
    assert "reduced: yes" in out


def test_check_bob(capsys):
    code, out, _ = run(capsys, "check", MODEL, BOB, "--evidence", EVIDENCE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "FEASIBLE"
    assert lines[1].startswith("witness: [E.E,Add_A,A.E]")
    assert "reduced: no" in lines


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", MODEL, BOB, "--evidence", EVIDENCE, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["feasible"] is True
    assert len(data["witness"]) == 6
    assert data["states_model"] == data["states_product"]
    assert data["reduced"] is False


def test_missing_statement_file(capsys, tmp_path):
    code, out, err = run(capsys, "check", MODEL, tmp_path / "nope.stmt")
    assert code == 2
    assert out == ""
    assert "cannot read" in err


def test_missing_argument_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", MODEL])
    assert info.value.code == 2


def test_syntax_error_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.stmt"
    bad.write_text("[A,?")
    code, _, err = run(capsys, "check", MODEL, bad)
    assert code == 2
    assert "1:5" in err


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "check", MODEL, BOB, "--max-states", "3")
    assert code == 3
    assert "budget of 3" in err


def test_witness_bob(capsys):
    code, out, _ = run(capsys, "witness", MODEL, BOB, "--evidence", EVIDENCE, "--limit", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    assert lines[0].count("[") == 6 and "Add_A" in lines[0]


def test_witness_alice(capsys):
    code, out, _ = run(capsys, "witness", MODEL, ALICE, "--evidence", EVIDENCE)
    assert (code, out) == (1, "")


def test_witness_figure1(capsys, fig1_files):
    model, stmt = fig1_files
    code, out, _ = run(capsys, "witness", model, stmt, "--limit", "2")
    assert code == 0
    assert out == "[A,1,B]\n[A,1,B][B,1,B]\n"
    code, out, _ = run(capsys, "witness", model, stmt, "--limit", "2", "--json")
    assert json.loads(out) == [[["A", "1", "B"]], [["A", "1", "B"], ["B", "1", "B"]]]


def test_witness_bad_limit(capsys, fig1_files):
    model, stmt = fig1_files
    assert run(capsys, "witness", model, stmt, "--limit", "0")[0] == 2


def test_graph_printer_dfa(capsys, tmp_path):
    out_path = tmp_path / "printer.dot"
    code, out, _ = run(capsys, "graph", MODEL, "-o", out_path)
    assert (code, out) == (0, "")
    assert len(NODE_RE.findall(out_path.read_text())) == 26


def test_graph_alice_product(capsys):
    code, out, _ = run(capsys, "graph", MODEL, "--statement", ALICE, "--evidence", EVIDENCE)
    assert code == 0
    nodes = [n for n, _ in NODE_RE.findall(out)]
    assert nodes and not any("Del_B.Del_B" in n for n in nodes)
    code, out, _ = run(capsys, "graph", MODEL, "--statement", ALICE, "--evidence", EVIDENCE, "--trim")
    assert len(NODE_RE.findall(out)) == 1


def test_graph_figure1(capsys, fig1_files):
    code, out, _ = run(capsys, "graph", fig1_files[0])
    assert code == 0
    assert [n for n, _ in NODE_RE.findall(out)] == ["__g__", "A", "B"]


def test_graph_write_error(capsys, tmp_path):
    code, _, err = run(capsys, "graph", MODEL, "-o", tmp_path / "missing" / "x.dot")
    assert code == 2
    assert "cannot write" in err


def test_validate(capsys, tmp_path):
    assert run(capsys, "validate", MODEL)[:2] == (0, "ok: 25 states, 3 events, 75 transitions\n")
    bad = tmp_path / "bad.fsm"
    bad.write_text("states: A B\nevents: 1\nA 1 -> B\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 2
    assert "δ undefined at (B,1)" in err


def test_printer_demo(capsys):
    code, out, _ = run(capsys, "printer-demo")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "Printer model: 2 slots, 25 states, 3 events"
    assert lines[1] == "Evidence: initial E.E, final Del_B.Del_B"
    assert re.fullmatch(r"Bob: FEASIBLE \(witness: .*Add_A.*\)", lines[2])
    assert lines[3] == "Alice: INFEASIBLE"


def test_printer_demo_three_slots(capsys):
    code, out, _ = run(capsys, "printer-demo", "--slots", "3")
    assert code == 0
    assert "125 states" in out
    assert "Alice: INFEASIBLE" in out


@pytest.mark.parametrize("slots", ["0", "1", "5"])
def test_printer_demo_slot_range(capsys, slots):
    assert run(capsys, "printer-demo", "--slots", slots)[0] == 2


def test_printer_demo_json(capsys):
    code, out, _ = run(capsys, "printer-demo", "--json")
    data = json.loads(out)
    assert data["Bob"]["feasible"] and not data["Alice"]["feasible"]


def test_assets_directory_override(capsys, tmp_path, monkeypatch):
    shutil.copytree(ASSETS, tmp_path / "assets")
    (tmp_path / "assets" / "ws_alice.stmt").write_text("([?,Add_A,?]|[?,Add_B,?]|[?,Take,?])*\n")
    monkeypatch.setenv("RECON_ASSETS", str(tmp_path / "assets"))
    code, out, _ = run(capsys, "printer-demo")
    assert "Alice: FEASIBLE" in out
    monkeypatch.setenv("RECON_ASSETS", str(tmp_path / "void"))
    assert run(capsys, "printer-demo")[0] == 2


def test_check_and_witness_agree(capsys, tmp_path):
    rng = random.Random(17)
    for i in range(25):
        model = random_fsm(rng)
        m = tmp_path / f"m{i}.fsm"
        s = tmp_path / f"s{i}.stmt"
        m.write_text(serialize_model(model))
        s.write_text(format_statement(random_expr(rng, model)))
        check_code = run(capsys, "check", m, s)[0]
        witness_code, out, _ = run(capsys, "witness", m, s)
        assert check_code == witness_code
        assert (check_code == 0) == bool(out.strip())
