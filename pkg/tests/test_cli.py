import json
import subprocess
import sys

import pytest

from pointfree.axioms import random_region
from pointfree.cli import main
from pointfree.models import parse_model
from pointfree.syntax import ParseError, parse_expression, parse_with_info


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_parse_print_identity_on_random_regions():
    models = [parse_model(m) for m in ("real", "interval", "real:2", "torus:a,b", "cube:3")]
    for s in range(1000):
        m = models[s % len(models)]
        a = random_region(s, 3, m)
        text = str(a)
        back = parse_expression(text)
        assert back == a or back.equals(a), text
        assert str(back) == text


def test_grammar_precedence_and_errors():
    assert parse_expression("cone(1) + cone(2) * cone(3)").equals(parse_expression("cone(1)"))
    assert parse_expression("!cone(1) * cone(1)").is_zero()
    assert parse_expression(" cone( 1 , 5 )+q(1;2) ").equals(parse_expression("cone(1,5) + q(1;2)"))
    assert str(parse_expression("!phi(1,{1})")) == "phi(1,{..-1,2..})"
    with pytest.raises(ParseError) as exc:
        parse_expression("phi(2,{0})")
    assert exc.value.offset == 7
    with pytest.raises(ParseError) as exc:
        parse_expression("cone(1) +")
    assert exc.value.offset == 9
    with pytest.raises(ParseError):
        parse_expression("q(;2)")
    assert parse_with_info("up(1) + cone(2)").rays
    assert not parse_with_info("cone(2)").rays


def test_query_examples(capsys):
    assert run(capsys, "contact", "real", "cone(1)", "cone(2)")[:2] == (0, "true")
    assert run(capsys, "contact", "real", "cone(1)", "cone(3)")[:2] == (0, "false")
    assert run(capsys, "closure", "interval", "up(1)")[:2] == (0, "[3/4, 1]")
    code, out, _ = run(capsys, "contact", "real", "cone(1)", "cone(2)", "--witness")
    assert out.splitlines()[1] == "point: 3/4"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "norm", "phi(2,{0})")
    assert code == 2 and "offset 7" in err
    assert run(capsys, "contact", "real", "up(1)", "cone(1)")[0] == 2
    assert run(capsys, "contact", "interval", "up(1)", "cone(1)")[0] == 0
    assert run(capsys, "contact", "plane", "cone(1)", "cone(1)")[0] == 2
    assert run(capsys, "contact", "real")[0] == 2
    assert run(capsys, "separated", "real", "phi(1,{2..})", "cone(1)")[0] == 2
    assert run(capsys, "axioms", "real", "--family", "NCA", "--trials", "5")[0] == 2


def test_axioms_command(capsys, monkeypatch):
    monkeypatch.setenv("POINTFREE_SEED", "42")
    code, out, _ = run(capsys, "axioms", "interval", "--family", "CA", "--trials", "100", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["axiom"] for r in rows] == ["C1", "C2", "C3", "C4"]
    assert all(r["seed"] == 42 and r["failures"] == [] for r in rows)
    code, out, _ = run(capsys, "axioms", "interval", "--family", "CA", "--trials", "100", "--seed", "7")
    assert code == 0 and out.splitlines()[-1] == "pass"


def test_axiom_failures_exit_one(capsys, monkeypatch):
    from pointfree import axioms

    monkeypatch.setitem(axioms.AXIOMS, "C1", lambda rng, model: {"a": "1", "b": "1", "detail": "forced"})
    code, out, _ = run(capsys, "axioms", "real", "--family", "CA", "--trials", "3")
    assert code == 1 and out.splitlines()[-1] == "FAIL"


def test_render_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "real", "cone(1)")
    assert code == 0 and out.startswith("<?xml") and 'x="0.5" y="0.02" width="0.25"' in out
    code, out, _ = run(capsys, "render", "real", "q(1;1)", "--format", "ascii")
    assert code == 0 and "#" in out
    target = tmp_path / "square.svg"
    code, _, _ = run(capsys, "render", "real:2", "{x: cone(1), y: cone(1)}", "-o", str(target))
    assert code == 0 and 'width="0.25" height="0.25"' in target.read_text()
    assert run(capsys, "render", "real:3", "{x: cone(1)}")[0] == 2


def test_render_is_deterministic(capsys):
    a = run(capsys, "render", "real", "phi(1,{2..})*phi(2,{1})")[1]
    b = run(capsys, "render", "real", "phi(1,{2..})*phi(2,{1})")[1]
    assert a == b and 'class="anchor" cx="1"' in a


def test_sweep_command(capsys):
    code, out, _ = run(capsys, "sweep", "presentation", "--depth", "2", "--entry", "2", "--r", "2")
    assert code == 0 and out.endswith("pass")


def test_corpus_runner_flags_mismatches(capsys, tmp_path):
    f = tmp_path / "c.jsonl"
    f.write_text(
        json.dumps({"model": "real", "command": "contact", "a": "cone(1)", "b": "cone(2)", "expect": "true"})
        + "\n"
        + json.dumps({"model": "real", "command": "contact", "a": "cone(1)", "b": "cone(2)", "expect": "false"})
        + "\n"
    )
    code, out, _ = run(capsys, "corpus", str(f))
    assert code == 1 and "1/2 corpus entries met" in out


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pointfree.cli", "closure", "real", "q(1;1)"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "[7/16, 9/16]"
