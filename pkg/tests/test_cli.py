"""Command-line surface: commands, views, exit codes."""

import pytest

from catnum import cli, complexity, core, dot


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_decimal(capsys):
    code, out, _ = run(capsys, "eval", "divide(26,3)")
    assert code == 0 and out == "8\n"


def test_eval_views(capsys):
    assert run(capsys, "eval", "5", "--view", "parens")[1] == "(()()())\n"
    assert run(capsys, "eval", "1", "--view", "tree")[1] == "C E E\n"
    assert run(capsys, "eval", "1", "--view", "multiway")[1] == "[[]]\n"


def test_eval_placeholder_beyond_cap(capsys):
    code, out, _ = run(capsys, "eval", "exp2(exp2(100))", "--cap", "64")
    assert code == 0
    assert out.startswith("<bitsize ") and "catsize" in out


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "mersenne()")
    assert code == 0
    lines = dict(line.split(": ") for line in out.splitlines())
    assert lines["catsize"] == "25"
    assert lines["bitsize"] == "57885161"
    assert lines["parity"] == "odd"
    assert "value" not in lines


def test_analyze_zero(capsys):
    code, out, _ = run(capsys, "analyze", "0")
    lines = dict(line.split(": ") for line in out.splitlines())
    assert lines == {"catsize": "0", "bitsize": "0", "max_tdepth": "0",
                     "max_mdepth": "0", "parity": "even", "value": "0"}


def test_convert_round_trip(capsys):
    for k in range(0, 1000, 37):
        _, word, _ = run(capsys, "convert", str(k), "--to", "parens")
        _, back, _ = run(capsys, "convert", word.strip(), "--from", "parens")
        assert back.strip() == str(k)


def test_collatz_golden(capsys):
    code, out, _ = run(capsys, "collatz", "2014")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 33
    assert lines[0] == "2014" and lines[1] == "755" and lines[-1] == "0"


def test_collatz_step_limit(capsys):
    code, out, _ = run(capsys, "collatz", "tower(100)", "--max-steps", "5",
                       "--report", "catsize")
    assert code == 3
    assert out.splitlines() == ["100", "199", "297", "298", "300"]


def test_primes_table(capsys):
    code, out, _ = run(capsys, "primes")
    assert code == 0
    assert "mersenne" in out and "57885161" in out
    assert "proth" in out and "derived" in out
    assert len(out.splitlines()) == 9


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == 0
    assert out.split() == ["8", "9", "10", "11", "12", "13", "14", "16",
                           "30", "31", "63", "127", "255", "65535"]
    for k in range(9):
        _, out, _ = run(capsys, "enumerate", str(k), "--view", "parens")
        assert len(out.splitlines()) == complexity.catalan_number(k)


def test_enumerate_zero(capsys):
    code, out, _ = run(capsys, "enumerate", "0", "--view", "parens")
    assert code == 0 and out == "()\n"


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "11")
    assert code == 2 and "cap" in err


def test_dot_output(capsys, tmp_path):
    code, out, _ = run(capsys, "dot", "12345")
    assert code == 0
    assert out.startswith("digraph")
    root_edges = [line for line in out.splitlines() if "n0 ->" in line]
    assert len(root_edges) == 5  # cat_show(12345) has five children
    code2, out2, _ = run(capsys, "dot", "12345")
    assert out2 == out  # deterministic
    target = tmp_path / "g.dot"
    code, _, _ = run(capsys, "dot", "12345", "-o", str(target))
    assert code == 0 and target.read_text() == out


def test_dot_binary_and_zero(capsys):
    code, out, _ = run(capsys, "dot", "0")
    assert code == 0 and "->" not in out
    code, out, _ = run(capsys, "dot", "6", "--binary")
    labels = [line for line in out.splitlines() if "->" in line]
    assert all('label="0"' in e or 'label="1"' in e for e in labels)


def test_dot_merges_shared_subtrees():
    export = dot.dag_export(core.from_int(12345))
    labels = [label for _, label in export.nodes]
    assert len(labels) == len(set(labels))


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--count", "4096")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "inputs: 4096"
    average = float(lines[2].split(": ")[1])
    assert 1.5 < average < 3.0


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "eval", "add(1,")
    assert code == 1 and "parse error" in err


def test_exit_code_arithmetic_error(capsys):
    code, _, err = run(capsys, "eval", "sub(3,5)")
    assert code == 2 and "error" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["no-such-command"])
    assert info.value.code == 1
    capsys.readouterr()


def test_cap_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CATNUM_CAP", "8")
    code, out, _ = run(capsys, "eval", "1024")
    assert code == 0 and out.startswith("<bitsize 11, catsize")
