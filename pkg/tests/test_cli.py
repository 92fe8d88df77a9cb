import json

import pytest

from nerode.cli import main
from nerode.client import LanguageClient
from nerode.formats import read_dfa, write_dfa
from nerode.mod import ExitStatus, cmd_classes, cmd_equiv
from nerode.zoo import EXAMPLE1_REGEX, EXAMPLE2_REGEX, divisibility_dfa, figure1_dfa


@pytest.fixture(autouse=True)
def fresh_client(client):
    return client


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_compile_ex1_expression(capsys):
    status, out, _ = run_cli(capsys, "compile", "--alphabet", "abc", EXAMPLE1_REGEX)
    assert status == 0
    assert "states: 2\n" in out
    assert out.startswith("alphabet: abc\n")


def test_compile_empty_language(capsys):
    status, out, _ = run_cli(capsys, "compile", "\\0")
    assert status == 0
    assert "states: 1\n" in out
    assert "final:\n" in out


def test_compile_shorthand_to_files(capsys, tmp_path):
    out_path, dot_path = tmp_path / "l7.dfa", tmp_path / "l7.dot"
    status, out, _ = run_cli(capsys, "compile", "Ln:7", "--out", str(out_path), "--dot", str(dot_path))
    assert status == 0
    assert out == "states: 7\n"
    assert read_dfa(str(out_path)).state_count == 7
    assert dot_path.read_text().startswith('digraph "dfa" {')


def test_compile_accepts_source_flags(capsys, tmp_path):
    assert run_cli(capsys, "compile", "--expr", "Ln:3")[1].startswith("alphabet: ab\nstates: 3\n")
    path = tmp_path / "fig1.dfa"
    write_dfa(figure1_dfa(), str(path))
    status, out, _ = run_cli(capsys, "compile", "--dfa", str(path))
    assert status == 0
    assert "states: 2\n" in out


def test_compile_rejects_non_regular_name(capsys):
    status, _, err = run_cli(capsys, "compile", "pow2")
    assert status == ExitStatus.ERROR
    assert "not regular" in err


def test_compile_reports_syntax_error_position(capsys):
    status, out, err = run_cli(capsys, "compile", "(a")
    assert status == 2
    assert out == ""
    assert err.startswith("Error: Unbalanced parenthesis '(' at position 0")


@pytest.mark.parametrize("word, status, verdict", [
    ("acb", 0, "acb: member"),
    ("a", 1, "a: non-member"),
    ("", 0, "ε: member"),
])
def test_match_ex2(capsys, word, status, verdict):
    result, out, _ = run_cli(capsys, "match", "--alphabet", "abc", EXAMPLE2_REGEX, word)
    assert result == status
    assert out == verdict + "\n"


def test_match_shorthand_and_flag_forms(capsys, tmp_path):
    assert run_cli(capsys, "match", "Ln:3", "ab")[:2] == (0, "ab: member\n")
    assert run_cli(capsys, "match", "--expr", "Ln:3", "aab")[:2] == (1, "aab: non-member\n")
    path = tmp_path / "fig1.dfa"
    write_dfa(figure1_dfa(), str(path))
    assert run_cli(capsys, "match", "--dfa", str(path), "acb")[0] == 0


def test_match_word_outside_alphabet(capsys):
    status, _, err = run_cli(capsys, "match", "Ln:3", "abc")
    assert status == 2
    assert "not in alphabet" in err


def test_match_needs_a_word(capsys):
    with pytest.raises(SystemExit) as info:
        main(["match", "Ln:3"])
    assert info.value.code == 2


def test_unknown_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_min_of_dfa_file(capsys, tmp_path):
    path = tmp_path / "ex1.dfa"
    run_cli(capsys, "compile", "--alphabet", "abc", "(a+b+c)*.a.(a+b+c)* + a.a", "--out", str(path))
    status, out, _ = run_cli(capsys, "min", "--dfa", str(path))
    assert status == 0
    assert "states: 2\n" in out


def test_equiv(capsys):
    assert run_cli(capsys, "equiv", "a*", "\\e + a.a*")[:2] == (0, "equivalent\n")
    assert run_cli(capsys, "equiv", "a", "b")[:2] == (1, "not equivalent\nwitness: a\n")


def test_equiv_regex_against_dfa_file(capsys, tmp_path):
    path = tmp_path / "fig1.dfa"
    write_dfa(figure1_dfa(), str(path))
    status, out, _ = run_cli(capsys, "equiv", EXAMPLE2_REGEX, "--dfa", str(path))
    assert (status, out) == (0, "equivalent\n")


def test_equiv_accepts_expr_flags(capsys):
    assert run_cli(capsys, "equiv", "--expr", "a*", "--expr", "\\e + a.a*")[:2] == (0, "equivalent\n")
    assert run_cli(capsys, "equiv", "a", "--expr", "b")[0] == 1


def test_equiv_shorthand_lends_its_alphabet(capsys):
    status, out, _ = run_cli(capsys, "equiv", "ex1", EXAMPLE1_REGEX)
    assert (status, out) == (0, "equivalent\n")


def test_equiv_needs_two_operands():
    result = cmd_equiv(["a"])
    assert result.status == ExitStatus.ERROR
    assert "exactly two operands" in result.output


def test_classes_of_length_mod_five(capsys):
    status, out, _ = run_cli(capsys, "classes", "len-mod:5:3")
    assert status == 0
    assert out == "classes: 5\n  0: ε\n  1: a\n  2: aa\n  3: aaa\n  4: aaaa\n"


def test_classes_rejects_two_sources():
    assert cmd_classes(expr="Ln:2", dfa_path="x.dfa").status == ExitStatus.ERROR


def test_distinguish(capsys):
    assert run_cli(capsys, "distinguish", "Ln:3", "a", "aa")[:2] == (0, "extension: a\n")
    assert run_cli(capsys, "distinguish", "--expr", "Ln:3", "", "aaa")[:2] == (0, "equivalent\n")


def test_evidence(capsys):
    status, out, _ = run_cli(capsys, "evidence", "pow2", "--horizons", "16,32,64")
    assert status == 0
    assert out.endswith("verdict: growing\n")

    status, out, _ = run_cli(capsys, "evidence", "Ln:5", "--horizons", "8,16,32")
    assert out.endswith("verdict: stabilized(5)\n")

    status, out, _ = run_cli(capsys, "evidence", "Ln:5", "--horizons", "8,16", "--csv")
    assert out == "horizon,class_count\n8,5\n16,5\n"


def test_evidence_accepts_source_flags(capsys, tmp_path):
    path = tmp_path / "l5.dfa"
    write_dfa(divisibility_dfa(5), str(path))
    status, out, _ = run_cli(capsys, "evidence", "--dfa", str(path), "--horizons", "8,16,32")
    assert (status, out.endswith("verdict: stabilized(5)\n")) == (0, True)
    status, out, _ = run_cli(capsys, "evidence", "--expr", "Ln:5", "--horizons", "8,16", "--csv")
    assert out == "horizon,class_count\n8,5\n16,5\n"


def test_evidence_rejects_empty_horizons(capsys):
    status, _, err = run_cli(capsys, "evidence", "Ln:5", "--horizons", ",")
    assert status == 2
    assert "At least one horizon" in err


def test_evidence_unknown_name(capsys):
    status, _, err = run_cli(capsys, "evidence", "nope:1")
    assert status == 2
    assert err.startswith("Error:")


def test_primes_demo(capsys):
    status, out, _ = run_cli(capsys, "primes-demo", "3", "--horizons", "8,16,32")
    assert status == 0
    lines = out.splitlines()
    assert lines[1:4] == ["{2}      2", "{2,3}    6", "{2,3,5}  30"]
    assert "state counts strictly increase: yes" in out
    assert out.endswith("so there must be infinitely many prime numbers.\n")


@pytest.mark.parametrize("argv, fragment", [
    (["primes-demo", "0", "--horizons", "8,16,32"], "k must be at least 1"),
    (["primes-demo", "--max-k", "0", "--horizons", "8,16,32"], "max_k must be at least 1"),
    (["primes-demo", "2", "--horizons", ","], "At least one horizon"),
])
def test_primes_demo_rejects_zero_and_empty_arguments(capsys, argv, fragment):
    status, out, err = run_cli(capsys, *argv)
    assert status == 2
    assert out == ""
    assert fragment in err


def test_primes_demo_respects_bound(capsys):
    status, _, err = run_cli(capsys, "primes-demo", "5")
    assert status == 2
    assert "exceeds" in err


def test_dot_of_fig1(capsys):
    status, out, _ = run_cli(capsys, "dot", "fig1")
    assert status == 0
    assert 'start -> "S0";' in out
    assert '"S0" [shape=doublecircle];' in out


def test_config_shows_defaults(capsys):
    status, out, _ = run_cli(capsys, "config")
    assert status == 0
    assert out == "alphabet: ab\nhorizons: 16,32,64,128\nmax_k: 4\nworkers: 1\n"


def test_config_saves_settings(capsys, tmp_path):
    status, out, _ = run_cli(capsys, "config", "--max-k", "5", "--horizons", "8,16")
    path = tmp_path / "settings.json"
    assert status == 0
    assert out == f"saved: {path}\nalphabet: ab\nhorizons: 8,16\nmax_k: 5\nworkers: 1\n"
    assert json.loads(path.read_text()) == {"max_k": 5, "horizons": [8, 16]}
    assert LanguageClient.get_instance().settings.max_k == 5


def test_config_keeps_environment_out_of_the_file(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("NERODE_ALPHABET", "xyz")
    status, out, _ = run_cli(capsys, "config", "--workers", "2")
    assert status == 0
    assert "alphabet: xyz\n" in out
    assert json.loads((tmp_path / "settings.json").read_text()) == {"workers": 2}


def test_config_rejects_invalid_values(capsys, tmp_path):
    status, _, err = run_cli(capsys, "config", "--workers", "0")
    assert status == 2
    assert "must be positive" in err
    assert not (tmp_path / "settings.json").exists()
