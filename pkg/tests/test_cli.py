import json

import pytest

from quivercount.cli import ParseError, format_quiver, load_quiver, main, parse_quiver


def test_parse_quiver_examples():
    q = parse_quiver("vertices 2\nedge 1 2\n")
    assert q.n == 2 and q.arrows() == ((1, 1, 2),)
    q = parse_quiver("vertices 1\nedge 1 1\n")
    assert q.arrows() == ((1, 1, 1),)
    q = parse_quiver("vertices 3\nedge 1 2\nedge 2 3\nedge 3 1\n")
    assert q.n == 3 and len(q.arrows()) == 3
    q = parse_quiver("# a comment\n\nvertices 2\nedge 2 1  # reversed\n")
    assert q.arrows() == ((1, 2, 1),)


def test_parse_quiver_errors():
    with pytest.raises(ParseError, match="line 1"):
        parse_quiver("edge 1 2\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_quiver("vertices 2\nedge 1 5\n")
    with pytest.raises(ParseError, match="unknown directive"):
        parse_quiver("vertices 2\narc 1 2\n")
    with pytest.raises(ParseError, match="duplicate"):
        parse_quiver("vertices 2\nvertices 3\n")
    with pytest.raises(ParseError):
        parse_quiver("")


def test_round_trip():
    text = "vertices 3\nedge 1 2\nedge 2 3\nedge 3 1\n"
    q = parse_quiver(text)
    assert format_quiver(q) == text
    again = parse_quiver(format_quiver(q))
    assert again.arrows() == q.arrows() and again.n == q.n


def test_builtin_quivers():
    assert load_quiver("builtin:C3").n == 3
    assert load_quiver("builtin:A3").arrows() == ((1, 1, 2), (2, 2, 3))
    assert load_quiver("builtin:Sm:2").arrows() == ((1, 1, 1), (2, 1, 1))
    with pytest.raises(ParseError):
        load_quiver("builtin:D4")


def test_poly_verbs(capsys):
    assert main(["poly", "--quiver", "builtin:C3", "-d", "2"]) == 0
    assert capsys.readouterr().out.strip() == "q^2 + 6*q + 5"
    assert main(["rdpoly", "--quiver", "builtin:C3", "-d", "2"]) == 0
    assert capsys.readouterr().out.strip() == "q + 7"
    assert main(["poly", "--quiver", "builtin:C3", "-d", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"2": "1", "1": "6", "0": "5"}


def test_genfun_and_series_verbs(capsys):
    assert main(["genfun", "--quiver", "builtin:C2", "--which", "R"]) == 0
    assert capsys.readouterr().out.strip() == "(T^2 + T) / (1-T)^2*(1-q*T)"
    assert main(["series", "--quiver", "builtin:C2", "--which", "R",
                 "--order", "2", "--format", "json"]) == 0
    coeffs = json.loads(capsys.readouterr().out)
    assert coeffs == [{}, {"0": "1"}, {"1": "1", "0": "3"}]


def test_count_verbs(capsys):
    args = ["brute-m", "--quiver", "builtin:A2", "--ring", "kd(fq(2),2)", "--rank", "1,1"]
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == "3"
    args = ["brute-a", "--quiver", "builtin:A3", "--ring", "kd(fq(2,2),2)",
            "--rank", "1,1,1", "--format", "json"]
    assert main(args) == 0
    assert json.loads(capsys.readouterr().out) == {"count": "4"}
    args = ["brute-preproj-m", "--quiver", "builtin:A2", "--ring", "fq(2)", "--rank", "1,1"]
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == "3"
    args = ["fourier", "--quiver", "builtin:A2", "--ring", "fq(2)", "--rank", "1,1"]
    assert main(args) == 0
    assert capsys.readouterr().out.strip() == "3"


def test_qeulerian_and_counterexample(capsys):
    assert main(["qeulerian", "--m", "2"]) == 0
    assert capsys.readouterr().out.strip() == "q*T + 1"
    assert main(["counterexample", "--n", "2", "--q", "2", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"A": "15", "B": "18", "difference": "3"}


def test_exit_codes(capsys):
    # parse error -> 2
    assert main(["brute-m", "--quiver", "builtin:A2", "--ring", "fq(4)", "--rank", "1,1"]) == 2
    capsys.readouterr()
    assert main(["poly", "--quiver", "builtin:Q9", "-d", "1"]) == 2
    capsys.readouterr()
    assert main(["brute-m", "--quiver", "builtin:A2", "--ring", "kd(fq(2),2)",
                 "--rank", "1,2"]) == 0
    capsys.readouterr()
    # guard exceeded -> 3
    assert main(["brute-m", "--quiver", "builtin:A3", "--ring", "kd(fq(2),3)",
                 "--rank", "2,2,2", "--guard", "100"]) == 3
    capsys.readouterr()
    # usage error from argparse -> SystemExit(2)
    with pytest.raises(SystemExit) as err:
        main(["poly", "--quiver", "builtin:C3"])
    assert err.value.code == 2


def test_verify_verb(capsys):
    assert main(["verify", "fourier"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 4 and "FAIL" not in out
