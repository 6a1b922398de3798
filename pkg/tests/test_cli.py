import json

import pytest

from pymycielski.cli import run


def _run(capsys, command: str, *extra: str):
    code = run(command.split() + list(extra))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_mycielskian_path(capsys):
    code, out, _ = _run(capsys, "gen --family path --n 7 --mycielskian")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p 15 25"
    assert len(lines) == 26


def test_gen_five_cycle(capsys):
    code, out, _ = _run(capsys, "gen --family path --n 2 --mycielskian")
    assert code == 0
    assert out == "p 5 5\n1 2\n1 4\n2 3\n3 5\n4 5\n"


def test_gen_power_as_json(capsys):
    code, out, _ = _run(capsys, "gen --family path --n 4 --power 2 --format json")
    assert code == 0
    data = json.loads(out)
    assert (data["n"], data["m"]) == (4, 5)
    assert data["edges"][0] == [1, 2]


def test_gen_friendship_alias(capsys):
    _, fan, _ = _run(capsys, "gen --family fan --n 3")
    code, friendship, _ = _run(capsys, "gen --family friendship --n 3")
    assert code == 0
    assert friendship == fan


def test_gen_to_file(capsys, tmp_path):
    out_file = tmp_path / "k32.txt"
    code, out, _ = _run(
        capsys, "gen --family complete_bipartite --a 3 --b 2 --out", str(out_file)
    )
    assert code == 0
    assert out == ""
    assert out_file.read_text().startswith("p 5 6\n")


def test_gen_is_deterministic(capsys):
    command = "gen --family wheel --n 6 --mycielskian"
    assert _run(capsys, command)[1] == _run(capsys, command)[1]


@pytest.mark.parametrize(
    "arguments, expected",
    [
        ("--family cycle --n 3 --mode chi --quantity mean", "2/1 (2.000000)"),
        ("--family path --n 3 --mode chi --quantity mean", "12/7 (1.714286)"),
        ("--family path --n 2 --mode chi-plus --quantity variance", "14/25 (0.560000)"),
        ("--family path --n 3 --mode chi --quantity omega", "12/1 (12.000000)"),
        ("--family cycle --n 5 --mode chi --quantity distribution", "5 3 2 1"),
        ("--family friendship --n 3 --mode chi --quantity mean", "17/9 (1.888889)"),
    ],
)
def test_formula(capsys, arguments, expected):
    code, out, _ = _run(capsys, f"formula {arguments}")
    assert code == 0
    assert out == expected + "\n"


def test_formula_unsupported_instance(capsys):
    code, _, err = _run(
        capsys, "formula --family path --n 1 --mode chi --quantity mean"
    )
    assert code == 1
    assert err.startswith("error: no published closed form")


def test_color_family(capsys):
    code, out, _ = _run(capsys, "color --family path --n 3 --mycielskian --mode chi")
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "path"
    assert data["omega"] == 11
    assert data["mean"] == {"num": 11, "den": 7}
    assert data["distribution"] == [4, 2, 1]
    assert data["multiplicity"] == 1


def test_color_edge_list(capsys, tmp_path):
    graph = tmp_path / "c5.txt"
    graph.write_text("p 5 5\n1 2\n2 3\n3 4\n4 5\n1 5\n")
    code, out, _ = _run(capsys, "color --mode chi-plus --in", str(graph))
    assert code == 0
    data = json.loads(out)
    assert data["family"] is None
    assert data["omega"] == 11
    assert data["mode"] == "chi_plus"


def test_color_infeasible_palette(capsys):
    code, _, err = _run(
        capsys, "color --family path --n 3 --mycielskian --mode chi --k 2"
    )
    assert code == 2
    assert err.startswith("error: ")


def test_color_requires_a_graph(capsys):
    code, _, err = _run(capsys, "color --mode chi")
    assert code == 1
    assert "one of --in or --family" in err


def test_stats(capsys, tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text("p 5 5\n1 2\n1 4\n2 3\n3 5\n4 5\n")
    colouring = tmp_path / "col.txt"
    colouring.write_text("1 1\n2 2\n3 1\n4 2\n5 3\n")
    code, out, _ = _run(
        capsys, "stats", "--in", str(graph), "--coloring", str(colouring)
    )
    assert code == 0
    data = json.loads(out)
    assert data["mean"] == {"num": 9, "den": 5}
    assert data["variance"] == {"num": 14, "den": 25}


def test_stats_improper_colouring(capsys, tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text("p 2 1\n1 2\n")
    colouring = tmp_path / "col.txt"
    colouring.write_text("1 1\n2 1\n")
    code, _, err = _run(
        capsys, "stats", "--in", str(graph), "--coloring", str(colouring)
    )
    assert code == 1
    assert err.startswith("error: ")


def test_malformed_edge_list(capsys, tmp_path):
    graph = tmp_path / "bad.txt"
    graph.write_text("p 2 1\n1 1\n")
    code, _, err = _run(capsys, "color --mode chi --in", str(graph))
    assert code == 1
    assert err.startswith("error: line 2: ")


def test_missing_input_file(capsys, tmp_path):
    code, _, err = _run(capsys, "color --mode chi --in", str(tmp_path / "none.txt"))
    assert code == 1
    assert "cannot read" in err


def test_input_file_not_utf8(capsys, tmp_path):
    graph = tmp_path / "latin1.txt"
    graph.write_bytes(b"p 2 1\n1 \xff2\n")
    code, out, err = _run(capsys, "color --mode chi --in", str(graph))
    assert code == 1
    assert out == ""
    assert err.startswith("error: cannot read")
    assert "not UTF-8" in err
    assert len(err.splitlines()) == 1


def test_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing" / "c4.txt"
    code, out, err = _run(capsys, "gen --family cycle --n 4 --out", str(target))
    assert code == 1
    assert out == ""
    assert err.startswith("error: cannot write")
    assert not target.exists()


def test_verify_json(capsys):
    code, out, _ = _run(capsys, "verify --family path --n 2")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 8
    assert {r["status"] for r in records} == {"MATCH"}
    assert records[0]["paper_value"] == {"num": 9, "den": 5}


def test_verify_csv_over_range(capsys, tmp_path):
    report = tmp_path / "report.csv"
    code, _, _ = _run(
        capsys, "verify --family path --n-range 2..3 --report csv --out", str(report)
    )
    assert code == 0
    text = report.read_text()
    lines = text.splitlines()
    assert lines[0].startswith("family,n,a,b,mode,quantity,")
    assert len(lines) == 17
    assert "NOT_EXTREMAL" in text


def test_verify_complete_bipartite_by_size(capsys):
    code, out, _ = _run(capsys, "verify --family complete_bipartite --n 3")
    assert code == 0
    records = json.loads(out)
    assert {r["parameters"]["a"] for r in records} == {2}


def test_sweep(capsys):
    code, out, _ = _run(capsys, "sweep --family path --n-range 2..4 --mode chi")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[1].startswith("2,,,9/5,1.800000,")


@pytest.mark.parametrize(
    "command",
    [
        "gen --family hypercube --n 3",
        "gen --family path",
        "gen --family cycle --n 2",
        "gen --family path --n 3 --power 0",
        "sweep --family path --n-range 2-4 --mode chi",
        "verify --family path --n 2 --jobs 0",
        "verify --family path --n 2 --n-range 2..3",
        "frobnicate",
    ],
)
def test_usage_errors(capsys, command):
    code, out, err = _run(capsys, command)
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")


def test_help(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == 0
    assert "usage: pymycielski" in out
