"""The krc command line interface."""

import json

from krcrystals.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--n", "3", "--s", "1", "--json")
    assert code == 0
    assert json.loads(out) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_apply_roundtrips_json(capsys):
    elem = {"dual": False, "power": 0, "alpha": [3, 2, 0]}
    code, out = run(capsys, "apply", "--op", "E", "--i", "0",
                    "--in", json.dumps(elem))
    assert code == 0
    assert json.loads(out) == {"dual": False, "power": 1, "alpha": [2, 2, 1]}
    # annihilation prints null
    code, out = run(capsys, "apply", "--op", "E", "--i", "1",
                    "--in", json.dumps({"dual": False, "power": 0,
                                        "alpha": [1, 0, 0]}))
    assert code == 0 and json.loads(out) is None


def test_btilde(capsys):
    code, out = run(capsys, "btilde", "--family", "a3", "--n", "3", "--i", "2",
                    "--in", json.dumps({"dual": False, "power": 0,
                                        "alpha": [1, 2, 0]}))
    assert code == 0
    terms = json.loads(out)
    assert len(terms) == 2
    assert all(t["coeff"] == "1/√2" for t in terms)


def test_rmatrix(capsys):
    code, out = run(capsys, "rmatrix", "--n", "3",
                    "--in1", json.dumps({"alpha": [1, 2, 2]}),
                    "--in2", json.dumps({"alpha": [2, 1, 0]}))
    assert code == 0
    first, second = json.loads(out)
    assert first == {"dual": False, "power": 3, "alpha": [0, 2, 1]}
    assert second == {"dual": False, "power": -3, "alpha": [3, 1, 1]}


def test_kmatrix_and_inverse(capsys):
    elem = {"dual": False, "power": 0, "alpha": [1, 2, 2]}
    code, out = run(capsys, "kmatrix", "--family", "a1", "--n", "3",
                    "--s", "5", "--in", json.dumps(elem))
    assert code == 0
    image = json.loads(out)
    assert image == {"dual": True, "power": 0, "alpha": [3, 2, 0]}
    code, out = run(capsys, "kmatrix", "--family", "a1", "--n", "3",
                    "--s", "5", "--inverse", "--in", json.dumps(image))
    assert code == 0 and json.loads(out) == elem


def test_kcase_and_kenergy(capsys):
    code, out = run(capsys, "kcase", "--n", "3", "--alpha", "[4,1,0]")
    assert code == 0 and json.loads(out)["case"] == 2
    code, out = run(capsys, "kenergy", "--family", "a1", "--n", "3",
                    "--alpha", "[3,2,0]")
    assert code == 0 and json.loads(out) == 2


def test_check_subcommand(capsys):
    code, out = run(capsys, "check", "reflection", "--family", "a1",
                    "--n", "3", "--s", "1", "--s2", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == [] and report["total"] == 9
    code, out = run(capsys, "check", "literal")
    assert code == 0 and "PASS" in out


def test_graph(capsys):
    code, out = run(capsys, "graph", "--family", "a1", "--n", "3", "--s", "1",
                    "--dot")
    assert code == 0 and out.startswith("graph")
    code, out = run(capsys, "graph", "--family", "a1", "--n", "3", "--s", "1")
    assert code == 0
    adj = json.loads(out)
    assert set(adj) == {"0,0,1", "0,1,0", "1,0,0"}


def test_usage_errors(capsys):
    assert main(["rmatrix", "--n", "3", "--kind", "zz",
                 "--in1", "{}", "--in2", "{}"]) == 2
    assert main(["apply", "--op", "E", "--i", "0", "--in", "not json"]) == 2
    assert main([]) == 2
