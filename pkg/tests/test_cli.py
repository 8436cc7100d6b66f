import json
import subprocess
import sys

import jsonschema
import pytest

from ordchrom.cli import load_graph, main, run
from ordchrom.core import og
from ordchrom.schemas import SCHEMAS


def payload(argv):
    res = run(argv + ["--json"])
    assert res.status == 0, res.report
    data = json.loads(res.report)
    assert data == res.payload
    return data


def validate(name, data):
    jsonschema.validate(data, SCHEMAS[name])


def test_classify_cycle():
    res = run(["classify", "--graph", "OG 3: 1-2,1-3,2-3"])
    assert res.status == 0
    assert "Infinite (cycle)" in res.report
    data = payload(["classify", "--graph", "OG 3: 1-2,1-3,2-3"])
    validate("classify", data)
    assert data["verdict"] == "Infinite" and data["witness"]["kind"] == "cycle"


@pytest.mark.parametrize("text, verdict", [
    ("OG 4: 1-2,2-3,3-4", "Finite"),
    ("OG 5: 1-5,1-3,2-3,2-4", "Unknown"),
    ("OG 5: 1-2,1-5,3-4", "Infinite"),
])
def test_classify_json(text, verdict):
    data = payload(["classify", "--graph", text])
    validate("classify", data)
    assert data["verdict"] == verdict


def test_bound_and_tree_rendering():
    res = run(["bound", "--graph", "OG 4: 1-4,2-4,2-3"])
    assert "ReducibleVertex" in res.report and "GeneralizedStar" in res.report
    data = payload(["bound", "--graph", "OG 4: 1-4,2-4,2-3"])
    validate("bound", data)
    assert data["derivation"]["bound"] == 4


def test_bound_on_infinite_pattern_is_domain_error():
    assert run(["bound", "--graph", "OG 4: 1-2,1-4,3-4"]).status == 1


def test_color_from_file(tmp_path):
    host = tmp_path / "host.og"
    host.write_text("OG 6: 1-4, 1-5, 1-6, 2-4, 2-5, 2-6, 3-4, 3-5, 3-6\n")
    data = payload(["color", "--pattern", "OG 4: 1-2,2-3,3-4", "--graph", str(host)])
    validate("color", data)
    assert data["colors_used"] <= 3 == data["bound"]


def test_color_reads_json_graph_files(tmp_path):
    host = tmp_path / "host.json"
    host.write_text(json.dumps(og("OG 3: 1-2, 2-3, 1-3").to_json()))
    data = payload(["color", "--pattern", "OG 4: 1-2,2-3,3-4", "--graph", str(host)])
    assert data["colors_used"] == 3


def test_classify_then_color_compose():
    H = "OG 4: 1-4,2-4,2-3"
    bound = payload(["classify", "--graph", H])["upper"]
    data = payload(["color", "--pattern", H, "--graph", "OG 5: 1-2,1-3,2-3,3-4,4-5,3-5"])
    assert data["colors_used"] <= bound


def test_color_rejects_hosts_containing_the_pattern():
    res = run(["color", "--pattern", "OG 2: 1-2", "--graph", "OG 3: 1-3"])
    assert res.status == 1 and "contains" in res.report


def test_detect():
    data = payload(["detect", "--graph", "OG 4: 1-3,1-4,2-4"])
    validate("detect", data)
    assert data["tangled_path"]["kind"] == "tangled_path"
    assert data["cycle"] is None and data["bonnet"] is None


def test_segments():
    data = payload(["segments", "--graph", "OG 4: 1-2,2-3,3-4"])
    validate("segments", data)
    assert data["decomposition"]["inner_cut_vertices"] == [2, 3]
    data = payload(["segments", "--graph", "OG 4: 1-3,2-4"])
    assert data["bipartite_matrix"]["matrix"] == [[1, 0], [0, 1]]


def test_monoalt():
    data = payload(["monoalt", "--graph", "OG 4: 1-4,2-4,2-3"])
    validate("monoalt", data)
    assert data["monoalt"]["verdict"] and data["equivalence"]["agree"]
    assert run(["monoalt", "--graph", "OG 4: 1-2,3-4"]).status == 1


@pytest.mark.parametrize("argv, vertices", [
    (["construct", "shift", "5"], 10),
    (["construct", "spindle", "4"], 7),
    (["construct", "spiral", "5"], 5),
    (["construct", "complete", "4"], 4),
    (["construct", "tutte", "--pattern", "OG 4: 1-3,1-4,2-4", "--base", "OG 2: 1-2", "--k", "3"], 9),
])
def test_construct(argv, vertices):
    data = payload(argv)
    validate("construct", data)
    assert data["metadata"]["vertices"] == vertices == load_graph(data["graph"]).n


def test_construct_writes_file(tmp_path):
    out = tmp_path / "s.og"
    assert run(["construct", "shift", "4", "--out", str(out)]).status == 0
    assert load_graph(str(out)).n == 6


def test_embed():
    data = payload(["embed", "--pattern", "OG 2: 1-2", "--graph", "OG 3: 1-2,2-3", "--all"])
    validate("embed", data)
    assert data["embeddings"] == [[1, 2], [2, 3]]


def test_oracle_subcommands():
    data = payload(["oracle", "chi", "--graph", "OG 3: 1-2,1-3,2-3"])
    validate("oracle chi", data)
    assert data["value"] == 3
    data = payload(["oracle", "chi", "--graph", "OG 5: 1-2,2-3,3-4,4-5,1-5", "--method", "sat"])
    validate("oracle chi", data)
    assert data["value"] == 3
    data = payload(["oracle", "maxchi", "--pattern", "OG 4: 1-2,2-3,3-4", "--n", "5"])
    validate("oracle maxchi", data)
    assert data["value"] == 3 and data["exhaustive"]
    data = payload(["oracle", "extremal", "--pattern", "OG 2: 1-2", "--n", "4"])
    validate("oracle extremal", data)
    assert data["value"] == 0
    data = payload(["oracle", "maxchi", "--pattern", "OG 2: 1-2", "--n", "8", "--heuristic",
                    "--trials", "3"])
    assert data["lower_bound_only"]
    data = payload(["oracle", "orderings", "--forest", "P4"])
    validate("oracle orderings", data)
    assert data["count"] == 12


def test_table():
    res = run(["table"])
    assert res.status == 0
    data = payload(["table"])
    validate("table", data)
    rows = {r["ordering"]: r for r in data["rows"]}
    assert rows["OG 2: 1-2"]["upper"] == 1
    for r in data["rows"]:
        if r["forest"] == "S2":
            assert r["lower"] == r["upper"] == 2
    assert "engine value (not pinned)" in res.report
    assert "*" in res.report


@pytest.mark.parametrize("argv, status", [
    (["bogus"], 2),
    ([], 2),
    (["classify"], 2),
    (["construct", "shift"], 2),
    (["construct", "tutte", "--k", "3"], 2),
    (["oracle", "maxchi", "--n", "4"], 2),
    (["oracle", "maxchi", "--pattern", "OG 2: 1-2", "--n", "9", "--exhaustive"], 2),
    (["classify", "--graph", "OG 3: 1-1"], 1),
    (["classify", "--graph", "/no/such/file"], 1),
    (["classify", "--graph", "OG 1:"], 1),
])
def test_exit_codes(argv, status):
    assert run(argv).status == status


def test_main_prints_and_returns(capsys):
    assert main(["classify", "--graph", "OG 2: 1-2"]) == 0
    assert "Finite" in capsys.readouterr().out
    assert main(["classify", "--graph", "OG 2: 1-3"]) == 1
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ordchrom", "classify", "--graph", "OG 2: 1-2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "f = 1" in out.stdout
