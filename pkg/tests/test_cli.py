import io
import json
import subprocess
import sys

import pytest

from shiregions.cli import main

FIG2_JSON = {"word": [2, 4, 6, 8, 5, 1, 9, 7, 3],
             "arcs": [[1, 3], [2, 5], [3, 7], [5, 8], [6, 9]]}


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def lines(text):
    return [json.loads(line) for line in text.splitlines() if line.startswith("{")]


@pytest.mark.parametrize("argv,count", [
    (("regions", "--shi", "3"), 16),
    (("regions", "--braid", "3"), 6),
    (("regions", "--extended", "3", "--k", "2"), 49),
    (("regions", "--graphical", "--n", "3", "--graph", "[[1,2],[2,3]]"), 13),
    (("regions", "--family", "3", "--m", "1", "--k", "3"), 20),
])
def test_regions_line_counts(argv, count):
    code, text = run(*argv)
    assert code == 0
    recs = lines(text)
    assert len(recs) == count
    if argv[1] == "--braid":
        assert all(r["diagram"]["arcs"] == [] for r in recs)


def test_regions_records():
    recs = lines(run("regions", "--shi", "3")[1])
    assert {"signs", "witness", "diagram", "parking_function"} <= set(recs[0])
    assert len({tuple(r["parking_function"]) for r in recs}) == 16
    assert all("/" in w for r in recs for w in r["witness"])


def test_output_is_deterministic():
    assert run("regions", "--shi", "3") == run("regions", "--shi", "3")
    assert run("faces", "--shi", "3") == run("faces", "--shi", "3")


def test_faces():
    code, text = run("faces", "--shi", "3", "--format", "ascii")
    assert code == 0
    assert text.split() == ["f_1", "=", "6", "f_2", "=", "21", "f_3", "=", "16"]
    assert len(lines(run("faces", "--shi", "2")[1])) == 5


def test_map_to_region():
    code, text = run("map", "--to-region", "[6,1,6,2,2,1,2,4,1]", "--render", "ascii")
    assert code == 0
    rec = lines(text)[0]
    assert rec["diagram"] == FIG2_JSON
    assert rec["chains"] == "269/457/8/13"
    assert "2 4 6 8 5 1 9 7 3" in text


def test_map_to_pf():
    code, text = run("map", "--to-pf", json.dumps(FIG2_JSON))
    assert code == 0 and lines(text)[0]["parking_function"] == [6, 1, 6, 2, 2, 1, 2, 4, 1]


def test_map_k():
    rec = lines(run("map", "--to-region", "[2,1,6,1]", "--k", "2")[1])[0]
    assert rec["diagram"]["word"] == [2, 1, 2, 1, 4, 3, 4, 3]
    assert rec["chains"] == "2244/11/33"
    back = lines(run("map", "--to-pf", json.dumps(rec["diagram"]))[1])[0]
    assert back["parking_function"] == [2, 1, 6, 1]


def test_map_errors(capsys):
    assert run("map", "--to-region", "[2,2]")[0] == 2
    assert run("map", "--to-region", "[1,1,2]", "--graph", "[[2,3]]")[0] == 2
    assert "1,2" in capsys.readouterr().err
    assert run("map", "--to-region", "not json")[0] == 2
    assert run("map", "--to-pf", '{"word":[1,2,3],"arcs":[[1,3],[2,3]]}')[0] == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["regions"], io.StringIO())
    assert info.value.code == 2
    assert run("regions", "--graphical", "3")[0] == 2
    assert run("regions", "--shi")[0] == 2


def test_count():
    rec = lines(run("count", "--shi", "3", "--oracle", "--faces")[1])[0]
    assert rec["formula"] == rec["oracle"] == 16 and rec["faces"] == [6, 21, 16]
    rec = lines(run("count", "--graphical", "4", "--graph", "[[1,2],[2,3],[3,4]]")[1])[0]
    assert rec["path_formula"] == rec["cosets"] == 73
    rec = lines(run("count", "--family", "3", "--m", "1", "--k", "3", "--oracle")[1])[0]
    assert rec["formula"] == rec["oracle"] == 20
    rec = lines(run("count", "--extended", "3", "--k", "2")[1])[0]
    assert rec["formula"] == 49


def test_chi():
    rec = lines(run("chi", "--shi", "3")[1])[0]
    assert rec["chi"] == [0, 9, -6, 1] and rec["regions"] == 16
    assert lines(run("chi", "--shi", "2", "--q", "5")[1])[0]["count"] == 15
    assert run("chi", "--shi", "2", "--q", "4")[0] == 2


@pytest.mark.parametrize("argv,fragment", [
    (("verify", "bijection", "--n", "4"), "125 regions"),
    (("verify", "cosets", "--n", "3", "--all-graphs"), "8 graphs"),
    (("verify", "chi", "--shi", "3"), "16 regions"),
    (("verify", "bijection", "--n", "3", "--k", "2"), "49 regions"),
    (("verify", "product", "--n", "4"), "qualifying"),
    (("verify", "path", "--n", "4"), "oracle 73"),
    (("verify", "faces", "--n", "3"), "[6, 21, 16]"),
    (("verify", "pollack", "--n", "3", "--k", "2"), "49 cosets"),
    (("verify", "family", "--n", "3", "--m", "2"), "identity"),
])
def test_verify(argv, fragment):
    code, text = run(*argv)
    assert code == 0, text
    assert text.startswith("PASS") and fragment in text
    assert lines(text)[-1]["passed"] is True


def test_verify_failure_exit(monkeypatch):
    import shiregions.verify as verify
    monkeypatch.setattr(verify, "count_path", lambda n: 0)
    code, text = run("verify", "path", "--n", "3")
    assert code == 1
    report = lines(text)[-1]
    assert text.startswith("FAIL")
    assert report["passed"] is False
    assert report["counterexample"] == {"n": 3, "formula": 0, "regions": 13}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shiregions", "regions", "--shi", "2"],
                          capture_output=True, text=True, check=True)
    assert len(proc.stdout.splitlines()) == 3
