from importlib import resources
import json

import jsonschema
import numpy as np
import pytest

from frechet_ann import ann5, indexes, persist
from frechet_ann._dictindex import CurveStats, DictIndex
from frechet_ann.cli import main

SCHEMA = json.loads(resources.files("frechet_ann").joinpath("report_schema.json").read_text())


def write(path, records):
    persist.write_dataset(path, {k: np.asarray(v, float) for k, v in records.items()})
    return str(path)


@pytest.fixture
def files(tmp_path):
    data = write(tmp_path / "data.jsonl", {"line": [0, 10], "zig": [0, 30, 5, 40]})
    queries = write(tmp_path / "q.jsonl", {"q1": [0.2, 9.8], "q2": [0, 10000], "q3": [1, 29, 6, 39]})
    return tmp_path, data, queries


def report(path):
    obj = json.loads(path.read_text())
    jsonschema.validate(obj, SCHEMA)
    return obj


@pytest.mark.parametrize("kind", indexes.KINDS)
def test_build_query_validate(kind, files, capsys):
    tmp, data, queries = files
    idx = tmp / "x.idx"
    assert main(["build", data, "--kind", kind, "--k", "4", "-o", str(idx),
                 "--report", str(tmp / "b.json")]) == 0
    assert "dictionary size" in capsys.readouterr().out
    built = report(tmp / "b.json")
    assert built["index"]["kind"] == kind and built["parameters"]["k"] == 4
    assert main(["query", str(idx), queries, "--validate", "--report", str(tmp / "q.json")]) == 0
    rows = report(tmp / "q.json")["queries"]
    assert [r["id"] for r in rows] == ["q1", "q2", "q3"]
    assert rows[1]["verdict"] == "NO" and rows[1]["validation"] == "PASS"
    assert not any(r["validation"].startswith("FAIL") for r in rows)
    if kind != "lsh":
        assert rows[0]["verdict"] == "HIT" and rows[0]["answer"] == "line"


def test_hit_and_pass_example(tmp_path, capsys):
    data = write(tmp_path / "d.jsonl", {"only": [0, 10]})
    queries = write(tmp_path / "q.jsonl", {"q": [0.2, 9.8]})
    assert main(["build", data, "--k", "3", "-o", str(tmp_path / "i")]) == 0
    assert main(["query", str(tmp_path / "i"), queries, "--validate"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "q\tHIT\tonly PASS"


def test_empty_dataset_builds(tmp_path):
    (tmp_path / "e.jsonl").write_text("")
    assert main(["build", str(tmp_path / "e.jsonl"), "-o", str(tmp_path / "e.idx")]) == 0
    assert len(persist.load_index(tmp_path / "e.idx")) == 0


def test_parse_error_exit_code(tmp_path, capsys):
    (tmp_path / "bad.jsonl").write_text('{"id": "a", "values": [1]}\n{"id": "oops", "values": []}\n')
    assert main(["build", str(tmp_path / "bad.jsonl"), "-o", str(tmp_path / "x")]) == 2
    err = capsys.readouterr().err
    assert "oops" in err and "line 2" in err
    assert main(["query", str(tmp_path / "missing.idx"), str(tmp_path / "bad.jsonl")]) == 2
    with pytest.raises(SystemExit) as info:
        main(["build"])
    assert info.value.code == 2


def test_invalid_parameters_exit_code(files):
    tmp, data, _ = files
    assert main(["build", data, "--epsilon", "2", "-o", str(tmp / "x")]) == 2


def test_lsh_archives_are_reproducible(files):
    tmp, data, _ = files
    for name in ("a", "b"):
        assert main(["build", data, "--kind", "lsh", "--seed", "7", "-o", str(tmp / name)]) == 0
    assert (tmp / "a").read_bytes() == (tmp / "b").read_bytes()
    main(["build", data, "--kind", "lsh", "--seed", "8", "-o", str(tmp / "c")])
    assert (tmp / "a").read_bytes() != (tmp / "c").read_bytes()


def test_failing_validation_exit_code(tmp_path):
    # an index whose dictionary points a near query at a far curve
    good = ann5.build_five_eps([[0, 10]], 1.0, 2, 1.0)
    key = ann5.query_key(good, [0, 10])
    bad = DictIndex("five-eps", 1.0, 2, 1.0, ["far"], [np.array([0.0, 500.0])],
                    {key: 0}, [CurveStats(2)])
    persist.save_index(bad, tmp_path / "bad.idx")
    queries = write(tmp_path / "q.jsonl", {"q": [0, 10]})
    assert main(["query", str(tmp_path / "bad.idx"), queries, "--validate",
                 "--report", str(tmp_path / "r.json")]) == 1
    assert report(tmp_path / "r.json")["queries"][0]["validation"] == "FAIL(soundness)"


def test_threads_give_the_same_answers(files):
    tmp, data, queries = files
    main(["build", data, "--kind", "two-eps", "--k", "4", "-o", str(tmp / "i")])
    outs = []
    for threads in ("1", "3"):
        main(["query", str(tmp / "i"), queries, "--threads", threads, "--report", str(tmp / "r.json")])
        rows = report(tmp / "r.json")["queries"]
        outs.append([(r["id"], r["verdict"], r["answer"]) for r in rows])
    assert outs[0] == outs[1]


def test_gadgets(tmp_path, capsys):
    out = tmp_path / "g"
    assert main(["gadgets", "continuous", "-U", "3", "--alice", "1", "--bob", "2", "-o", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["gap"]["text"] == "≤1 vs ≥2" and not manifest["intersecting"]
    records = persist.read_dataset(out / "gadget.jsonl")
    assert records["x"].tolist() == [0, 8, 4, 17]
    assert records["y"].tolist() == [0, 7, 5, 15, 13, 17]

    assert main(["gadgets", "highdim", "-U", "4", "--alice", "1", "--bob", "1", "-o", str(out)]) == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["gap"]["text"] == "≤√2 vs ≥√3" and manifest["intersecting"]
    recs = [json.loads(line) for line in (out / "gadget.jsonl").read_text().splitlines()]
    assert recs[0]["dim"] == 6 and len(recs[0]["values"]) == 6 * 7

    assert main(["gadgets", "planar-discrete", "--alice", "0100", "--bob", "0100", "-o", str(out)]) == 0
    assert main(["gadgets", "planar-discrete", "--alice", "010", "--bob", "010", "-o", str(out)]) == 2
    assert main(["gadgets", "planar-discrete", "--alice", "01x0", "-o", str(out)]) == 2


def test_bench(tmp_path, capsys):
    assert main(["bench", "--reps", "1", "--report", str(tmp_path / "b.json")]) == 0
    obj = report(tmp_path / "b.json")
    assert set(obj["seconds"]) == {"decide_far", "decide_near", "discrete_frechet", "enumerate_keys"}
    assert "decide_far" in capsys.readouterr().out
