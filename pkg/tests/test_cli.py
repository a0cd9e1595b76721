import json

import pytest

from pfrep.cli import UsageError, main, parse_args
from pfrep.decide import GROUPS, counterexample_F, group_algebra
from pfrep.formats import algebra_to_json, dump_algebra, dump_representation


@pytest.fixture
def files(tmp_path):
    A, rep = group_algebra(*GROUPS["Z2"]())
    paths = {"alg": tmp_path / "z2.json", "rep": tmp_path / "rep.json",
             "F": tmp_path / "F.json", "dir": tmp_path}
    paths["alg"].write_text(dump_algebra(A))
    paths["rep"].write_text(dump_representation(rep, list(A.carrier)))
    paths["F"].write_text(dump_algebra(counterexample_F()[0]))
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParseArgs:
    def test_construct(self, files):
        inv = parse_args(["construct", files["alg"], "--algebraic", "-o", "net.json"])
        assert inv.command == "construct" and inv.inputs == [files["alg"]]
        assert inv.options["algebraic"] and inv.options["output"] == "net.json"

    def test_decide(self, files):
        inv = parse_args(["decide", files["alg"], "--max-base", "4"])
        assert inv.options["max_base"] == 4

    def test_bound(self, files):
        assert parse_args(["bound", files["alg"]]).command == "bound"

    def test_missing_file(self, tmp_path):
        with pytest.raises(UsageError):
            parse_args(["validate", str(tmp_path / "nope.json")])

    def test_unknown_flag(self, files):
        with pytest.raises(UsageError):
            parse_args(["validate", files["alg"], "--frobnicate"])


class TestExitCodes:
    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "bogus")
        assert code == 1 and json.loads(err)["error"] == "UsageError"

    def test_validate(self, capsys, files):
        code, out, _ = run(capsys, "validate", files["alg"])
        assert code == 0 and json.loads(out)["valid"]

    def test_malformed_algebra(self, capsys, files, tmp_path):
        obj = json.loads(open(files["alg"]).read())
        obj["tables"]["meet"][0][0] = 9
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(obj))
        code, _, err = run(capsys, "validate", str(bad))
        assert code == 1 and json.loads(err)["position"] == "tables.meet[0][0]"

    def test_abstract_round_trip(self, capsys, files):
        out_path = files["dir"] + "/abs.json"
        code, _, _ = run(capsys, "abstract", files["rep"], "--signature",
                         "compose,meet,antidom,ran", "-o", out_path)
        assert code == 0
        assert open(out_path).read() == open(files["alg"]).read()

    def test_construct_then_check(self, capsys, files):
        net = files["dir"] + "/net.json"
        trace = files["dir"] + "/trace.json"
        code, _, _ = run(capsys, "construct", files["alg"], "--algebraic", "-o", net,
                         "--trace", trace)
        assert code == 0 and len(json.load(open(net))["vertices"]) == 6
        assert json.load(open(trace))["multiplicity"] == 3
        code, out, _ = run(capsys, "check", net, files["alg"])
        assert code == 0 and json.loads(out)["pass"]

    def test_check_failure(self, capsys, files, tmp_path):
        net = tmp_path / "one.json"
        net.write_text(json.dumps({"vertices": ["x"], "edges": [{"from": 0, "to": 0, "label": 1}]}))
        code, out, _ = run(capsys, "check", str(net), files["alg"])
        assert code == 2 and not json.loads(out)["pass"]

    def test_decide(self, capsys, files):
        code, out, _ = run(capsys, "decide", files["alg"], "--max-base", "2")
        assert code == 0 and json.loads(out)["outcome"] == "representable"
        code, out, _ = run(capsys, "decide", files["alg"], "--method", "construction")
        assert code == 0 and json.loads(out)["k"] == 6

    def test_decide_capacity(self, capsys, files):
        code, _, err = run(capsys, "decide", files["alg"], "--max-base", "9")
        assert code == 1 and json.loads(err)["error"] == "CapacityError"

    def test_decide_F_not_on_base(self, capsys, files):
        code, out, _ = run(capsys, "decide", files["F"], "--max-base", "3")
        assert code == 2 and json.loads(out)["outcome"] == "notOnBase"

    def test_unsupported_signature(self, capsys, files):
        code, _, err = run(capsys, "construct", files["F"], "--algebraic")
        assert code == 3 and json.loads(err)["error"] == "UnsupportedSignatureError"

    def test_construct_with_profile(self, capsys, files, tmp_path):
        prof = tmp_path / "profile.json"
        prof.write_text(json.dumps({"realisables": ["d", "r"]}))
        net = str(tmp_path / "Fnet.json")
        code, _, _ = run(capsys, "construct", files["F"], "--profile", str(prof), "-o", net)
        assert code == 0
        code, out, _ = run(capsys, "check", net, files["F"])
        assert code == 2
        assert {f["symbol"] for f in json.loads(out)["failures"]} == {"unipoint"}

    def test_bound(self, capsys, files):
        code, out, _ = run(capsys, "bound", files["alg"])
        assert code == 0 and json.loads(out)["bound"] == 9

    def test_realisable(self, capsys, files):
        code, out, _ = run(capsys, "realisable", files["alg"])
        assert code == 0 and json.loads(out)["realisables"] == ["e"]

    def test_future(self, capsys, files):
        dot = files["dir"] + "/f.dot"
        code, out, _ = run(capsys, "future", files["alg"], "--alpha", "e", "--dot", dot)
        assert code == 0 and json.loads(out)["vertices"] == ["e", "a"]
        assert open(dot).read().startswith("digraph")

    def test_future_unknown_element(self, capsys, files):
        code, _, _ = run(capsys, "future", files["alg"], "--alpha", "zz")
        assert code == 1

    def test_demo_group(self, capsys):
        code, out, _ = run(capsys, "demo", "group", "--group", "S3")
        assert code == 0 and json.loads(out)["constructedVertices"] == 42

    def test_demo_counterexample(self, capsys):
        code, out, _ = run(capsys, "--threads", "2", "demo", "counterexample", "--max-base", "3")
        obj = json.loads(out)
        assert code == 2 and obj["implicationFailures"] == 0
        assert obj["decision"]["outcome"] == "notOnBase"

    def test_unipoint_needs_flag(self, capsys, files, tmp_path):
        obj = algebra_to_json(counterexample_F()[0])
        del obj["enableUnipoint"]
        bad = tmp_path / "noflag.json"
        bad.write_text(json.dumps(obj))
        code, _, _ = run(capsys, "validate", str(bad))
        assert code == 1
