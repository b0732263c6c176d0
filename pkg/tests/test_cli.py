import json
from pathlib import Path

import pytest

from clover_milnor import cli
from clover_milnor.cli import RunConfig, main, run
from clover_milnor.milnor import TanglePresentation, milnor_number, mu_bar

DATA = Path(__file__).resolve().parent.parent / "data"


def path(name):
    return str(DATA / f"{name}.json")


def test_mu_borromean(capsys):
    assert main(["mu", "-i", path("borromean"), "--seq", "123"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_mu_thin_wrapper():
    t = TanglePresentation.from_dict(json.loads(Path(path("borromean")).read_text()))
    for seq in ["213", "312", "12", "1231"]:
        status, out = run(RunConfig("mu", [path("borromean")], seq=seq, fmt="machine"))
        assert status == 0
        assert json.loads(out)["result"]["mu"] == milnor_number(t, tuple(int(c) for c in seq))


def test_mubar_and_delta():
    status, out = run(RunConfig("mubar", [path("borromean")], seq="123"))
    assert (status, out) == (0, "1 (exact)")
    t = TanglePresentation.from_dict(json.loads(Path(path("hopf_pairs")).read_text()))
    res, mod = mu_bar(t, (1, 2, 1))
    status, out = run(RunConfig("mubar", [path("hopf_pairs")], seq="121", fmt="machine"))
    assert json.loads(out)["result"] == {"seq": "121", "residue": res, "modulus": mod}
    assert run(RunConfig("delta", [path("hopf_pairs")], seq="1234", k=0)) == (0, "1")
    assert run(RunConfig("delta", [path("borromean")], seq="123")) == (0, "0")


def test_hset_text():
    status, out = run(RunConfig("hset", [path("hopf_pairs")]))
    assert status == 0
    assert "X_123 : 0 +1*m13 -1*m14 -1*m23 +1*m24" in out


def test_classify_exit_codes(capsys):
    assert main(["classify", "-i", path("trivial4"), "-i", path("trivial4")]) == 0
    assert main(["classify", "-i", path("trivial4"), "-i", path("triple4"), "--explain"]) == 3
    assert "disjoint" in capsys.readouterr().out


def test_slmove_with_congruence():
    status, out = run(RunConfig("slmove", [path("hopf_pairs"), path("string_link_13")], degree=3, k=1,
                                fmt="machine"))
    doc = json.loads(out)
    assert status == 0 and doc["result"]["congruence"]["violations"] == []
    assert doc["result"]["mu_after"]["1234"] == 1


def test_input_errors(tmp_path, capsys):
    assert main(["mu", "-i", str(tmp_path / "missing.json"), "--seq", "12"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["mu", "-i", str(bad), "--seq", "12"]) == 2
    framed = tmp_path / "framed.json"
    framed.write_text(json.dumps({"n": 2, "longitudes": [[[1, 1]], []]}))
    assert main(["mu", "-i", str(framed), "--seq", "11"]) == 2
    assert main(["mu", "-i", str(framed), "--seq", "11", "--allow-framing"]) == 0
    assert main(["mu", "-i", path("borromean"), "--seq", "129"]) == 2
    assert main(["hset", "-i", path("borromean")]) == 2
    assert main(["mu", "-i", path("borromean")]) == 2
    status, out = run(RunConfig("classify", [path("borromean")], fmt="machine"))
    assert status == 2 and "error" in json.loads(out)


def test_machine_output_is_deterministic():
    cfg = dict(prop="magnus-hom", seed=11, trials=20, fmt="machine")
    a = run(RunConfig("verify", **cfg))
    b = run(RunConfig("verify", **cfg))
    assert a == b and a[0] == 0
    doc = json.loads(a[1])
    assert doc["schema_version"] == cli.SCHEMA_VERSION and doc["result"]["passed"]


def test_verify_text(capsys):
    assert main(["verify", "--prop", "sl-congruence", "--seed", "3", "--trials", "2"]) == 0
    assert "PASS" in capsys.readouterr().out
    with pytest.raises(SystemExit):
        main(["verify", "--prop", "nope"])
