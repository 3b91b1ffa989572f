import json

import pytest

from qmathieu.algebra import cartan, parse_element
from qmathieu.cli import run


def out(capsys, argv, code=0):
    rc = run(argv)
    captured = capsys.readouterr()
    assert rc == code, captured.err
    return captured.out


def test_normalize(capsys):
    s = out(capsys, ["normalize", "--rank", "1", "F1*E1"])
    assert s.strip() == "E1*F1 - (q - q^-1)^-1*K1 + (q - q^-1)^-1*K1^-1"


def test_normalize_fixed_point(capsys):
    s = out(capsys, ["normalize", "--rank", "2", "F2*E1*E2*F1*K2^-1"]).strip()
    again = out(capsys, ["normalize", "--rank", "2", s]).strip()
    assert again == s
    assert str(parse_element(s, cartan(2))) == s


def test_sl2_analyze(capsys):
    rep = json.loads(out(capsys, ["sl2-analyze", "--q", "1/2", "--lambda", "1", "--mu", "q+q^-1"]))
    assert rep["nE"] == 2 and rep["nF"] == 2 and rep["quotient_dim"] == 3


def test_sl2_analyze_numeric(capsys):
    rep = json.loads(out(capsys, ["sl2-analyze", "--q", "0.5", "--numeric", "--lambda", "1", "--mu", "q+q^-1"]))
    assert rep["nE"] == 2 and rep["params"]["q"] == 0.5


def test_env_q(capsys, monkeypatch):
    monkeypatch.setenv("QMATHIEU_Q", "0.5")
    rep = json.loads(out(capsys, ["sl2-classify", "--lambda", "1", "--mu", "-3"]))
    assert rep["series"]["kind"] == "strange"


def test_norms_csv(capsys):
    s = out(capsys, ["sl2-norms", "--q", "0.5", "--numeric", "--lambda", "1", "--mu", "-2", "--nmax", "3"])
    lines = s.strip().splitlines()
    assert lines[0] == "n,norm_sq_E,norm_sq_F"
    assert len(lines) == 5
    s = out(capsys, ["sl2-norms", "--lambda", "1", "--mu", "q+q^-1", "--nmax", "2", "--format", "json"])
    assert json.loads(s)["norms"][2]["norm_sq_E"] == "0"


def test_equiv(capsys):
    rep = json.loads(out(capsys, ["sl2-equiv", "--lambda", "q^3", "--mu", "2",
                                  "--lambda2", "q^5", "--mu2", "2 - (q^3 - q^-3)/(q - q^-1)"]))
    assert rep["equivalent"] and rep["shift"] == 1


def test_phi_eval(capsys):
    s = out(capsys, ["phi-eval", "--rank", "2", "--S", "1", "--lambda", "q^2,3", "--mu", "q+1", "E1*F1*K2"])
    assert s.strip() == "3*q + 3"
    s = out(capsys, ["phi-eval", "--rank", "2", "--S", "1", "--lambda", "q^2,3", "--mu", "q+1", "E2*F2"])
    assert s.strip() == "0"


def test_rankn(capsys):
    rep = json.loads(out(capsys, ["rankn-analyze", "--rank", "2", "--S", "1", "--lambda", "q,2", "--mu", "3",
                                  "--samples", "30"]))
    assert rep["witnesses"]["2"]["passed"]


def test_repcheck(capsys):
    rep = json.loads(out(capsys, ["repcheck", "--rank", "2", "--degree", "2",
                                  "E1*E1*E2 - (q+q^-1)*E1*E2*E1 + E2*E1*E1"]))
    assert rep["images_agree"] and rep["image_is_zero"]


def test_verify_single(capsys):
    s = out(capsys, ["verify", "--suite", "relations,commutation"])
    assert s.count("PASS") == 2
    rep = json.loads(out(capsys, ["verify", "--suite", "reducibility", "--format", "json"]))
    assert rep["passed"]


def test_exit_codes(capsys):
    assert run(["normalize", "--rank", "1", "E3"]) == 1
    assert run(["normalize", "--rank", "1", "E1+"]) == 1
    assert run(["bogus"]) == 2
    assert run(["normalize"]) == 2
    assert run(["verify", "--suite", "nope"]) == 2
    assert run(["sl2-analyze", "--lambda", "1", "--mu", "2", "--numeric"]) == 2
    assert run(["sl2-analyze", "--lambda", "0", "--mu", "2"]) == 1
    err = capsys.readouterr().err
    assert '"error": "AlgebraError"' in err


def test_verify_all(capsys):
    s = out(capsys, ["verify", "--suite", "all"])
    assert "FAIL" not in s
    assert s.count("PASS") == 17
