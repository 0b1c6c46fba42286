import json

import pytest

from eisenorbit.cli import main

A_EX = [["4", "-3", "-12"], ["-3", "4", "15"], ["-6", "3", "13"]]
X_GOLDEN = [
    ["-11-3*w", "-3-3*w", "-3*w"],
    ["-24-33*w", "-2-12*w", "12+3*w"],
    ["-3+6*w", "-3", "-2-3*w"],
]
I3 = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
T_GOLDEN = ["-3+6*w", "-3", "-2-3*w", "-6+3*w", "3-6*w", "4+3*w"]


@pytest.fixture
def write(tmp_path):
    def _write(data, name="m.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    doc = json.loads(out) if out.strip() else None
    return code, doc, err


def test_invariants_identity(capsys, write):
    code, doc, _ = run(capsys, "invariants", write(I3))
    assert code == 0
    assert doc["tuple"] == ["0+0*w", "0+0*w", "1+0*w", "0+0*w", "0+0*w", "1+0*w"]
    assert doc["satisfied"] == ["I1", "I2", "I3", "I4"]


def test_invariants_golden(capsys, write):
    code, doc, _ = run(capsys, "invariants", write(A_EX))
    assert code == 0
    assert doc["tuple"] == ["-6+0*w", "3+0*w", "13+0*w", "15+0*w", "51+0*w", "7+0*w"]


def test_invariants_not_in_gamma3(capsys, write):
    m = [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    code, doc, err = run(capsys, "invariants", write(m))
    assert code == 3 and doc is None
    assert "entry (1,2)" in err


@pytest.mark.parametrize(
    "text",
    ["not json", "[[1,2],[3,4]]", '[["1","0","0"],["0","1","0"],["0","0","x"]]', '[[1,0,0],[0,1,0],[0,0,true]]'],
)
def test_parse_errors(capsys, write, text):
    code, doc, err = run(capsys, "invariants", write(text))
    assert code == 2 and doc is None
    assert "parse error" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "invariants", str(tmp_path / "absent.json"))
    assert code == 2


def test_decompose_identity(capsys, write):
    code, doc, _ = run(capsys, "decompose", "--side", "left", write(I3))
    assert code == 0
    assert doc["cell"] == "Delta2" and doc["recomposes"] is True
    assert list(doc) == ["side", "cell", "C", "u", "d", "y3", "y2", "y1", "recomposes"]
    assert doc["y1"] == [["1+0*w", "0+0*w"], ["0+0*w", "1+0*w"]]


@pytest.mark.parametrize("matrix", [A_EX, X_GOLDEN])
def test_decompose_golden(capsys, write, matrix):
    for side in ("left", "right"):
        code, doc, _ = run(capsys, "decompose", "--side", side, write(matrix))
        assert code == 0
        assert doc["recomposes"] is True
        assert doc["cell"] == "Delta11"


def test_decompose_right_key_order(capsys, write):
    _, doc, _ = run(capsys, "decompose", "--side", "right", write(A_EX))
    assert list(doc) == ["side", "cell", "y1", "y2", "y3", "d", "u", "C", "recomposes"]


def test_decompose_not_unimodular(capsys, write):
    m = [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    code, _, err = run(capsys, "decompose", write(m))
    assert code == 3 and "det" in err


def test_decompose_self_check_failure(capsys, write, monkeypatch):
    import eisenorbit.cli as cli
    from eisenorbit.decompose import decompose_left as real

    def broken(A):
        dec = real(A)
        return type(dec)(dec.C @ dec.C, dec.u, dec.d, dec.y3, dec.y2, dec.y1, dec.cell)

    monkeypatch.setattr(cli, "decompose_left", broken)
    m = [["1", "3", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    code, doc, err = run(capsys, "decompose", write(m))
    assert code == 4 and doc is None and "self-check" in err


def test_represent_identity(capsys):
    code, doc, _ = run(capsys, "represent", "--tuple", "0", "0", "1", "0", "0", "1")
    assert code == 0
    assert doc["case"] == "Case5"
    assert doc["X"] == [["1+0*w", "0+0*w", "0+0*w"], ["0+0*w", "1+0*w", "0+0*w"], ["0+0*w", "0+0*w", "1+0*w"]]
    assert doc["invariants_match"] is True


def test_represent_golden_tuple(capsys, write):
    code, doc, _ = run(capsys, "represent", "--tuple", *T_GOLDEN)
    assert code == 0 and doc["case"] == "Case1"
    code, inv, _ = run(capsys, "invariants", write(doc["X"]))
    assert code == 0
    assert inv["tuple"] == ["-3+6*w", "-3+0*w", "-2-3*w", "-6+3*w", "3-6*w", "4+3*w"]
    assert doc["decomposition"]["C"] == [["1+0*w", "0+0*w", "0+0*w"], ["0+0*w", "1+0*w", "0+0*w"], ["0+0*w", "0+0*w", "1+0*w"]]


def test_represent_invalid(capsys):
    code, doc, err = run(capsys, "represent", "--tuple", "1", "0", "1", "0", "0", "1")
    assert code == 3 and doc is None
    assert "I1" in err


def test_represent_parse_error(capsys):
    code, _, _ = run(capsys, "represent", "--tuple", "0", "0", "1", "0", "0", "q")
    assert code == 2


def test_verify_golden_tuple(capsys):
    code, doc, _ = run(capsys, "verify", "--tuple", *T_GOLDEN)
    assert code == 0
    assert doc["conditions"] == {"I1": True, "I2": True, "I3": True, "I4": True}
    assert doc["valid"] is True


def test_verify_identity_matrix(capsys, write):
    code, doc, _ = run(capsys, "verify", write(I3))
    assert code == 0
    assert doc["in_gamma3"] is True and doc["in_gamma_inf3"] is True


def test_verify_i4_failure_is_content(capsys):
    code, doc, _ = run(capsys, "verify", "--tuple", "3", "3", "1", "3", "3", "1")
    assert code == 0
    assert doc["conditions"]["I4"] is False and doc["valid"] is False


def test_verify_non_member_is_content(capsys, write):
    m = [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    code, doc, _ = run(capsys, "verify", write(m))
    assert code == 0
    assert doc["unimodular"] is False and doc["in_gamma3"] is False and doc["violations"]


def test_verify_needs_exactly_one_input(capsys, write):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", write(I3), "--tuple", "0", "0", "1", "0", "0", "1")[0] == 2


def test_roundtrip_empty_word(capsys):
    code, doc, _ = run(capsys, "roundtrip", "--samples", "1", "--seed", "0", "--length", "0")
    assert code == 0 and doc["all_pass"] is True
    assert all(v == {"pass": 1, "fail": 0} for v in doc["properties"].values())


def test_roundtrip_is_deterministic(capsys):
    first = run(capsys, "roundtrip", "--samples", "30", "--seed", "5")
    second = run(capsys, "roundtrip", "--samples", "30", "--seed", "5")
    assert first == second and first[0] == 0


def test_roundtrip_zero_samples(capsys):
    with pytest.raises(SystemExit) as info:
        main(["roundtrip", "--samples", "0"])
    assert info.value.code == 2


def test_roundtrip_reports_counterexample(capsys, monkeypatch):
    import eisenorbit.cli as cli

    monkeypatch.setattr(cli, "decompose_right", lambda A: (_ for _ in ()).throw(RuntimeError("boom")))
    code, doc, err = run(capsys, "roundtrip", "--samples", "3", "--seed", "2")
    assert code == 1 and doc["all_pass"] is False
    assert doc["properties"]["decompose_right"]["fail"] == 3
    ce = doc["counterexample"]
    assert ce["property"] == "decompose_right" and ce["sample"] == 0 and ce["seed"] == 2
    assert len(ce["matrix"]) == 3 and "word" in ce
    assert "decompose_right" in err


def test_no_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "eisenorbit", "represent", "--tuple", "0", "0", "1", "0", "3", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["X"][0] == ["-2+0*w", "-3+0*w", "0+0*w"]
