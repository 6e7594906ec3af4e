import json

import pytest

from qwalk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_kreweras(capsys):
    code, out, _ = run(capsys, "classify", "NE,S,W")
    assert code == 0
    assert out.startswith("NE,S,W: class 5 (Kreweras)")


def test_classify_empty_and_class11(capsys):
    assert "empty" in run(capsys, "classify", "SE,S,SW")[1]
    code, out, _ = run(capsys, "classify", "N,NW,SE", "--format", "json")
    assert code == 0 and json.loads(out)["index"] == 11


@pytest.mark.parametrize("argv,expected", [
    (["count", "N,SE,W", "-n", "6"], "1,1,2,4,9,21,51"),
    (["count", "NE,SE,NW", "-n", "3"], "1,1,3,7"),
    (["count", "NE,S,W", "-n", "0"], "1"),
    (["count", "7", "-n", "4"], "1,1,2,4,9"),
])
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_count_slices(capsys):
    code, out, _ = run(capsys, "count", "NE,S,W", "-n", "3", "--slice", "origin", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,i,j,count"


def test_group(capsys):
    code, out, _ = run(capsys, "group", "NE,S,W")
    assert code == 0
    assert "tau_x: ((1)/(x*y), y)" in out
    assert "D3 (order 6)" in out


def test_verify_class(capsys):
    code, out, err = run(capsys, "verify", "6", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["class"] == 6
    assert all(c["pass"] for c in report["checks"])
    assert "verifying class 6" in err


def test_guess(capsys):
    code, out, _ = run(capsys, "guess", "N,SE,W", "--terms", "40", "--guess-order", "2",
                       "--guess-degree", "1", "--guard", "10")
    assert code == 0
    assert "(n+4)*a(n+2) - (2*n+5)*a(n+1) - 3*(n+1)*a(n) = 0" in out


def test_usage_errors(capsys):
    assert run(capsys, "classify", "N,UP")[0] == 2
    assert run(capsys, "verify", "12")[0] == 2
    assert run(capsys, "count", "N", "--length", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["group", "N,SE,SW", "--format", "json", "--out", str(a)]) == 0
    assert main(["group", "N,SE,SW", "--format", "json", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["order"] == 4


def test_survey(capsys):
    code, out, _ = run(capsys, "survey")
    assert code == 0
    assert "reflect_classes: 25" in out
    assert "final_classes: 11" in out
    assert "conjecture table consistent: true" in out
