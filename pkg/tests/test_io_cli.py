import json

import pytest

from frobhom import io
from frobhom.algebras import FiniteSpace, function_algebra, truncated_polynomial_algebra
from frobhom.cli import main
from frobhom.exact import GrassmannElement
from frobhom.frobenius import PointConfiguration
from frobhom.suites import SuiteConfig, run_suite
from frobhom.superlinalg import SuperMatrix


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def files(tmp_path):
    write(tmp_path, "X.json", {"points": ["x1", "x2"]})
    A = truncated_polynomial_algebra(2)
    return {
        "X": write(tmp_path, "X.json", {"points": ["x1", "x2"]}),
        "A": write(tmp_path, "A.json", io.dump_algebra(A)),
        "diff": write(tmp_path, "diff.json", {"source": "X.json", "target": "scalar",
                                               "matrix": [["1", "-1"]]}),
        "sum": write(tmp_path, "sum.json", {"source": "X.json", "matrix": [["1", "1"]]}),
        "bare": write(tmp_path, "bare.json", {"matrix": [["1", "-1"]]}),
        "D23": write(tmp_path, "D23.json", {"p": 1, "q": 1, "ring": "rational",
                                            "blocks": {"a00": [["2"]], "a01": [["0"]],
                                                       "a10": [["0"]], "a11": [["3"]]}}),
        "bad": write(tmp_path, "bad.json", {"p": 1, "q": 1, "blocks": {"a00": [["2", "1"]]}}),
    }


def test_algebra_roundtrip():
    A = truncated_polynomial_algebra(3)
    B = io.load_algebra(json.loads(json.dumps(io.dump_algebra(A))))
    assert B.structure_constants() == A.structure_constants()
    assert io.load_algebra({"points": ["a", "b"]}).dim == 2


def test_malformed_algebra():
    with pytest.raises(io.InputError):
        io.load_algebra({"dim": 2, "unit": ["1", "0"]})
    with pytest.raises(io.InputError):
        io.load_algebra({"dim": 1, "unit": ["1.5"], "structure": [[["1"]]]})


def test_functional_and_configuration_roundtrip():
    X = FiniteSpace(("a", "b", "c"))
    cfg = PointConfiguration(X, {"a": 2, "c": -1})
    back = io.load_configuration(json.loads(json.dumps(io.dump_configuration(cfg))))
    assert back == cfg
    A = function_algebra(X)
    f = io.load_functional({"matrix": [["1/2", "0", "-3"]]}, source=A)
    out = io.dump_functional(f, source_ref={"points": ["a", "b", "c"]})
    assert out["matrix"] == [["1/2", "0", "-3"]] and out["target"] == "scalar"
    with pytest.raises(io.InputError):
        io.load_configuration({"space": {"points": ["a"]}, "multiplicities": {"a": 1.5}})


def test_supermatrix_roundtrip():
    n = 2
    M = SuperMatrix(1, 1, [[GrassmannElement.scalar(n, 1), GrassmannElement.monomial(n, (1,))],
                           [GrassmannElement.monomial(n, (2,), -2), GrassmannElement.scalar(n, 3)]])
    rec = json.loads(json.dumps(io.dump_supermatrix(M)))
    assert rec["ring"] == "grassmann:2"
    assert io.load_supermatrix(rec) == M
    with pytest.raises(io.InputError):
        io.load_supermatrix({"p": 1, "q": 0, "ring": "octonion", "blocks": {"a00": [["1"]]}})


def test_cli_classify(files, capsys):
    assert main(["classify", "--functional", files["diff"]]) == 0
    assert "pq-homomorphism (1,1)" in capsys.readouterr().out
    assert main(["classify", "--functional", files["bare"], "--algebra", files["X"],
                 "--max-p", "4", "--max-q", "4"]) == 0
    assert "pq-homomorphism (1,1)" in capsys.readouterr().out


def test_cli_super_ber(files, capsys):
    assert main(["super", "ber", "--matrix", files["D23"]]) == 0
    out = capsys.readouterr().out
    assert "ber: 2/3" in out and "ber_hankel_ratio: 2/3" in out


def test_cli_other_commands(files, capsys):
    assert main(["char-series", "--functional", files["sum"], "--element", "1,2", "--order", "4"]) == 0
    assert 'coefficients: ["1", "3", "2", "0", "0"]' in capsys.readouterr().out
    assert main(["br-lift", "--functional", files["sum"], "--n", "2"]) == 0
    assert main(["br-lift", "--functional", files["diff"], "--n", "2"]) == 1
    assert main(["recover", "--functional", files["diff"]]) == 0
    assert main(["sym-power", "--algebra", files["A"], "--n", "2"]) == 0
    capsys.readouterr()
    assert main(["sym-pq-power", "--algebra", files["X"], "--p", "1", "--q", "1"]) == 0
    assert capsys.readouterr().out.startswith("dim: 3\n")
    for what in ("traces", "hankel", "liouville"):
        assert main(["super", what, "--matrix", files["D23"]]) == 0


def test_cli_exit_codes(files, tmp_path, capsys):
    assert main(["super", "ber", "--matrix", files["bad"]]) == 2
    assert main(["classify", "--functional", str(tmp_path / "missing.json")]) == 2
    assert main(["suite", "no-such-suite"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_records_and_out(files, tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    assert main(["suite", "gelfand-kolmogorov", "--seed", "42", "--format", "records",
                 "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    lines = [json.loads(x) for x in out.read_text().splitlines()]
    assert printed.strip() == out.read_text().strip()
    assert lines[0] == {"suite": "gelfand-kolmogorov", "seed": 42, "cases": 6}
    assert all(x["verdict"] == "pass" for x in lines[1:-1])
    assert [x["id"] for x in lines[1:-1]] == sorted(x["id"] for x in lines[1:-1])


def test_suites_are_deterministic():
    cfg = SuiteConfig(seed=7, sum_cases=5, composition_cases=5)
    a = run_suite("closure", config=cfg).records()
    b = run_suite("closure", config=cfg).records()
    assert a == b
    c = run_suite("closure", config=SuiteConfig(seed=8, sum_cases=5, composition_cases=5))
    assert c.records() != a


def test_failing_case_carries_witness():
    report = run_suite("exact-core", config=SuiteConfig(core_cases=2))
    assert report.ok
    report.cases[0].verdict = False
    assert not report.ok and report.failures == [report.cases[0]]
