import dataclasses
import json
import subprocess
import sys

import jsonschema
import pytest

from qcatalan import cli
from qcatalan.families import FamilySpec, MomentFunctional, family_poly, moment_of_power
from qcatalan.identities import core, get_check
from qcatalan.render import parse_scalar
from qcatalan.scalar import QPoly, QRat


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, cli.OUTPUT_SCHEMA)
    return code, doc


def values(doc):
    return [r["value"] for r in doc["rows"]]


def test_family_numeric_s(capsys):
    code, doc = run_json(capsys, "family", "l", "--m", "2", "--s", "-1", "--n", "4")
    assert code == 0 and doc["command"] == "family"
    last = {t["pow"]: t["coeff"] for t in doc["rows"][-1]["poly"]}
    assert last == {4: "1", 2: "-12/5", 0: "3/5"}


def test_family_symbolic_s(capsys):
    code, doc = run_json(capsys, "family", "vq", "--m", "0", "--n", "2")
    assert code == 0 and doc["params"]["s"] == "symbolic"
    terms = doc["rows"][2]["poly"]
    assert terms == [{"pow": 0, "coeff": "(-q) / (1 + q)", "s_pow": 1},
                     {"pow": 2, "coeff": "1", "s_pow": 0}]


def test_family_lucas(capsys):
    code, doc = run_json(capsys, "family", "lucas", "--n", "2")
    assert doc["rows"][2]["poly"] == [{"pow": 0, "coeff": "-2"}, {"pow": 2, "coeff": "1"}]


def test_family_round_trip(capsys):
    code, doc = run_json(capsys, "family", "Hq", "--s", "2", "--n", "6")
    spec = FamilySpec("H_q", 0, 2)
    for row in doc["rows"]:
        p = family_poly(spec, row["index"])
        for t in row["poly"]:
            assert parse_scalar(t["coeff"]) == QRat.from_scalar(p.coefficients[t["pow"]])


def test_moments(capsys):
    code, doc = run_json(capsys, "moments", "lambda_m", "--m", "2", "--s", "-1", "--n", "7")
    assert values(doc)[::2] == ["1", "2/3", "1", "2", "14/3", "12", "33", "286/3"]
    assert set(values(doc)[1::2]) == {"0"}
    code, doc = run_json(capsys, "moments", "phi_q", "--m", "0", "--n", "1")
    assert parse_scalar(values(doc)[2]) == QRat(QPoly([0, 1]), QPoly([1, 1]))
    code, doc = run_json(capsys, "moments", "lambda", "--n", "2")
    assert values(doc)[-1] == "6"


def test_moments_round_trip(capsys):
    code, doc = run_json(capsys, "moments", "lambda_q", "--m", "3", "--s", "-1", "--n", "4")
    f = MomentFunctional("lambda_q", 3, -1)
    for row in doc["rows"]:
        assert parse_scalar(row["value"]) == QRat.from_scalar(moment_of_power(f, row["index"]))


def test_sequences(capsys):
    _, doc = run_json(capsys, "sequence", "tangent", "--count", "5")
    assert values(doc) == ["1", "2", "16", "272", "7936"]
    _, doc = run_json(capsys, "sequence", "genocchi", "--count", "7")
    assert values(doc) == ["0", "1", "1", "3", "17", "155", "2073"]
    _, doc = run_json(capsys, "sequence", "q-tangent", "--count", "2")
    assert values(doc) == ["1", "q + q^2"]
    _, doc = run_json(capsys, "sequence", "l-at-1", "--m", "1", "--count", "12")
    assert values(doc) == ["1", "1", "0", "-1", "-1", "0"] * 2
    assert doc["flags"] == []


def test_sequence_reference_flag(capsys):
    code, doc = run_json(capsys, "sequence", "l-at-1", "--m", "2", "--count", "12")
    assert code == 0
    assert len(doc["flags"]) == 1 and "n=11" in doc["flags"][0]


def test_paths(capsys):
    code, doc = run_json(capsys, "paths", "--weights", "one", "--n", "6", "--brute-force")
    assert code == 0 and not doc["flags"]
    rows = {r["index"]: r["value"] for r in doc["rows"]}
    assert rows["4,0"] == "2" and rows["6,0"] == "5"
    code, doc = run_json(capsys, "paths", "--weights", "lambda", "--m", "2", "--n", "8")
    rows = {r["index"]: r["value"] for r in doc["rows"]}
    assert [rows[f"{2 * n},0"] for n in range(5)] == ["1", "2/3", "1", "2", "14/3"]


def test_verify_ok(capsys):
    code, doc = run_json(capsys, "verify", "eq-1.19", "--max-n", "8")
    assert code == 0
    assert doc["rows"][0]["index"] == "eq-1.19" and doc["rows"][0]["value"] == "pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    orig = get_check("eq-1.18")
    monkeypatch.setitem(core.REGISTRY, "eq-1.18",
                        dataclasses.replace(orig, evaluate=lambda n, ell: (n, ell)))
    code, doc = run_json(capsys, "verify", "eq-1.18", "--max-n", "2")
    assert code == 1
    assert doc["rows"][0]["value"] == "fail" and "smallest_failure" in doc["rows"][0]


@pytest.mark.parametrize("argv", [
    ["verify", "eq-bogus"],
    ["family", "legendre"],
    ["moments", "nope"],
    ["sequence", "primes"],
    ["family", "l", "--format", "yaml"],
    ["family", "l", "--s", "abc"],
    ["verify", "--max-n", "1000"],
    ["paths", "--n", "40", "--brute-force"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    if not argv or argv[0] == "nonsense" or "--format" in argv or "abc" in argv:
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
    else:
        code, out, err = run(capsys, *argv)
        assert code == 2 and "error" in err and out == ""


def test_internal_error(capsys, monkeypatch):
    def boom(args):
        raise RuntimeError("synthetic")
    monkeypatch.setattr(cli, "run", boom)
    code, out, err = run(capsys, "sequence", "tangent")
    assert code == 3 and "internal error" in err


def test_csv_and_latex(capsys):
    code, out, _ = run(capsys, "sequence", "tangent", "--count", "3", "--format", "csv")
    assert out.splitlines() == ["index,value", "0,1", "1,2", "2,16"]
    code, out, _ = run(capsys, "family", "vq", "--n", "2", "--format", "csv")
    assert out.splitlines()[0] == "index,pow,s_pow,coeff"
    code, out, _ = run(capsys, "sequence", "q-tangent", "--count", "2", "--format", "latex")
    assert out.startswith("\\begin{tabular}") and "$q + q^2$" in out
    code, out, _ = run(capsys, "sequence", "l-at-1", "--m", "2", "--count", "12", "--format", "latex")
    assert "% flag:" in out


def test_out_file_and_determinism(capsys, tmp_path):
    target = tmp_path / "doc.json"
    code, out, _ = run(capsys, "family", "v", "--m", "1", "--n", "5", "--out", str(target))
    assert code == 0 and out == ""
    first = target.read_bytes()
    run(capsys, "family", "v", "--m", "1", "--n", "5", "--out", str(target))
    assert target.read_bytes() == first
    jsonschema.validate(json.loads(first), cli.OUTPUT_SCHEMA)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcatalan", "sequence", "tangent", "--count", "3",
                           "--format", "csv"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[-1] == "2,16"
    proc = subprocess.run([sys.executable, "-m", "qcatalan", "verify", "eq-bogus"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
