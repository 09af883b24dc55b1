import json
from pathlib import Path

import pytest

from deligne_simpson import reduction as rd
from deligne_simpson import spectra as sp
from deligne_simpson import tuple_lab as tl
from deligne_simpson.cli import main
from deligne_simpson.workbench.export import dumps

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "4,3,3")
    assert code == 0 and out.strip() == "3,3,3,1"
    code, out, _ = run(capsys, "dual", "3,2", "--json")
    assert code == 0 and json.loads(out) == {"partition": [3, 2], "dual": [2, 2, 1]}
    code, _, err = run(capsys, "dual", "4,x")
    assert code == 2 and "error" in err


def test_analyze_example1(capsys):
    path = str(FIXTURES / "example1.analyze.json")
    code, out, _ = run(capsys, "analyze", "-i", path, "--trace", "--explore-choices", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kappa"] == 2
    assert payload["rigidity"] == "rigid"
    assert payload["expected_dim"] == 15
    assert payload["chain"] == [4, 3, 1]
    assert payload["verdict"]["solvable"] is True
    assert payload["genericity"]["verdict"] == "relatively_generic"
    assert payload["genericity"]["basic"]["q"] == 2
    assert payload["choice_exploration"]["verdicts_agree"] is True
    assert [s["n"] for s in payload["trace"]["stages"]] == [4, 3, 1]
    code, out, _ = run(capsys, "analyze", "-i", path)
    assert code == 0 and "verdict: solvable" in out


def test_analyze_without_spectrum(tmp_path, capsys):
    payload = {"jnfs": [{"multiplicities": [1, 1]}, {"multiplicities": [1, 1]}]}
    path = tmp_path / "pair.json"
    path.write_text(dumps(payload), encoding="utf-8")
    code, out, _ = run(capsys, "analyze", "-i", str(path), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["genericity"] is None
    assert data["verdict"]["solvable"] is False


def test_analyze_malformed_inputs(tmp_path, capsys):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json", encoding="utf-8")
    assert run(capsys, "analyze", "-i", str(bad_json))[0] == 2
    assert run(capsys, "analyze", "-i", str(tmp_path / "missing.json"))[0] == 2
    mismatched = tmp_path / "mismatch.json"
    mismatched.write_text(
        dumps({
            "jnfs": [{"multiplicities": [2, 2]}, {"multiplicities": [2, 2]}],
            "spectrum": {
                "mode": "multiplicative",
                "symbols": [],
                "classes": [[{"scalar": {"exponents": {}, "phase": "0"}, "mult": 2}]] * 2,
            },
        }),
        encoding="utf-8",
    )
    code, _, err = run(capsys, "analyze", "-i", str(mismatched))
    assert code == 2 and "does not match" in err


def test_analyze_skips_oversized_spectra(tmp_path, capsys):
    n = 14
    payload = {
        "jnfs": [{"multiplicities": [n]}] * 2,
        "spectrum": {
            "mode": "multiplicative",
            "symbols": [],
            "classes": [[{"scalar": {"exponents": {}, "phase": "0"}, "mult": n}]] * 2,
        },
    }
    path = tmp_path / "big.json"
    path.write_text(dumps(payload), encoding="utf-8")
    code, out, err = run(capsys, "analyze", "-i", str(path), "--json")
    assert code == 0
    assert json.loads(out)["genericity"] == {"skipped": "n > 12"}
    assert "skipping relation enumeration" in err


def test_verify_example4(capsys):
    path = str(FIXTURES / "example4_first_quadruple.verify.json")
    code, out, _ = run(capsys, "verify", "-i", path, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["closure"] is True
    assert payload["centralizer_dim"] == 1
    assert payload["tangent_dim"] == 8
    assert payload["expected_dim"] == 8
    assert payload["irreducible"] is False
    code, out, _ = run(capsys, "verify", "-i", path)
    assert code == 0 and "centralizer_dim = 1" in out


def test_corpus_cli(capsys):
    code, out, _ = run(capsys, "corpus", "--example", "example3")
    assert code == 0
    assert "expectations passed" in out
    code, out, _ = run(capsys, "corpus", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert run(capsys, "corpus", "--example", "nope")[0] == 2


def test_shipped_files_roundtrip_bit_exactly():
    files = sorted(FIXTURES.glob("*.json"))
    assert len(files) == 19
    for path in files:
        raw = path.read_text(encoding="utf-8")
        data = json.loads(raw)
        if path.name.endswith(".analyze.json"):
            out = {"jnfs": rd.JnfTuple.from_json(data["jnfs"]).to_json()}
            if "spectrum" in data:
                out["spectrum"] = sp.SpectrumAssignment.from_json(data["spectrum"]).to_json()
        else:
            out = tl.MatrixTuple.from_json(data).to_json()
        assert dumps(out) == raw, f"round-trip mismatch for {path.name}"


def test_shipped_files_match_builders(tmp_path):
    from deligne_simpson.workbench.export import write_fixture_files

    written = write_fixture_files(tmp_path)
    assert {p.name for p in written} == {p.name for p in FIXTURES.glob("*.json")}
    for path in written:
        shipped = (FIXTURES / path.name).read_text(encoding="utf-8")
        assert path.read_text(encoding="utf-8") == shipped, path.name


def test_cli_analyze_accepts_every_shipped_analyze_file(capsys):
    for path in sorted(FIXTURES.glob("*.analyze.json")):
        code, out, _ = run(capsys, "analyze", "-i", str(path), "--json")
        assert code == 0, path.name
        assert json.loads(out)["verdict"]["solvable"] in (True, False)


def test_cli_verify_accepts_every_shipped_verify_file(capsys):
    for path in sorted(FIXTURES.glob("*.verify.json")):
        code, out, _ = run(capsys, "verify", "-i", str(path), "--json")
        assert code == 0, path.name
        assert json.loads(out)["closure"] is True, path.name
