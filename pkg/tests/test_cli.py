import json
import subprocess
import sys

import pytest

from dftalg.cli import main, parse_n_values


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _records(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_parse_n_values():
    assert parse_n_values("3..6") == [3, 4, 5, 6]
    assert parse_n_values("5,3,5") == [3, 5]
    assert parse_n_values("3..4,8") == [3, 4, 8]


def test_verify_all_exact(capsys):
    code, out, _ = _run(capsys, "verify", "--n", "3..9", "--relations", "all", "--backend", "exact")
    assert code == 0
    recs = _records(out)
    degenerate = {r["relation_id"] for r in recs if r["verdict"] == "Degenerate"}
    assert degenerate == {"cubic", "jacobi", "casimir_q1", "casimir_heun"}
    assert all(r["n"] == 4 for r in recs if r["verdict"] == "Degenerate")
    keys = [(r["n"], r["relation_id"], r["backend"]) for r in recs]
    assert keys == sorted(keys)


def test_verify_aw3_both(capsys):
    code, out, _ = _run(capsys, "verify", "--n", "5", "--relations", "aw3", "--backend", "both")
    recs = _records(out)
    assert code == 0 and len(recs) == 2
    assert {r["backend"] for r in recs} == {"exact", "float"}
    assert {r["verdict"] for r in recs} == {"ExactZero", "ResidualNorm"}


def test_verify_small_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "2"])
    assert exc.value.code == 2
    assert "N must be ≥ 3" in capsys.readouterr().err


def test_unknown_relation_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n", "5", "--relations", "aw9"])
    assert exc.value.code == 2


def test_determinism(tmp_path, monkeypatch):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    monkeypatch.setenv("VERIFIER_MAX_THREADS", "1")
    assert main(["verify", "--n", "3..7", "--backend", "both", "--seed", "11", "--no-timestamps", "--out", str(a)]) == 0
    monkeypatch.setenv("VERIFIER_MAX_THREADS", "6")
    assert main(["verify", "--n", "3..7", "--backend", "both", "--seed", "11", "--no-timestamps", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "elapsed_ms" not in a.read_text()


def test_io_error(capsys, tmp_path):
    code, _, err = _run(capsys, "verify", "--n", "5", "--relations", "aw", "--out", str(tmp_path / "missing" / "x"))
    assert code == 3 and "cannot write" in err


def test_failed_exit_code(capsys, monkeypatch):
    from dftalg import cli, relations

    def broken(N, backend):
        return [relations.dft_negative_control(N, backend)]

    monkeypatch.setitem(relations.RELATION_GROUPS, "aw", broken)
    code, out, _ = _run(capsys, "verify", "--n", "5", "--relations", "aw")
    assert code == 1 and _records(out)[0]["verdict"] == "Failed"
    assert cli.EXIT_FAILED == 1


def test_text_format(capsys):
    code, out, _ = _run(capsys, "verify", "--n", "4", "--relations", "cubic,aw", "--format", "text")
    assert code == 0
    assert "Degenerate" in out and "ExactZero" in out


def test_dump_examples(capsys):
    code, out, _ = _run(capsys, "dump", "--n", "3", "X")
    rec = json.loads(out)
    assert code == 0 and rec["operator_id"] == "X" and rec["backend"] == "exact"
    diag = [rec["entries"][k][k] for k in range(3)]
    assert diag[0]["coeffs"] == ["0"] * 4
    assert diag[1] == {"order": 12, "coeffs": ["0", "2", "0", "-1"]}  # 2 s_1 = sqrt(3)

    code, out, _ = _run(capsys, "dump", "--n", "4", "Ztilde", "--backend", "float")
    ent = json.loads(out)["entries"]
    assert [[c["re"] for c in row] for row in ent] == [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]

    code, out, _ = _run(capsys, "dump", "--n", "5", "Pd")
    ent = json.loads(out)["entries"]
    for k in range(5):
        for l in range(5):
            want = ["1" if k == (-l) % 5 else "0"] + ["0"] * 7
            assert ent[k][l]["coeffs"] == want


def test_dump_unknown_operator(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dump", "--n", "5", "Foo"])
    assert exc.value.code == 2


def test_spectra_examples(capsys):
    _, out, _ = _run(capsys, "spectra", "--n", "5", "--ops", "A")
    assert _records(out)[0]["rank"] == 4
    _, out, _ = _run(capsys, "spectra", "--n", "6", "--ops", "X,Y")
    x, y = _records(out)
    assert max(abs(a - b) for a, b in zip(x["eigenvalues"], y["eigenvalues"])) < 1e-10
    _, out, _ = _run(capsys, "spectra", "--n", "8", "--ops", "Z")
    assert _records(out)[0]["multiplicities"] == [1, 2, 2, 2, 1]


def test_audit(capsys):
    code, out, _ = _run(capsys, "audit", "--n", "5,6")
    recs = _records(out)
    assert code == 0
    assert {r["kind"] for r in recs} == {"constant_audit", "overlap", "ladder"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dftalg", "verify", "--n", "3", "--relations", "aw"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and '"ExactZero"' in proc.stdout
