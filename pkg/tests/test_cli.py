import json
import subprocess
import sys

import pytest

from toric_lvalues import io
from toric_lvalues.cli import CSV_COLUMNS, fmt, fmt_poly, main
from toric_lvalues.errors import InputError
from fractions import Fraction


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def mat(rows):
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": [x for r in rows for x in r]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_formatting():
    assert fmt(Fraction(1, 2)) == "1/2" and fmt(Fraction(3)) == "3"
    assert fmt(3.14159265358979) == "3.141592654"
    assert fmt_poly((1, 0, 1)) == "1 + t^2"
    assert fmt_poly((1, -1)) == "1 - t"


def test_snf(tmp_path, capsys):
    code, out, _ = run(capsys, "snf", "--matrix", write(tmp_path, "i.json", mat([[1, 0], [0, 1]])))
    assert code == 0 and "invariant factors: 1 1" in out
    code, out, _ = run(capsys, "snf", "--matrix", write(tmp_path, "a.json", mat([[2, 4], [6, 8]])))
    assert code == 0 and "invariant factors: 2 4" in out and "ok" in out
    code, _, err = run(capsys, "snf", "--matrix", write(tmp_path, "t.json", '{"rows": 2, "cols": 2, "entries": [2, 4'))
    assert code == 2 and "malformed" in err
    code, _, _ = run(capsys, "snf", "--matrix", write(tmp_path, "s.json", {"rows": 2, "cols": 2, "entries": [1, 2, 3]}))
    assert code == 2
    code, _, _ = run(capsys, "snf", "--matrix", str(tmp_path / "missing.json"))
    assert code == 2


def times2_record(k=2):
    return {
        "groups": [{"rank": 1}, {"rank": 1}, {"rank": 0, "invariants": [2]}],
        "maps": [mat([[k]]), mat([[1]])],
    }


def test_seqdet(tmp_path, capsys):
    code, out, _ = run(capsys, "seqdet", "--seq", write(tmp_path, "x2.json", times2_record()))
    assert code == 0 and "nu = 2" in out and "torsion product = 2" in out
    code, _, err = run(capsys, "seqdet", "--seq", write(tmp_path, "bad.json", times2_record(3)))
    assert code == 2 and "not exact" in err
    code, out, _ = run(capsys, "seqdet", "--fuzz", "200", "--seed", "7")
    assert code == 0 and "all match" in out


def test_local(tmp_path, capsys):
    triv = {"group": {"rank": 1}, "sigma": mat([[1]]), "order": 1}
    sign = {"group": {"rank": 1}, "sigma": mat([[-1]]), "order": 2}
    code, out, _ = run(capsys, "local", "--q", "5", "--f", "1", "--module", write(tmp_path, "t.json", triv))
    assert code == 0 and "order at s=0 = -1" in out and "1 / (log 5)" in out
    code, out, _ = run(capsys, "local", "--q", "3", "--f", "2", "--module", write(tmp_path, "s.json", sign))
    assert code == 0 and "order at s=0 = 0" in out and "1/2" in out and "P(t) = det(1 - tF) = 1 + t" in out
    code, _, _ = run(capsys, "local", "--q", "3", "--f", "3", "--module", write(tmp_path, "s3.json", dict(sign, order=3)))
    assert code == 2
    place = {"q": 9, "f": 4, "module": {"group": {"rank": 2}, "sigma": mat([[0, -1], [1, 0]]), "order": 4}}
    code, out, _ = run(capsys, "local", "--place", write(tmp_path, "p.json", place))
    assert code == 0 and "1 + t^2" in out
    code, _, _ = run(capsys, "local", "--q", "6", "--f", "1", "--module", write(tmp_path, "t6.json", triv))
    assert code == 2


def test_quadratic(capsys):
    code, out, _ = run(capsys, "quadratic", "--d", "-1", "--at", "both")
    assert code == 0 and "1/2 (order 0)" in out and "0.7853981634" in out
    code, out, _ = run(capsys, "quadratic", "--d", "5")
    assert code == 0 and out.count("0.4812118251") >= 2
    code, _, _ = run(capsys, "quadratic", "--d", "4")
    assert code == 2
    code, out, _ = run(capsys, "quadratic", "--d", "-1", "--remove-primes", "3,5")
    assert code == 0 and "agree" in out
    code, _, _ = run(capsys, "quadratic", "--d", "-1", "--remove-primes", "2")
    assert code == 2
    code, _, _ = run(capsys, "quadratic", "--d", "-1", "--remove-primes", "x")
    assert code == 2


def test_quadratic_precision_error_exit(monkeypatch, capsys):
    import toric_lvalues.lseries as ls

    monkeypatch.setattr(ls, "_l1_digamma", lambda chi: 0.0)
    code, _, err = run(capsys, "quadratic", "--d", "5")
    assert code == 3 and "precision" in err


def test_quadratic_verification_failure_exit(monkeypatch, capsys):
    import toric_lvalues.euler as eu

    real = eu.norm_torus_report

    def skewed(d, tol=1e-8):
        r = real(d, tol)
        r.abs_errors["L0"] = 1.0
        return r

    monkeypatch.setattr(eu, "norm_torus_report", skewed)
    monkeypatch.setattr("toric_lvalues.cli.norm_torus_report", skewed)
    code, _, _ = run(capsys, "quadratic", "--d", "5")
    assert code == 1


def test_quadratic_csv(capsys):
    code, out, _ = run(capsys, "quadratic", "--range", "-10", "13", "--csv", "--at", "both")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0].split(",") == list(CSV_COLUMNS)
    ds = [int(line.split(",")[0]) for line in lines[1:]]
    assert ds == sorted(ds) and 4 not in ds and 0 not in ds and 1 not in ds
    assert len(lines) - 1 == 15


def test_quadratic_parallel_matches_sequential(capsys):
    _, seq_out, _ = run(capsys, "quadratic", "--range", "-30", "30", "--csv")
    _, par_out, _ = run(capsys, "quadratic", "--range", "-30", "30", "--csv", "--jobs", "2")
    assert seq_out == par_out


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0 and out.count("PASS") == 5
    code, out, _ = run(capsys, "selftest", "--quick", "--inject-fault")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "toric_lvalues", "quadratic", "--range", "-20", "20", "--at", "both"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
    cmd = [sys.executable, "-m", "toric_lvalues", "selftest", "--quick", "--seed", "5"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout


def test_record_roundtrips():
    seq = io.sequence_from_record(times2_record())
    assert io.sequence_from_record(io.sequence_to_record(seq)) == seq
    place = io.place_from_record(
        {"q": 4, "f": 2, "module": {"group": {"rank": 1}, "sigma": mat([[-1]]), "order": 2}}
    )
    assert io.place_from_record(io.place_to_record(place)) == place


@pytest.mark.parametrize(
    "rec",
    [
        [],
        {"rows": 1, "cols": 1},
        {"rows": 1, "cols": 1, "entries": [1.5]},
        {"rows": 1, "cols": 1, "entries": [True]},
        {"rows": 1, "cols": 1, "entries": "1"},
    ],
)
def test_bad_matrix_records(rec):
    with pytest.raises(InputError):
        io.matrix_from_record(rec)
