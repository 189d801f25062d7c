import json
import subprocess
import sys

import pytest

from deltajac.cli import OutputRecord, cmd_jacobian, main, read_csv
from deltajac.graph import DeltaGraphSpec

from oracles import sympy_torsion
from deltajac.graph import delta_laplacian


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestJacobian:
    def test_closed(self, capsys):
        code, out, _ = run(capsys, "jacobian", "-n", "3", "--method", "closed")
        assert code == 0
        assert out == "Z/6 ⊕ Z/6 ⊕ Z/18 ⊕ Z/18\n"

    def test_snf_general(self, capsys):
        code, out, _ = run(capsys, "jacobian", "-n", "4", "-k", "1", "-l", "2", "-m", "2",
                           "--method", "snf")
        assert code == 0
        expected = sympy_torsion(delta_laplacian(DeltaGraphSpec(4, 1, 2, 2)))
        assert out.strip() == " ⊕ ".join(f"Z/{d}" for d in expected)

    def test_method_gate(self, capsys):
        code, _, err = run(capsys, "jacobian", "-n", "3", "-k", "1", "-l", "2", "-m", "1",
                           "--method", "closed")
        assert code == 3
        assert "not applicable" in err

    def test_split_gate(self, capsys):
        assert run(capsys, "jacobian", "-n", "5", "-k", "2", "--method", "split")[0] == 3

    @pytest.mark.parametrize("argv", [["-n", "2"], ["-n", "5", "-k", "5"]])
    def test_invalid_spec(self, capsys, argv):
        assert run(capsys, "jacobian", *argv)[0] == 2

    def test_default_methods(self):
        assert cmd_jacobian(DeltaGraphSpec(4)).method == "closed"
        assert cmd_jacobian(DeltaGraphSpec(5, 1, 2, 2)).method == "theorem1"

    def test_json_record(self, capsys):
        code, out, _ = run(capsys, "jacobian", "-n", "4", "--format", "json")
        assert code == 0
        d = json.loads(out)
        assert d == {"n": 4, "k": 1, "l": 1, "m": 1, "method": "closed",
                     "torsion": [5, 5, 35, 420], "free_rank": 1,
                     "order": "367500", "trees": "367500"}

    def test_verbose_as_stated(self, capsys):
        _, out, _ = run(capsys, "jacobian", "-n", "4", "-v")
        assert "as stated: Z/1 ⊕ Z/5 ⊕ Z/5 ⊕ Z/35 ⊕ Z/420" in out


class TestTrees:
    def test_count(self, capsys):
        assert run(capsys, "trees", "-n", "3")[1] == "11664\n"

    def test_disconnected(self, capsys):
        code, out, err = run(capsys, "trees", "-n", "6", "-k", "2", "-l", "2", "-m", "4")
        assert code == 0 and out == "0\n" and "disconnected" in err


class TestVerify:
    def test_general_sweep(self, capsys):
        code, out, err = run(capsys, "verify", "--n-max", "12", "--jumps-max", "3")
        assert code == 0
        assert "FAIL" not in out
        assert "skipping disconnected Delta(6;2,2,2)" in err

    def test_torus_only(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "24")
        assert code == 0
        rows = out.strip().splitlines()[1:]
        assert len(rows) == 22
        assert all("closed,snf,theorem1,split" in r for r in rows)

    def test_usage(self, capsys):
        assert run(capsys, "verify", "--n-max", "2")[0] == 2

    def test_parallel_matches_serial(self, capsys):
        _, serial, _ = run(capsys, "verify", "--n-max", "7", "--jumps-max", "2")
        _, parallel, _ = run(capsys, "verify", "--n-max", "7", "--jumps-max", "2", "--jobs", "2")
        assert serial == parallel

    def test_failure_exit_code(self, capsys, monkeypatch):
        from deltajac import cli
        from deltajac.closed_form import VerificationReport
        from deltajac.groups import AbelianGroup

        def broken(_):
            return VerificationReport(3, 1, 1, 1, {"snf": AbelianGroup((6,), 1),
                                                   "closed": AbelianGroup((7,), 1)}, 6)
        monkeypatch.setattr(cli, "_verify_one", broken)
        code, out, err = run(capsys, "verify", "--n-max", "3")
        assert code == 1
        assert "FAIL" in out and "counterexample" in err


class TestSweep:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "sweep", "3", "6", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        records = read_csv(out)
        assert [r.n for r in records] == [3, 4, 5, 6]
        assert records[1].order == 367500 and records[1].trees == 367500
        assert records[1].nu == 5 and records[1].mu == 7

    def test_json_single(self, capsys):
        code, out, _ = run(capsys, "sweep", "3", "3", "--format", "json")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["torsion"] == [6, 6, 18, 18]

    def test_bad_range(self, capsys):
        assert run(capsys, "sweep", "5", "4")[0] == 2
        assert run(capsys, "sweep", "2", "4")[0] == 2


class TestRecords:
    def test_json_round_trip(self, capsys):
        _, out, _ = run(capsys, "sweep", "3", "12")
        for line in out.strip().splitlines():
            rec = OutputRecord.from_json(line)
            assert rec.to_json() == line
            expected = cmd_jacobian(DeltaGraphSpec(rec.n), "closed")
            assert (rec.torsion, rec.order, rec.trees) == (expected.torsion, expected.order,
                                                           expected.trees)

    def test_in_memory_round_trip(self):
        rec = cmd_jacobian(DeltaGraphSpec(7, 1, 2, 3))
        assert OutputRecord.from_json(rec.to_json()) == rec
        assert OutputRecord.from_csv_row(rec.to_csv_row()) == rec

    def test_big_numbers_are_strings(self):
        rec = cmd_jacobian(DeltaGraphSpec(40))
        d = json.loads(rec.to_json())
        assert isinstance(d["order"], str) and int(d["order"]) > 2 ** 64
        assert OutputRecord.from_json(rec.to_json()) == rec


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "deltajac", "sweep", "3", "8", "--format", "csv"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stderr.startswith(b"# sweep")
