import json
import subprocess
import sys

import pytest

from localmodels import campaigns
from localmodels.cli import parse_eigenvalues, parse_partition, run
from localmodels.config import BUDGET_ENV_VAR
from localmodels.errors import RangeError
from localmodels.report import VerificationReport


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_helpers():
    assert list(parse_partition("[2,1]")) == [2, 1]
    assert list(parse_partition("2 1")) == [2, 1]
    assert list(parse_partition("3,0")) == [3]
    assert parse_eigenvalues("0:2,1:1") == [(0, 2), (1, 1)]


def test_strata_plain_and_json(capsys):
    code, out, _ = call(capsys, "strata", "--r", "2", "--e", "2", "--d", "2")
    assert code == 0 and out.strip() == "[[2],[1,1]]"
    code, out, _ = call(capsys, "strata", "--r", "2", "--e", "2", "--d", "2", "--json")
    data = json.loads(out)
    assert data["strata"] == [[2], [1, 1]] and data["minimum"] == [1, 1]


def test_dims_reports_agreement(capsys):
    code, out, _ = call(capsys, "dims", "--r", "5", "--e", "2", "--d", "3")
    assert code == 0
    assert "special fiber  2" in out and "generic fiber  2" in out and "agree" in out
    code, out, _ = call(capsys, "dims", "--r", "5", "--e", "2", "--d", "3", "--json")
    data = json.loads(out)
    assert data["special_fiber"] == data["generic_fiber"] == 2 and data["equal"]


def test_kostka_commands(capsys):
    assert call(capsys, "kostka", "--shape", "2,1", "--content", "1,1,1")[1].strip() == "2"
    assert call(capsys, "kostka-foulkes", "--shape", "2,1", "--content", "1,1,1")[1].strip() == "q + q^2"


def test_verify_coinvariant(capsys):
    code, out, _ = call(capsys, "verify-coinvariant", "--r", "3", "--e", "2", "--field", "q")
    assert code == 0
    assert 'expected="3" computed="3"' in out
    code, out, _ = call(capsys, "verify-coinvariant", "--r", "3", "--e", "2", "--field", "q", "--json")
    report = VerificationReport.from_json(out)
    assert report.passed and report.cases[0].expected == "3"


def test_single_verifications(capsys):
    assert call(capsys, "verify-dcp-lemma", "--r", "2")[0] == 0
    assert call(capsys, "verify-kostant", "--r", "3")[0] == 0
    assert call(capsys, "verify-tensor-kostka", "--d", "3", "--rvec", "1,1,1")[0] == 0


def test_emit_ideal_kinds(capsys):
    code, out, _ = call(capsys, "emit-ideal", "--kind", "naive", "--r", "2", "--e", "2")
    assert code == 0 and "[sigma2]" in out and "[A^2]" in out
    code, out, _ = call(capsys, "emit-ideal", "--kind", "coinvariant", "--r", "2", "--e", "2",
                        "--groebner", "--json")
    data = json.loads(out)
    assert data["variables"] == ["X1", "X2"]
    assert data["groebner_basis"] == ["X1 + X2", "X2^2"]
    code, out, _ = call(capsys, "emit-ideal", "--kind", "dcp-generic", "--eigenvalues", "0:1,1:1",
                        "--field", "5")
    assert code == 0
    for kind, extra in [("char-poly", ["--r", "2"]), ("s-block", ["--r", "2"]),
                        ("dcp-special", ["--rvec", "1,1"]), ("e2", ["--r1", "1", "--r2", "1"])]:
        assert call(capsys, "emit-ideal", "--kind", kind, *extra)[0] == 0


def test_springer_and_lattice(capsys):
    code, out, _ = call(capsys, "springer-count", "--p", "2", "--s", "2,1", "--rvec", "2,1")
    assert code == 0 and "count 1" in out
    code, out, _ = call(capsys, "springer-count", "--p", "3", "--s", "2,1", "--rvec", "2,1",
                        "--conjugate", "--json", "--no-timings")
    data = json.loads(out)
    assert data["count"] == 1
    code, out, _ = call(capsys, "lattice-stratify", "--p", "2", "--exponents", "3,1", "--r", "3", "--json")
    data = json.loads(out)
    assert data["total"] == 3
    code, out2, _ = call(capsys, "lattice-stratify", "--p", "2", "--exponents", "3,1", "--r", "3",
                         "--json", "--method", "filter")
    assert json.loads(out2)["strata"] == data["strata"]


def test_multiplicities_sorted_by_dominance(capsys):
    code, out, _ = call(capsys, "multiplicities", "--d", "3", "--rvec", "1,1,1", "--json")
    data = json.loads(out)
    assert [e["partition"] for e in data["entries"]] == [[3], [2, 1], [1, 1, 1]]
    assert [e["multiplicity"] for e in data["entries"]] == [1, 2, 1]


@pytest.mark.parametrize("argv", [
    ["no-such-command"],
    ["strata", "--r", "x", "--e", "2", "--d", "2"],
    ["strata", "--r", "2"],
    ["kostka", "--shape", "2,-1", "--content", "1"],
    ["strata", "--r", "2", "--e", "2", "--d", "2", "--budget", "nonsense=1"],
    ["emit-ideal", "--kind", "dcp-generic", "--eigenvalues", "0:1,5:1", "--field", "5"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_budget_exceeded_exits_3(capsys, monkeypatch):
    assert call(capsys, "verify-coinvariant", "--r", "4", "--e", "3", "--budget", "max_pairs=1")[0] == 3
    monkeypatch.setenv(BUDGET_ENV_VAR, "max_flags=2")
    assert call(capsys, "springer-count", "--p", "2", "--s", "1,1,1", "--rvec", "1,1,1")[0] == 3


def test_failed_case_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(campaigns, "coinvariant_dim_formula", lambda r, e: 999)
    code, out, _ = call(capsys, "verify-coinvariant", "--r", "2", "--e", "2")
    assert code == 1 and "FAIL" in out


def test_verify_all_quick_is_deterministic_and_writes_files(capsys, tmp_path):
    code, first, _ = call(capsys, "verify-all", "--quick", "--json", "--report-dir", str(tmp_path))
    assert code == 0
    code, second, _ = call(capsys, "verify-all", "--quick", "--json")
    assert first == second
    report = VerificationReport.from_json(first)
    assert report.passed and report.campaign == "verify-all-quick"
    names = [c.name for c in report.cases]
    assert names == sorted(names)
    assert all("elapsed_ms" not in c for c in json.loads(first)["cases"])
    for name in ("report.json", "cases.csv", "case_status.png", "lattice_strata.png", "coinvariant.png"):
        assert (tmp_path / name).stat().st_size > 0
    assert (tmp_path / "report.json").read_text() == first


def test_verify_all_with_timings_and_jobs(capsys):
    code, out, _ = call(capsys, "verify-all", "--quick", "--json", "--timings", "--jobs", "2")
    assert code == 0
    assert all("elapsed_ms" in c for c in json.loads(out)["cases"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "localmodels", "strata", "--r", "3", "--e", "2", "--d", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "[[2,1]]"
    proc = subprocess.run([sys.executable, "-m", "localmodels", "strata"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_range_errors_are_usage_errors(capsys):
    with pytest.raises(RangeError):
        campaigns.lattice_homogeneous_case(5, 1, 1, 2)
    assert call(capsys, "multiplicities", "--d", "1", "--rvec", "2")[0] == 2
