import json

import pytest

from hessberg import __version__
from hessberg import main as main_module
from hessberg.main import SuiteConfig, check_hessenberg_function, main, run_suite
from hessberg.errors import CeilingExceededError
from hessberg.hessfn import make
from hessberg.rootsystem import LieType


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_roots_g2(capsys):
    code, report = run_json(capsys, "roots", "--type", "G2")
    assert code == 0
    assert report["weyl_group_order"] == 12
    assert report["covering_ok"]
    assert report["heights"]["1,6"] == 5
    assert report["version"] == __version__


def test_roots_by_family_and_rank(capsys):
    code, report = run_json(capsys, "roots", "--type", "A", "--rank", "3")
    assert code == 0
    assert report["label"] == "A2"
    assert sum(len(c) for c in report["chains"]) == 3


def test_hess_enumeration(capsys):
    code, report = run_json(capsys, "hess", "--type", "A", "--rank", "4")
    assert code == 0
    assert report["count"] == 14


def test_hess_reports_violations(capsys):
    code, report = run_json(capsys, "hess", "--h", "D4:5,4,3,4")
    assert code == 1
    assert report["violations"] == ["D(3)", "D(5)"]


def test_hess_lists_sub_functions(capsys):
    code, report = run_json(capsys, "hess", "--h", "A2:2,3,3", "--list-sub")
    assert code == 0
    assert report["sub"] == [[1, 2, 3], [1, 3, 3], [2, 2, 3], [2, 3, 3]]


def test_ideal(capsys):
    code, report = run_json(capsys, "ideal", "--h", "D4:3,5,4,7")
    assert code == 0
    assert [g["degree"] for g in report["generators"]] == [3, 4, 2, 4]
    assert report["generators"][3]["poly"] == "4*x1*x2*x3*x4"


def test_hilbert(capsys):
    code, report = run_json(capsys, "hilbert", "--h", "G2:6,3,3")
    assert code == 0
    assert report["hilbert"] == [1, 2, 2, 2, 2, 2, 1]
    assert report["match"] and report["palindromic"]


def test_basis_dump_has_traces(capsys):
    code, report = run_json(capsys, "basis", "--h", "D4:2,3,4,5", "--dump")
    assert code == 0
    assert report["is_basis"]
    assert all("trace" in el for el in report["elements"])


def test_basis_with_permutations(capsys):
    code, report = run_json(capsys, "basis", "--h", "B2:4,3", "--perm-seed", "5")
    assert code == 0
    assert report["is_basis"]
    assert sorted(report["perms"][0]) == [2, 3, 4]


def test_pdual(capsys):
    code, report = run_json(capsys, "pdual", "--h", "A2:3,3,3")
    assert code == 0
    assert report["count"] == 5
    assert report["independent"]
    scalars = {tuple(c["h_sub"]): c["scalar"] for c in report["classes"]}
    assert scalars[(1, 2, 3)] == "1/6"


def test_gysin(capsys):
    code, report = run_json(capsys, "gysin", "--h", "G2:2,2,3", "--sub", "G2:1,2,3")
    assert code == 0
    assert report["maps"][0]["rank"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["ideal"],
        ["suite", "--type", "E6"],
        ["suite", "--type", "A", "--rank", "12"],
        ["basis", "--h", "D4:3,5,4,7", "--perm-seed", "3"],
        ["gysin", "--h", "A2:2,3,3", "--sub", "A2:3,3,3"],
        ["ideal", "--h", "D4:5,4,3,4"],
        ["hess", "--h", "A2:1,2"],
        ["roots", "--type", "A"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_ceiling_names_override(capsys):
    code, _, err = run(capsys, "suite", "--type", "D", "--rank", "9")
    assert code == 2
    assert "--ceiling-override" in err


def test_check_single_function():
    config = SuiteConfig(seed=1, perm_samples=1, coeff_samples=1, nf_samples=5)
    result = check_hessenberg_function(make(LieType("C", 2), (3, 3)), config)
    assert all(result["checks"].values()), result["errors"]
    assert result["dim"] == 6


def test_run_suite_refuses_above_ceiling():
    with pytest.raises(CeilingExceededError):
        run_suite(LieType("B", 6), SuiteConfig(0, 1, 1, 1), ceiling=4)


def test_suite_type_a(capsys, quick_config):
    code, report = run_json(capsys, "suite", "--type", "A", "--rank", "3")
    assert code == 0
    assert report["passed"]
    assert len(report["instances"]) == 5
    assert report["suite_checks"]["cofactor_injectivity"]["ok"]
    assert "F4" in report["out_of_scope"]


@pytest.mark.slow
def test_suite_d4(capsys, quick_config):
    code, report = run_json(capsys, "suite", "--type", "D", "--rank", "4", "--jobs", "2")
    assert code == 0
    assert len(report["instances"]) == 50
    assert report["failures"] == []


def test_suite_g2(capsys, quick_config):
    code, report = run_json(capsys, "suite", "--type", "G")
    assert code == 0
    assert len(report["instances"]) == 8


def test_suite_report_is_reproducible(capsys, quick_config):
    _, first, _ = run(capsys, "suite", "--type", "A", "--rank", "3", "--seed", "5", "--json")
    _, second, _ = run(capsys, "suite", "--type", "A", "--rank", "3", "--seed", "5", "--json")
    assert first == second
    assert json.loads(first)["seed"] == 5


def test_crashed_check_becomes_failed_row(monkeypatch):
    real = main_module.check_hessenberg_function

    def flaky(h, config):
        if h.values == (1, 3, 3):
            raise ZeroDivisionError("boom")
        return real(h, config)

    monkeypatch.setattr(main_module, "check_hessenberg_function", flaky)
    report = run_suite(LieType("A", 3), SuiteConfig(0, 1, 1, 5))
    assert len(report["instances"]) == 5
    assert {"h": "A2:1,3,3", "check": "worker"} in report["failures"]
    crashed = next(r for r in report["instances"] if r["values"] == [1, 3, 3])
    assert "ZeroDivisionError" in crashed["errors"]["worker"]
    assert not report["passed"]


def test_ceiling_from_config(capsys, isolated_config):
    isolated_config.write_text(json.dumps({"ceilings": {"A": 3}}))
    code, _, err = run(capsys, "hess", "--type", "A", "--rank", "4")
    assert code == 2
    assert "ceiling (3)" in err
    code, _, _ = run(capsys, "hess", "--type", "A", "--rank", "4", "--ceiling-override")
    assert code == 0
