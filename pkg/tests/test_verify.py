"""Suite orchestration: pass/fail reporting, determinism, corruption tests."""

import json

import pytest

from qident.report import Check, VerificationReport, series_check, sweep_check
from qident.series import QSeries
from qident.verify import SUITE_NAMES, run_suites


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_passes_small(name):
    (report,) = run_suites(name, 48, 120)
    assert report.suite == name
    assert report.passed, report.failures


def test_all_runs_every_suite_in_stable_order():
    reports = run_suites("all", 32, 60)
    assert [r.suite for r in reports] == list(SUITE_NAMES)
    again = run_suites("all", 32, 60)
    assert [r.to_dict() for r in reports] == [r.to_dict() for r in again]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suites("nope", 32, 60)


def test_sweep_check_reports_first_failure():
    pairs = [(1, 1, 1), (2, 5, 5), (3, 7, 8), (4, 0, 9)]
    check = sweep_check("demo", iter(pairs))
    assert not check.passed
    assert check.locus == 3 and check.expected == "7" and check.actual == "8"


def test_series_check_failure_carries_exact_values():
    a = QSeries([1, 2, 3], 3)
    b = QSeries([1, 2, 4], 3)
    check = series_check("demo", a, b, 3)
    assert check.locus == 2
    assert check.expected == "4" and check.actual == "3"


def test_corrupted_table_fails_suite(monkeypatch):
    # breaking one input table must surface as a failing check, not silence
    from qident import _kernels

    real = _kernels.sigma_table

    def broken(maxn, k=0):
        table = real(maxn, k).copy()
        if maxn >= 35:
            table[35] += 1
        return table

    monkeypatch.setattr(_kernels, "sigma_table", broken)
    (report,) = run_suites("theorem61", 32, 60)
    assert not report.passed
    assert any(c.locus == 35 for c in report.failures)


def test_corrupted_class_number_fails_suite(monkeypatch):
    import qident.verify as V

    real = V.hurwitz_H

    def broken(n):
        value = real(n)
        return value + 1 if n == 4 * 21 else value

    monkeypatch.setattr(V, "hurwitz_H", broken)
    (report,) = run_suites("theorem17", 32, 60)
    assert not report.passed
    assert any(c.locus == 21 for c in report.failures)


def test_report_json_roundtrip():
    (report,) = run_suites("dkm", 40, 50)
    blob = json.dumps(report.to_dict())
    parsed = VerificationReport.from_dict(json.loads(blob))
    assert json.dumps(parsed.to_dict()) == blob
    for c in parsed.checks:
        assert set(c.to_dict()) == {"name", "status", "locus", "expected",
                                    "actual"}


def test_check_constructors():
    ok = Check.ok("x")
    assert ok.passed and ok.locus is None
    bad = Check.fail("x", 5, 1, 2)
    assert not bad.passed and bad.expected == "1" and bad.actual == "2"
