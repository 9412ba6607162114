import math

import pytest

from fs_lab.errors import InvalidAlpha
from fs_lab.services.bounds import fs_bound_value, thresholds
from fs_lab.services.verify import (
    CONTINUITY_TOL,
    DEFAULT_ALPHAS,
    ORACLE_TOL,
    check_case_e,
    check_continuity,
    run_verification,
    sweep_lambdas,
)


def test_default_run_passes():
    report = run_verification()
    assert report.passed
    names = [c.name for c in report.checks]
    assert names == [
        "oracle_vs_theorem",
        "branch_continuity",
        "outer_sharpness",
        "case_f_sharpness",
        "case_d_sharpness",
        "case_e_exactness",
    ]
    oracle = report.checks[0]
    assert oracle.max_deviation <= ORACLE_TOL
    assert oracle.worst_alpha in DEFAULT_ALPHAS


def test_perturbed_bound_is_caught():
    def inflated(alpha, lam):
        return fs_bound_value(alpha, lam) * 1.001

    report = run_verification(alphas=[1.5], steps=11, bound_fn=inflated)
    assert not report.passed
    failed = {c.name for c in report.checks if not c.passed}
    assert {"oracle_vs_theorem", "outer_sharpness", "case_f_sharpness", "case_d_sharpness"} <= failed
    worst = report.checks[0]
    assert worst.worst_alpha == 1.5
    assert worst.worst_lambda is not None


def test_nan_bound_is_caught():
    def holey(alpha, lam):
        return math.nan if lam > 1 else fs_bound_value(alpha, lam)

    report = run_verification(alphas=[1.5], steps=11, bound_fn=holey)
    assert not report.passed
    by_name = {c.name: c for c in report.checks}
    for name in ("oracle_vs_theorem", "outer_sharpness"):
        assert not by_name[name].passed
        assert math.isinf(by_name[name].max_deviation)
        assert by_name[name].worst_lambda > 1


def test_sweep_spans_all_cases():
    th = thresholds(2.0)
    lambdas = sweep_lambdas(2.0, 101)
    assert len(lambdas) == 101
    assert lambdas[0] == pytest.approx(th.t0 - 0.2)
    assert lambdas[-1] == pytest.approx(th.t4 + 0.2)


def test_continuity_check():
    result = check_continuity([1.01, 1.5, 2.0])
    assert result.passed
    assert result.tolerance == CONTINUITY_TOL


def test_case_e_check():
    assert check_case_e([1.2, 2.0]).max_deviation <= 1e-12


def test_rejects_bad_alpha():
    with pytest.raises(InvalidAlpha):
        run_verification(alphas=[0.5], steps=5)
