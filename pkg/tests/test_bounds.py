import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fs_lab.errors import DomainError, InvalidAlpha
from fs_lab.schemas import AlphaParam, CaseDParams, CaseEFree, CaseFTheta, OuterExtremal, Regime, SchurPoint
from fs_lab.services.bounds import (
    aux_functions,
    branch1_value,
    branch2_value,
    branch3_value,
    branch4_value,
    case_f_cosine,
    classical_s_bound,
    classify,
    fs_bound,
    fs_bound_value,
    j_function,
    proof_case,
    quad_coeffs,
    thresholds,
)
from fs_lab.services.concave import a23_from_phi23, functional
from fs_lab.services.starlike import phi23_from_schur

alphas = st.floats(min_value=1.01, max_value=2.0)
unit = st.floats(min_value=0.0, max_value=1.0)
angle = st.floats(min_value=0.0, max_value=2 * math.pi)


class TestAlpha:
    @pytest.mark.parametrize("alpha", [1.0, 0.9, 2.1, float("nan"), float("inf")])
    def test_rejected(self, alpha):
        with pytest.raises(InvalidAlpha, match=r"alpha must lie in \(1,2\]"):
            thresholds(alpha)

    def test_accepts_two_with_margin(self):
        assert thresholds(2.0 + 5e-10).t1 == pytest.approx(0.0, abs=1e-8)

    def test_alpha_param_passes_through(self):
        alpha = AlphaParam(alpha=1.5)
        assert quad_coeffs(alpha, 0.3) == quad_coeffs(1.5, 0.3)


class TestQuadCoeffs:
    def test_alpha_two_half(self):
        q = quad_coeffs(2.0, 0.5)
        assert (q.A, q.B, q.C) == pytest.approx((0.875, -0.25, -0.125))
        assert q.D == pytest.approx(-1 / 6)

    @settings(max_examples=200)
    @given(alphas, st.floats(min_value=-2.0, max_value=3.0), unit, angle, unit, angle)
    def test_matches_functional(self, alpha, lam, r, theta, s, psi):
        c0 = r * cmath.exp(1j * theta)
        c1 = s * (1 - r**2) * cmath.exp(1j * psi)
        pair = a23_from_phi23(*phi23_from_schur(SchurPoint(c0=c0, c1=c1)), alpha)
        q = quad_coeffs(alpha, lam)
        assert functional(pair, lam) == pytest.approx(abs(q.A + q.B * c0 + q.C * c0**2 + q.D * c1), abs=1e-11)

    @settings(max_examples=300)
    @given(alphas, st.floats(min_value=-2.0, max_value=3.0), unit, angle, unit, angle)
    def test_bound_dominates(self, alpha, lam, r, theta, s, psi):
        c0 = r * cmath.exp(1j * theta)
        c1 = s * (1 - r**2) * cmath.exp(1j * psi)
        q = quad_coeffs(alpha, lam)
        assert abs(q.A + q.B * c0 + q.C * c0**2 + q.D * c1) <= fs_bound_value(alpha, lam) + 1e-9


class TestThresholds:
    @pytest.mark.parametrize("alpha", np.linspace(1.01, 2.0, 100))
    def test_ordering(self, alpha):
        th = thresholds(alpha)
        assert th.t0 < th.t1 <= 0.0 < th.t2 < th.lam1 < th.t3 < th.lam2 < th.t4

    def test_alpha_two(self):
        th = thresholds(2.0)
        assert th.t0 == pytest.approx(-2 / 3)
        assert th.t1 == pytest.approx(0.0)
        assert th.t2 == pytest.approx(1 / 3)
        assert th.t3 == 2 / 3
        assert th.t4 == pytest.approx(8 / 9)
        assert th.lam2 == pytest.approx((15 + math.sqrt(33)) / 24)

    @pytest.mark.parametrize("alpha", [1.1, 1.5, 2.0])
    def test_lambda_roots(self, alpha):
        th = thresholds(alpha)
        assert th.lam1 * th.lam2 == pytest.approx(4 * (alpha**2 - 1) / (9 * alpha**2))
        assert j_function(alpha, th.lam1) == pytest.approx(0.0, abs=1e-12)
        assert j_function(alpha, th.lam2) == pytest.approx(0.0, abs=1e-12)
        assert j_function(alpha, th.t3) < 0


class TestBranches:
    @pytest.mark.parametrize("alpha", np.linspace(1.01, 2.0, 100))
    def test_continuous_at_breakpoints(self, alpha):
        th = thresholds(alpha)
        assert branch1_value(alpha, th.t2) == pytest.approx(branch2_value(alpha, th.t2), abs=1e-10)
        assert branch2_value(alpha, th.t3) == pytest.approx(branch3_value(alpha, th.t3), abs=1e-10)
        assert branch3_value(alpha, th.lam2) == pytest.approx(branch4_value(alpha, th.lam2), abs=1e-10)

    def test_branch3_at_alpha_two(self):
        assert branch3_value(2.0, 0.7) == pytest.approx(0.6 * math.sqrt(3.6 / 3.57), abs=1e-12)
        assert branch3_value(2.0, 0.7) == pytest.approx(0.6025158, abs=1e-7)

    def test_branch2_at_alpha_two(self):
        assert branch2_value(2.0, 0.5) == pytest.approx(11.5 / 10.5)

    def test_case_e_value(self):
        for alpha in (1.1, 1.5, 2.0):
            assert branch2_value(alpha, 2 / 3) == pytest.approx(alpha / 3)

    @settings(max_examples=200)
    @given(alphas, st.floats(min_value=-3.0, max_value=3.0))
    def test_bound_is_continuous_in_lambda(self, alpha, lam):
        assert abs(fs_bound_value(alpha, lam + 1e-8) - fs_bound_value(alpha, lam)) <= 1e-6


class TestClassify:
    @pytest.mark.parametrize(
        "lam,regime",
        [
            (-3.0, Regime.BRANCH1),
            (0.2, Regime.BRANCH1),
            (0.5, Regime.BRANCH2),
            (2 / 3, Regime.BRANCH2),
            (0.6667, Regime.BRANCH3),
            (0.8, Regime.BRANCH3),
            (0.9, Regime.BRANCH4),
        ],
    )
    def test_alpha_two(self, lam, regime):
        assert classify(2.0, lam) is regime

    @pytest.mark.parametrize("alpha", [1.05, 1.5, 2.0])
    def test_endpoints_go_left(self, alpha):
        th = thresholds(alpha)
        assert classify(alpha, th.t2) is Regime.BRANCH1
        assert classify(alpha, th.t3) is Regime.BRANCH2
        assert classify(alpha, th.lam2) is Regime.BRANCH3

    @pytest.mark.parametrize(
        "lam,case",
        [(-1.0, "1"), (-2 / 3, "1"), (-0.5, "A"), (0.0, "B"), (0.2, "C"), (0.5, "D"),
         (2 / 3, "E"), (0.7, "F"), (0.88, "G"), (8 / 9, "2"), (1.5, "2")],
    )
    def test_proof_case(self, lam, case):
        assert proof_case(2.0, lam) == case


class TestFsBound:
    def test_branch1(self):
        result = fs_bound(2.0, 0.2)
        assert result.value == pytest.approx(3.0 - 0.8)
        assert isinstance(result.extremal, OuterExtremal)

    def test_branch2_case_d(self):
        result = fs_bound(2.0, 0.5)
        assert result.regime is Regime.BRANCH2
        assert isinstance(result.extremal, CaseDParams)
        assert result.extremal.r_m == pytest.approx(3 / 7)

    def test_branch2_case_e(self):
        result = fs_bound(2.0, 2 / 3)
        assert isinstance(result.extremal, CaseEFree)
        assert result.value == pytest.approx(2 / 3)

    def test_branch3(self):
        result = fs_bound(2.0, 0.7)
        assert result.regime is Regime.BRANCH3
        assert isinstance(result.extremal, CaseFTheta)
        assert math.cos(result.extremal.theta0) == pytest.approx(case_f_cosine(2.0, 0.7))
        assert case_f_cosine(2.0, 0.7) == pytest.approx(0.0420168, abs=1e-7)

    def test_branch4(self):
        result = fs_bound(2.0, 0.9)
        assert result.value == pytest.approx(0.6)
        assert isinstance(result.extremal, OuterExtremal)

    def test_thresholds_attached(self):
        assert fs_bound(1.5, 0.1).thresholds == thresholds(1.5)

    def test_serializes(self):
        dumped = fs_bound(2.0, 0.7).model_dump(mode="json")
        assert dumped["regime"] == "Branch3_k1"
        assert dumped["extremal"]["kind"] == "CaseFTheta"

    @settings(max_examples=200)
    @given(alphas, st.floats(min_value=-5.0, max_value=5.0))
    def test_nonnegative(self, alpha, lam):
        assert fs_bound_value(alpha, lam) >= 0.0


class TestAuxFunctions:
    def test_case_d_radii(self):
        aux = aux_functions(2.0, 0.5)
        assert aux.r_m == pytest.approx(0.428571, abs=1e-6)
        assert aux.r_0 == pytest.approx(0.483315, abs=1e-6)
        assert aux.r_m < aux.r_0
        assert aux.g(aux.r_m) == pytest.approx(11.5 / 10.5)

    def test_g_symmetric_about_vertex(self):
        aux = aux_functions(2.0, 0.5)
        for d in (0.05, 0.1, 0.3):
            assert aux.g(aux.r_m + d) == pytest.approx(aux.g(aux.r_m - d), abs=1e-12)
            assert aux.g(aux.r_m + d) < aux.g(aux.r_m)

    def test_case_f_radii(self):
        aux = aux_functions(2.0, 0.7)
        assert aux.r_1 == pytest.approx(0.07128, abs=1e-5)
        assert aux.r_n == pytest.approx(0.073171, abs=1e-6)
        assert aux.r_n > aux.r_1
        assert aux.x_of_r(aux.r_1) == pytest.approx(1.0, abs=1e-10)
        assert aux.k(1.0) == pytest.approx(branch3_value(2.0, 0.7), abs=1e-12)

    def test_case_g_radius(self):
        aux = aux_functions(2.0, 0.88)
        assert aux.r_2 == pytest.approx(0.4514, abs=1e-4)
        assert aux.x_of_r(aux.r_2) == pytest.approx(-1.0, abs=1e-10)

    def test_h_is_squared_modulus(self, rng):
        q = quad_coeffs(1.6, 0.45)
        aux = aux_functions(1.6, 0.45)
        for _ in range(20):
            r, theta = rng.uniform(0, 1), rng.uniform(0, 2 * np.pi)
            c0 = r * cmath.exp(1j * theta)
            expected = abs(q.A + q.B * c0 + q.C * c0**2) ** 2
            assert aux.h(math.cos(theta), r) == pytest.approx(expected, abs=1e-12)

    def test_boundary_values(self):
        q = quad_coeffs(1.5, 0.3)
        aux = aux_functions(1.5, 0.3)
        assert aux.l(0.0) == pytest.approx(q.A - q.D)
        assert aux.l(1.0) == pytest.approx(q.A + q.B + q.C)
        assert aux.n(1.0) == pytest.approx(-q.A + q.B - q.C)

    def test_radii_undefined_at_two_thirds(self):
        aux = aux_functions(2.0, 2 / 3)
        assert aux.r_m is None
        assert aux.r_n is None


class TestClassicalBound:
    def test_values(self):
        assert classical_s_bound(0.0) == pytest.approx(3.0)
        assert classical_s_bound(0.5) == pytest.approx(1 + 2 * math.exp(-2))
        assert classical_s_bound(1.0) == 1.0

    @pytest.mark.parametrize("lam", [-0.1, 1.5])
    def test_outside_domain(self, lam):
        with pytest.raises(DomainError):
            classical_s_bound(lam)


SWEEP_ALPHAS = np.linspace(1.02, 2.0, 25)
WINDOW_FRACTIONS = np.linspace(0.02, 0.98, 13)


def window(lo, hi):
    return [float(lo + f * (hi - lo)) for f in WINDOW_FRACTIONS]


class TestAuxInvariantsAcrossWindows:
    @pytest.mark.parametrize("alpha", SWEEP_ALPHAS)
    def test_case_c_x_increasing_below_minus_one(self, alpha):
        th = thresholds(alpha)
        radii = np.linspace(0.01, 1.0, 60)
        for lam in window(th.t1, th.t2):
            aux = aux_functions(alpha, lam)
            xs = np.array([aux.x_of_r(r) for r in radii])
            assert aux.x_of_r(1.0) < -1
            assert np.all(np.diff(xs) > 0)

    @pytest.mark.parametrize("alpha", SWEEP_ALPHAS)
    def test_case_d_vertex_inside_r0(self, alpha):
        th = thresholds(alpha)
        for lam in window(th.lam1, th.t3):
            aux = aux_functions(alpha, lam)
            assert aux.r_m is not None and aux.r_0 is not None
            assert aux.r_m < aux.r_0

    @pytest.mark.parametrize("alpha", SWEEP_ALPHAS)
    def test_branch2_is_g_at_vertex(self, alpha):
        th = thresholds(alpha)
        for lam in window(th.t2, th.t3):
            aux = aux_functions(alpha, lam)
            assert aux.g(aux.r_m) == pytest.approx(branch2_value(alpha, lam), abs=1e-10)

    @pytest.mark.parametrize("alpha", SWEEP_ALPHAS)
    def test_case_f_radii_and_k(self, alpha):
        th = thresholds(alpha)
        for lam in window(th.t3, th.lam2):
            aux = aux_functions(alpha, lam)
            assert aux.r_1 is not None and aux.r_n is not None
            assert aux.r_n > aux.r_1
            assert aux.k(1.0) == pytest.approx(branch3_value(alpha, lam), abs=1e-10)

    @pytest.mark.parametrize("alpha", [1.0354, 1.2, 1.5, 1.8, 2.0])
    def test_r0_reaches_one_at_lambda1(self, alpha):
        aux = aux_functions(alpha, thresholds(alpha).lam1)
        assert aux.r_0 is not None
        assert aux.r_0 == pytest.approx(1.0, abs=1e-9)
        assert aux.r_0 <= 1.0
