"""
Closed-form Fekete–Szegő bound for Co(alpha).

Everything here is evaluated from the displayed formulas of the case
analysis, in double precision, without further algebraic simplification.
"""

import logging
import math
from typing import Optional, Union

from fs_lab.errors import DomainError
from fs_lab.schemas import (
    AlphaParam,
    AuxFunctions,
    BoundResult,
    CaseDParams,
    CaseEFree,
    CaseFTheta,
    OuterExtremal,
    QuadCoeffs,
    Regime,
    Thresholds,
    coerce_alpha,
)

logger = logging.getLogger(__name__)

ENDPOINT_TOL = 1e-12
RADIUS_TOL = 1e-12

AlphaLike = Union[AlphaParam, float]


def quad_coeffs(alpha: AlphaLike, lam: float) -> QuadCoeffs:
    a = coerce_alpha(alpha).alpha
    return QuadCoeffs(
        A=(a + 1) * (a + 2) / 6 - lam * (a + 1) ** 2 / 4,
        B=(a**2 - 1) * (lam / 2 - 1 / 3),
        C=-(a - 1) * (4 - 2 * a + 3 * lam * (a - 1)) / 12,
        D=-(a - 1) / 6,
    )


def j_function(alpha: AlphaLike, lam: float) -> float:
    a = coerce_alpha(alpha).alpha
    return a**2 * (3 * lam - 2) ** 2 - 4 + 3 * lam


def thresholds(alpha: AlphaLike) -> Thresholds:
    a = coerce_alpha(alpha).alpha
    root = math.sqrt(8 * a**2 + 1)
    return Thresholds(
        t0=2 * (a - 3) / (3 * (a - 1)),
        t1=2 * (a - 2) / (3 * (a - 1)),
        t2=2 * (a - 1) / (3 * a),
        lam1=(4 * a**2 - 1 - root) / (6 * a**2),
        lam2=(4 * a**2 - 1 + root) / (6 * a**2),
        t3=2 / 3,
        t4=2 * (a + 2) / (3 * (a + 1)),
    )


def _radius(value: float) -> Optional[float]:
    if math.isfinite(value) and 0.0 < value <= 1.0 + RADIUS_TOL:
        return min(value, 1.0)
    return None


def _safe_ratio(num: float, den: float) -> float:
    if den == 0.0:
        return math.nan
    return num / den


def aux_functions(alpha: AlphaLike, lam: float) -> AuxFunctions:
    a = coerce_alpha(alpha).alpha
    q = quad_coeffs(a, lam)
    A, B, C = q.A, q.B, q.C
    half_d = (a - 1) / 6  # |D|

    def x_of_r(r: float) -> float:
        den = 4 * A * C * r
        num = -B * (A + C * r**2)
        if den == 0.0:
            return 0.0 if num == 0.0 else math.copysign(math.inf, num)
        return num / den

    def h(x: float, r: float) -> float:
        return (A - C * r**2) ** 2 + B**2 * r**2 + 2 * B * r * (A + C * r**2) * x + 4 * A * C * r**2 * x**2

    def g(r: float) -> float:
        return A - B * r + C * r**2 + half_d * (1 - r**2)

    def l(r: float) -> float:
        return A + B * r + C * r**2 + half_d * (1 - r**2)

    def n(r: float) -> float:
        return -A + B * r - C * r**2 + half_d * (1 - r**2)

    four_ac = 4 * A * C
    k = None
    s = None
    if four_ac < 0.0 or (four_ac > 0.0 and B**2 <= four_ac):
        s = math.sqrt(1 - B**2 / four_ac)

        def k(r: float) -> float:
            return (A - C * r**2) * s + half_d * (1 - r**2)

    r_m = _radius(_safe_ratio(-B, -2 * C + (a - 1) / 3))
    r_n = _radius(_safe_ratio(B, -2 * C + (a - 1) / 3))
    r_0 = r_1 = r_2 = None
    if s is not None:
        r_0 = _radius(_safe_ratio(B, 2 * C * (1 + s)))
        r_1 = _radius(_safe_ratio(B, -2 * C * (1 + s)))
        # other root of x(r) = -1; positive on the window where s > 1
        r_2 = _radius(_safe_ratio(B, 2 * C * (1 - s)))

    return AuxFunctions(
        x_of_r=x_of_r, h=h, g=g, k=k, l=l, n=n,
        r_m=r_m, r_0=r_0, r_1=r_1, r_2=r_2, r_n=r_n,
    )


def branch1_value(alpha: AlphaLike, lam: float) -> float:
    a = coerce_alpha(alpha).alpha
    return (2 * a**2 + 1) / 3 - lam * a**2


def branch2_value(alpha: AlphaLike, lam: float) -> float:
    a = coerce_alpha(alpha).alpha
    return (a * (10 - 9 * lam) - (3 * lam - 2)) / (9 * (2 - lam) + 3 * a * (3 * lam - 2))


def branch3_value(alpha: AlphaLike, lam: float) -> float:
    a = coerce_alpha(alpha).alpha
    return a * (1 - lam) * math.sqrt(12 * (1 - lam) / ((4 - 3 * lam) ** 2 - a**2 * (3 * lam - 2) ** 2))


def branch4_value(alpha: AlphaLike, lam: float) -> float:
    a = coerce_alpha(alpha).alpha
    return lam * a**2 - (2 * a**2 + 1) / 3


def classify(alpha: AlphaLike, lam: float) -> Regime:
    """Bound branch for lam; a shared endpoint goes to the left branch."""
    th = thresholds(alpha)
    if lam <= th.t2:
        return Regime.BRANCH1
    if lam <= th.t3:
        return Regime.BRANCH2
    if lam <= th.lam2:
        return Regime.BRANCH3
    return Regime.BRANCH4


def proof_case(alpha: AlphaLike, lam: float) -> str:
    """Label of the proof case covering lam: "1", "2" or "A".."G"."""
    th = thresholds(alpha)
    if lam <= th.t0:
        return "1"
    if lam >= th.t4:
        return "2"
    if lam < th.t1:
        return "A"
    if abs(lam - th.t1) <= ENDPOINT_TOL:
        return "B"
    if lam < th.t2:
        return "C"
    if abs(lam - th.t3) <= ENDPOINT_TOL:
        return "E"
    if lam < th.t3:
        return "D"
    if lam <= th.lam2:
        return "F"
    return "G"


def case_f_cosine(alpha: AlphaLike, lam: float) -> float:
    """cos(theta0) = -B(A+C)/(4AC), the boundary point where h peaks at r = 1."""
    q = quad_coeffs(alpha, lam)
    return -q.B * (q.A + q.C) / (4 * q.A * q.C)


def fs_bound(alpha: AlphaLike, lam: float) -> BoundResult:
    alpha = coerce_alpha(alpha)
    th = thresholds(alpha)
    regime = classify(alpha, lam)

    if regime is Regime.BRANCH1:
        value = branch1_value(alpha, lam)
        extremal = OuterExtremal()
    elif regime is Regime.BRANCH2:
        value = branch2_value(alpha, lam)
        if abs(lam - th.t3) <= ENDPOINT_TOL:
            extremal = CaseEFree()
        else:
            r_m = aux_functions(alpha, lam).r_m
            extremal = CaseDParams(r_m=r_m if r_m is not None else 1.0)
    elif regime is Regime.BRANCH3:
        value = branch3_value(alpha, lam)
        cos0 = min(1.0, max(-1.0, case_f_cosine(alpha, lam)))
        extremal = CaseFTheta(theta0=math.acos(cos0))
    else:
        value = branch4_value(alpha, lam)
        extremal = OuterExtremal()

    logger.debug(
        f"fs_bound alpha={alpha.alpha} lambda={lam}: {regime.value} "
        f"(case {proof_case(alpha, lam)}) = {value}"
    )
    return BoundResult(value=value, regime=regime, thresholds=th, extremal=extremal)


def fs_bound_value(alpha: AlphaLike, lam: float) -> float:
    return fs_bound(alpha, lam).value


def classical_s_bound(lam: float) -> float:
    """Fekete–Szegő bound over the whole class S, defined for 0 <= lam <= 1."""
    if lam < 0.0 or lam > 1.0:
        raise DomainError(f"classical bound is stated for 0 <= lambda <= 1, got {lam}")
    if lam == 1.0:
        return 1.0
    return 1.0 + 2.0 * math.exp(-2.0 * lam / (1.0 - lam))
