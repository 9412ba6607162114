"""
Concave functions of Co(alpha) built from starlike data.

f'(z) = (1 − z)^{−(α+1)} (z/φ(z))^{(α−1)/2} for a starlike φ, and every
member of Co(alpha) arises this way.
"""

import cmath
import logging
import math
from typing import Optional, Tuple, Union

import numpy as np

from fs_lab.errors import CosineOutOfRange, OutOfRegime, SeriesOrderError
from fs_lab.schemas import (
    AlphaParam,
    BoundResult,
    CaseDParams,
    CaseEFree,
    CaseFTheta,
    CoeffPair,
    SchurPoint,
    coerce_alpha,
)
from fs_lab.services.bounds import ENDPOINT_TOL, case_f_cosine, fs_bound, quad_coeffs, thresholds
from fs_lab.services.series import (
    ComplexSeries,
    derivative,
    div,
    evaluate,
    integrate,
    linear_combine,
    mul,
    one_minus,
    pow_real,
)
from fs_lab.services.starlike import StarlikeSeries, schur_omega, starlike_from_omega

logger = logging.getLogger(__name__)

COSINE_TOL = 1e-10
CASE_E_REPRESENTATIVE = 0.5
DEFAULT_MAX_RADIUS = 0.99

AlphaLike = Union[AlphaParam, float]


def f_from_phi(phi: StarlikeSeries, alpha: AlphaLike, order: int) -> ComplexSeries:
    a = coerce_alpha(alpha).alpha
    if phi.order < order:
        raise SeriesOrderError(f"phi of order {phi.order} cannot fix f to order {order}")
    # phi/z = 1 + phi_2 z + ..., to order `order - 1`
    phi_over_z = ComplexSeries(phi.phi.coeffs[1 : order + 1])
    z_over_phi = div(ComplexSeries.constant(1.0, order - 1), phi_over_z)
    f_prime = mul(
        pow_real(one_minus(1.0, order - 1), -(a + 1)),
        pow_real(z_over_phi, (a - 1) / 2),
    )
    return _normalized(integrate(f_prime))


def _normalized(f: ComplexSeries) -> ComplexSeries:
    if f.order < 1:
        raise SeriesOrderError("a normalized map needs order >= 1")
    coeffs = np.array(f.coeffs)
    coeffs[0] = 0.0
    coeffs[1] = 1.0
    return ComplexSeries(coeffs)


def a23_from_phi23(phi2: complex, phi3: complex, alpha: AlphaLike) -> CoeffPair:
    a = coerce_alpha(alpha).alpha
    a2 = (a + 1) / 2 - (a - 1) / 4 * phi2
    a3 = (
        (a + 1) * (a + 2) / 6
        - (a**2 - 1) / 6 * phi2
        - (a - 1) / 6 * phi3
        + (a**2 - 1) / 24 * phi2**2
    )
    return CoeffPair(a2=a2, a3=a3)


def coeff_pair(f: ComplexSeries) -> CoeffPair:
    if f.order < 3:
        raise SeriesOrderError("a3 needs a series of order >= 3")
    return CoeffPair(a2=complex(f[2]), a3=complex(f[3]))


def functional(c: CoeffPair, lam: float) -> float:
    """|a3 - lam*a2^2|"""
    return abs(c.a3 - lam * c.a2**2)


def p_transform(f: ComplexSeries, alpha: AlphaLike, order: int) -> ComplexSeries:
    """P_f = 2/(α−1)·[(α+1)/2·(1+z)/(1−z) − 1 − z f''/f']; Re P_f > 0 iff f ∈ Co(α)."""
    a = coerce_alpha(alpha).alpha
    n = min(order, f.order - 1)
    f1 = derivative(f).truncate(n)
    zf2 = derivative(f1).shift()
    ratio = div(zf2, f1)
    one = ComplexSeries.constant(1.0, n)
    mobius = div(ComplexSeries.linear(1.0, 1.0, n), one_minus(1.0, n))
    inner = linear_combine((a + 1) / 2, mobius, -1.0, one) - ratio
    return inner * (2 / (a - 1))


def check_concave(
    f: ComplexSeries,
    alpha: AlphaLike,
    radial_steps: int = 64,
    angular_steps: int = 128,
    max_radius: float = DEFAULT_MAX_RADIUS,
) -> float:
    """
    Smallest sampled Re P_f over a polar grid of the disk |z| <= max_radius.

    Positivity on the grid is a necessary-condition screen for membership in
    Co(alpha), not a proof. Non-finite samples (divergent truncations) count
    as -inf.
    """
    p = p_transform(f, alpha, f.order)
    radii = max_radius * np.arange(1, radial_steps + 1) / radial_steps
    angles = 2 * np.pi * np.arange(angular_steps) / angular_steps
    z = radii[:, None] * np.exp(1j * angles)[None, :]
    with np.errstate(over="ignore", invalid="ignore"):
        values = evaluate(p, z).real
    if not np.all(np.isfinite(values)):
        return -math.inf
    return float(values.min())


def outer_extremal(alpha: AlphaLike, order: int) -> ComplexSeries:
    """(1/(2α))·[((1+z)/(1−z))^α − 1], sharp on the outer branches."""
    a = coerce_alpha(alpha).alpha
    cayley = div(ComplexSeries.linear(1.0, 1.0, order), one_minus(1.0, order))
    lifted = pow_real(cayley, a) - ComplexSeries.constant(1.0, order)
    return _normalized(lifted * (1 / (2 * a)))


def constant_omega_extremal(alpha: AlphaLike, eta: complex, order: int) -> ComplexSeries:
    """f' = (1 − ηz)^{α−1}/(1 − z)^{α+1}: the member with φ = z/(1 − ηz)², |η| = 1."""
    a = coerce_alpha(alpha).alpha
    if order < 1:
        raise SeriesOrderError("a normalized map needs order >= 1")
    f_prime = mul(
        pow_real(one_minus(eta, order - 1), a - 1),
        pow_real(one_minus(1.0, order - 1), -(a + 1)),
    )
    return _normalized(integrate(f_prime))


def case_f_theta(alpha: AlphaLike, lam: float) -> float:
    th = thresholds(alpha)
    if not (th.t3 - ENDPOINT_TOL < lam <= th.lam2 + ENDPOINT_TOL) or abs(lam - th.t3) <= ENDPOINT_TOL:
        raise OutOfRegime(f"lambda = {lam} is outside the Case-F window (2/3, {th.lam2}]")
    cos0 = case_f_cosine(alpha, lam)
    if abs(cos0) > 1.0 + COSINE_TOL:
        raise CosineOutOfRange(f"cos(theta0) = {cos0} at lambda = {lam}")
    return math.acos(min(1.0, max(-1.0, cos0)))


def case_f_extremal(alpha: AlphaLike, lam: float, order: int) -> ComplexSeries:
    theta0 = case_f_theta(alpha, lam)
    logger.debug(f"case F extremal: alpha={coerce_alpha(alpha).alpha} lambda={lam} theta0={theta0}")
    return constant_omega_extremal(alpha, cmath.exp(1j * theta0), order)


def aligned_schur_point(alpha: AlphaLike, lam: float, c0: complex) -> SchurPoint:
    """c1 of modulus 1 − |c0|² with D·c1 parallel to A + B c0 + C c0²."""
    q = quad_coeffs(alpha, lam)
    c0 = complex(c0)
    w = q.A + q.B * c0 + q.C * c0**2
    unit = w / abs(w) if abs(w) > 0.0 else 1.0
    # D < 0, so c1 points against w
    return SchurPoint(c0=c0, c1=-unit * (1.0 - abs(c0) ** 2))


def schur_extremal(alpha: AlphaLike, lam: float, c0: complex, order: int) -> ComplexSeries:
    point = aligned_schur_point(alpha, lam, c0)
    omega = schur_omega(point, order)
    phi = starlike_from_omega(omega, order)
    return f_from_phi(phi, alpha, order)


def regime_extremal(
    alpha: AlphaLike, lam: float, order: int, result: Optional[BoundResult] = None
) -> Tuple[ComplexSeries, Optional[str]]:
    """Extremal function of the branch lam falls in, plus a note for one-parameter families."""
    alpha = coerce_alpha(alpha)
    result = result or fs_bound(alpha, lam)
    n = max(order, 3)
    descriptor = result.extremal
    if isinstance(descriptor, CaseFTheta):
        return constant_omega_extremal(alpha, cmath.exp(1j * descriptor.theta0), n), None
    if isinstance(descriptor, CaseDParams):
        return schur_extremal(alpha, lam, -descriptor.r_m, n), None
    if isinstance(descriptor, CaseEFree):
        r = CASE_E_REPRESENTATIVE
        note = f"one-parameter family c0 = i*r, r in (0,1]; representative r = {r}"
        return schur_extremal(alpha, lam, 1j * r, n), note
    return outer_extremal(alpha, n), None
