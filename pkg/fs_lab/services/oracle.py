"""
Brute-force maximization of |a + b c0 + c c0² + d c1| over Schur points.

With c1 free in the disk of radius 1 − |c0|², the optimum aligns d·c1 with
the rest, so the search collapses to
    F(c0) = |a + b c0 + c c0²| + |d| (1 − |c0|²),   |c0| <= 1,
which is scanned on a polar grid and then refined locally. Nothing here
uses the case analysis of the closed-form bound.
"""

import logging
from functools import partial
from multiprocessing import Pool
from typing import List, Optional, Sequence, Union

import numpy as np

from fs_lab.errors import InvalidGrid
from fs_lab.schemas import AlphaParam, OracleResult, QuadCoeffs, coerce_alpha
from fs_lab.services.bounds import quad_coeffs

logger = logging.getLogger(__name__)

MIN_STEPS = 8
REFINE_SHRINK = 10
REFINE_HALF_WIDTH = 10  # local grid is (2*10 + 1)^2 points per round

AlphaLike = Union[AlphaParam, float]


def _objective(a, b, c, d, r, theta):
    c0 = r * np.exp(1j * theta)
    return np.abs(a + b * c0 + c * c0**2) + abs(d) * (1.0 - r**2)


def _polar_grid(radial_steps: int, angular_steps: int):
    radii = np.linspace(0.0, 1.0, radial_steps)
    angles = 2 * np.pi * np.arange(angular_steps) / angular_steps
    return radii, angles


def maximize_schur_form(
    a: complex,
    b: complex,
    c: complex,
    d: complex,
    radial_steps: int = 400,
    angular_steps: int = 400,
    refine_iters: int = 3,
) -> OracleResult:
    if radial_steps < MIN_STEPS or angular_steps < MIN_STEPS:
        raise InvalidGrid(f"grid needs at least {MIN_STEPS} steps per axis")
    if refine_iters < 0:
        raise InvalidGrid("refine_iters must be >= 0")

    radii, angles = _polar_grid(radial_steps, angular_steps)
    values = _objective(a, b, c, d, radii[:, None], angles[None, :])
    # row-major argmax: first maximum wins
    i, j = np.unravel_index(int(np.argmax(values)), values.shape)
    best = float(values[i, j])
    best_r, best_theta = float(radii[i]), float(angles[j])

    dr = 1.0 / (radial_steps - 1)
    dtheta = 2 * np.pi / angular_steps
    offsets = np.arange(-REFINE_HALF_WIDTH, REFINE_HALF_WIDTH + 1)
    for _ in range(refine_iters):
        dr /= REFINE_SHRINK
        dtheta /= REFINE_SHRINK
        local_r = np.clip(best_r + offsets * dr, 0.0, 1.0)
        local_theta = best_theta + offsets * dtheta
        local = _objective(a, b, c, d, local_r[:, None], local_theta[None, :])
        i, j = np.unravel_index(int(np.argmax(local)), local.shape)
        if local[i, j] > best:
            best = float(local[i, j])
            best_r, best_theta = float(local_r[i]), float(local_theta[j])

    c0 = complex(best_r * np.exp(1j * best_theta))
    return OracleResult(value=best, c0=c0)


def maximize_reduced(
    alpha: AlphaLike,
    lam: float,
    radial_steps: int = 400,
    angular_steps: int = 400,
    refine_iters: int = 3,
) -> OracleResult:
    q = quad_coeffs(alpha, lam)
    result = maximize_schur_form(q.A, q.B, q.C, q.D, radial_steps, angular_steps, refine_iters)
    logger.debug(f"oracle alpha={coerce_alpha(alpha).alpha} lambda={lam}: {result.value} at c0={result.c0}")
    return result


def maximize_koepf(lam: float, radial_steps: int = 400, angular_steps: int = 400) -> OracleResult:
    """max |phi3 - lam*phi2^2| = max |c1 + (3 - 4 lam) c0^2| over Schur points."""
    return maximize_schur_form(0.0, 0.0, 3.0 - 4.0 * lam, 1.0, radial_steps, angular_steps, 0)


def maximize_full(
    alpha: AlphaLike,
    lam: float,
    steps: int = 64,
    quad: Optional[QuadCoeffs] = None,
) -> float:
    """
    Direct search over (c0, c1) without the alignment argument:
    c0 = r e^{iθ}, c1 = s (1 − r²) e^{iψ}, all four coordinates on a grid.
    """
    if steps < MIN_STEPS:
        raise InvalidGrid(f"grid needs at least {MIN_STEPS} steps per axis")
    q = quad or quad_coeffs(alpha, lam)
    radii, angles = _polar_grid(steps, steps)
    fractions = np.linspace(0.0, 1.0, steps)
    phases = np.exp(1j * angles)

    c0 = np.exp(1j * angles)[:, None, None]
    best = -np.inf
    for r in radii:
        z = r * c0
        head = q.A + q.B * z + q.C * z**2
        c1 = (1.0 - r**2) * fractions[None, :, None] * phases[None, None, :]
        best = max(best, float(np.abs(head + q.D * c1).max()))
    return best


def oracle_sweep(
    alpha: AlphaLike,
    lambdas: Sequence[float],
    radial_steps: int = 400,
    angular_steps: int = 400,
    refine_iters: int = 3,
    workers: int = 1,
) -> List[float]:
    """maximize_reduced over a list of lambdas; results come back in input order."""
    alpha = coerce_alpha(alpha)
    job = partial(
        _sweep_point,
        alpha.alpha,
        radial_steps=radial_steps,
        angular_steps=angular_steps,
        refine_iters=refine_iters,
    )
    if workers <= 1 or len(lambdas) < 2:
        return [job(lam) for lam in lambdas]
    logger.debug(f"oracle sweep: {len(lambdas)} points on {workers} workers")
    with Pool(processes=min(workers, len(lambdas))) as pool:
        return pool.map(job, list(lambdas))


def _sweep_point(alpha: float, lam: float, radial_steps: int, angular_steps: int, refine_iters: int) -> float:
    return maximize_reduced(alpha, lam, radial_steps, angular_steps, refine_iters).value
