"""
Starlike coefficient data from Schur parameters.

zφ'/φ = (1 + zω)/(1 − zω) with ω a self-map of the closed disk. Writing
ω = c0 + c1 z + ... gives φ2 = 2c0 and φ3 = c1 + 3c0².
"""

import logging
from typing import Tuple

import numpy as np

from fs_lab.errors import InvalidModulus, InvalidSchurPoint, SeriesOrderError
from fs_lab.schemas import SchurPoint
from fs_lab.services.series import ComplexSeries, div

logger = logging.getLogger(__name__)

MODULUS_TOL = 1e-12


class StarlikeSeries:
    """Normalized starlike series: phi[0] = 0, phi[1] = 1."""

    __slots__ = ("phi",)

    def __init__(self, phi: ComplexSeries):
        if phi.order < 1 or abs(phi[0]) > 1e-12 or abs(phi[1] - 1.0) > 1e-12:
            raise SeriesOrderError("starlike series must start z + ...")
        self.phi = phi

    @property
    def order(self) -> int:
        return self.phi.order

    def phi23(self) -> Tuple[complex, complex]:
        return complex(self.phi[2]), complex(self.phi[3])


def blaschke_omega(c0: complex, eta: complex, order: int) -> ComplexSeries:
    """(c0 + eta z)/(1 + conj(c0) eta z); degenerates to the constant c0 on |c0| = 1."""
    c0 = complex(c0)
    eta = complex(eta)
    if abs(c0) > 1.0 + MODULUS_TOL:
        raise InvalidModulus(f"|c0| = {abs(c0)} exceeds 1")
    if abs(abs(eta) - 1.0) > MODULUS_TOL:
        raise InvalidModulus(f"|eta| = {abs(eta)} is not 1")
    if abs(c0) >= 1.0 - MODULUS_TOL:
        return ComplexSeries.constant(c0, order)
    num = ComplexSeries.linear(c0, eta, order)
    den = ComplexSeries.linear(1.0, c0.conjugate() * eta, order)
    return div(num, den)


def starlike_from_omega(omega: ComplexSeries, order: int) -> StarlikeSeries:
    if omega.order < order - 1:
        raise SeriesOrderError(f"omega of order {omega.order} cannot fix phi to order {order}")
    # z*omega to order `order - 1`: p_k for k < order is all the recurrence reads
    z_omega = omega.shift().truncate(order - 1)
    one = ComplexSeries.constant(1.0, order - 1)
    p = div(one + z_omega, one - z_omega).coeffs

    phi = np.zeros(order + 1, dtype=np.complex128)
    phi[1] = 1.0
    for n in range(2, order + 1):
        # (n-1) phi_n = sum_{k=1}^{n-1} p_k phi_{n-k}
        phi[n] = np.dot(p[1:n], phi[n - 1 : 0 : -1]) / (n - 1)
    return StarlikeSeries(ComplexSeries(phi))


def phi23_from_schur(p: SchurPoint) -> Tuple[complex, complex]:
    problem = p.violation()
    if problem:
        raise InvalidSchurPoint(problem)
    return 2 * p.c0, p.c1 + 3 * p.c0**2


def schur_omega(p: SchurPoint, order: int) -> ComplexSeries:
    """Blaschke factor with omega(0) = c0 and omega'(0) = c1; needs |c1| = 1 - |c0|^2."""
    problem = p.violation()
    if problem:
        raise InvalidSchurPoint(problem)
    radius = 1.0 - abs(p.c0) ** 2
    if radius <= MODULUS_TOL:
        return blaschke_omega(p.c0, 1.0, order)
    if abs(abs(p.c1) - radius) > 1e-9:
        raise InvalidSchurPoint("a degree-one Blaschke factor needs |c1| = 1 - |c0|^2")
    return blaschke_omega(p.c0, p.c1 / abs(p.c1), order)


def koepf_bound(lam: float) -> float:
    """max |b3 - lam*b2^2| over normalized starlike functions."""
    return max(1.0, abs(3.0 - 4.0 * lam))
