"""
Truncated complex power series.

A ComplexSeries of order N carries the coefficients of z^0 .. z^N; nothing is
known about the tail. Binary operations work to the smaller of the two orders.
"""

import logging
from typing import Iterable, Union

import numpy as np

from fs_lab.errors import ConstantTermNotOne, SeriesOrderError, ZeroConstantTerm

logger = logging.getLogger(__name__)

EPS_DIV = 1e-14
EPS_UNIT = 1e-12

Scalar = Union[complex, float, int]


class ComplexSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise SeriesOrderError("a series needs at least the constant term")
        arr.flags.writeable = False
        self._coeffs = arr

    @classmethod
    def zeros(cls, order: int) -> "ComplexSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "ComplexSeries":
        arr = np.zeros(order + 1, dtype=np.complex128)
        arr[0] = value
        return cls(arr)

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar, order: int) -> "ComplexSeries":
        """c0 + c1*z."""
        arr = np.zeros(order + 1, dtype=np.complex128)
        arr[0] = c0
        if order >= 1:
            arr[1] = c1
        return cls(arr)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __len__(self) -> int:
        return self._coeffs.size

    def __getitem__(self, k):
        return self._coeffs[k]

    def __repr__(self) -> str:
        return f"ComplexSeries(order={self.order}, coeffs={self._coeffs.tolist()!r})"

    def truncate(self, order: int) -> "ComplexSeries":
        if order > self.order:
            raise SeriesOrderError(f"cannot extend a series of order {self.order} to {order}")
        return ComplexSeries(self._coeffs[: order + 1])

    def shift(self) -> "ComplexSeries":
        """z * s; the order grows by one."""
        return ComplexSeries(np.concatenate(([0.0], self._coeffs)))

    def __add__(self, other: "ComplexSeries") -> "ComplexSeries":
        return linear_combine(1.0, self, 1.0, other)

    def __sub__(self, other: "ComplexSeries") -> "ComplexSeries":
        return linear_combine(1.0, self, -1.0, other)

    def __mul__(self, other):
        if isinstance(other, ComplexSeries):
            return mul(self, other)
        return ComplexSeries(self._coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other: "ComplexSeries") -> "ComplexSeries":
        return div(self, other)


def _common(s: ComplexSeries, t: ComplexSeries):
    n = min(s.order, t.order)
    return s.coeffs[: n + 1], t.coeffs[: n + 1], n


def linear_combine(a: Scalar, s: ComplexSeries, b: Scalar, t: ComplexSeries) -> ComplexSeries:
    x, y, _ = _common(s, t)
    return ComplexSeries(a * x + b * y)


def mul(s: ComplexSeries, t: ComplexSeries) -> ComplexSeries:
    """Cauchy product truncated at the smaller order."""
    x, y, n = _common(s, t)
    return ComplexSeries(np.convolve(x, y)[: n + 1])


def div(s: ComplexSeries, t: ComplexSeries) -> ComplexSeries:
    x, y, n = _common(s, t)
    if abs(y[0]) < EPS_DIV:
        raise ZeroConstantTerm(f"divisor has constant term {y[0]!r}")
    u = np.zeros(n + 1, dtype=np.complex128)
    inv0 = 1.0 / y[0]
    for m in range(n + 1):
        # u[m] = (x[m] - sum_{k=1}^{m} y[k] u[m-k]) / y[0]
        acc = np.dot(y[1 : m + 1], u[m - 1 :: -1]) if m else 0.0
        u[m] = (x[m] - acc) * inv0
    return ComplexSeries(u)


def pow_real(s: ComplexSeries, gamma: float) -> ComplexSeries:
    """s**gamma for a series with constant term 1, from s*u' = gamma*s'*u."""
    x = s.coeffs
    if abs(x[0] - 1.0) > EPS_UNIT:
        raise ConstantTermNotOne(f"pow_real needs s[0] == 1, got {x[0]!r}")
    n = s.order
    u = np.zeros(n + 1, dtype=np.complex128)
    u[0] = 1.0
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        weights = gamma * k - (m - k)
        u[m] = np.dot(weights * x[1 : m + 1], u[m - 1 :: -1]) / m
    return ComplexSeries(u)


def integrate(s: ComplexSeries) -> ComplexSeries:
    """Antiderivative vanishing at 0; the order grows by one."""
    k = np.arange(1, s.order + 2)
    return ComplexSeries(np.concatenate(([0.0], s.coeffs / k)))


def derivative(s: ComplexSeries) -> ComplexSeries:
    if s.order < 1:
        raise SeriesOrderError("derivative needs order >= 1")
    k = np.arange(1, s.order + 1)
    return ComplexSeries(s.coeffs[1:] * k)


def evaluate(s: ComplexSeries, z):
    """Horner evaluation of the truncated sum; z may be a scalar or an array."""
    return np.polyval(s.coeffs[::-1], z)


def one_minus(eta: Scalar, order: int) -> ComplexSeries:
    """1 - eta*z."""
    return ComplexSeries.linear(1.0, -eta, order)


def geometric(order: int) -> ComplexSeries:
    return ComplexSeries(np.ones(order + 1, dtype=np.complex128))
