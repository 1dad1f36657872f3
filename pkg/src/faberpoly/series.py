"""Truncated formal power series in one variable t.

A series carries exactly ``order + 1`` complex coefficients; coefficient
``k`` multiplies ``t**k``.  Arithmetic never reads or fabricates
coefficients beyond the stated order, and binary operations truncate to the
shorter operand.  Multiplication is plain O(N^2) convolution, which is
degree-exact: coefficients up to the result order depend only on input
coefficients up to that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

#: absolute tolerance for constant-term preconditions of log/exp
CONST_TERM_TOL = 1e-12


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable[complex]):
        cs = tuple(complex(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def constant(cls, value: complex, order: int) -> "PowerSeries":
        return cls((complex(value),) + (0j,) * order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1.0, order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> complex:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond stated order {self.order}")
        return self.coeffs[k]

    def truncated(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a series beyond its stated order")
        return PowerSeries(self.coeffs[: order + 1])

    # -- ring operations -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        out = list(self.coeffs)
        out[0] += complex(other)
        return PowerSeries(out)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a = np.asarray(self.coeffs[: n + 1], dtype=complex)
            b = np.asarray(other.coeffs[: n + 1], dtype=complex)
            return PowerSeries(np.convolve(a, b)[: n + 1])
        return PowerSeries(complex(other) * c for c in self.coeffs)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        """Series b with self * b = 1 + O(t^{order+1}), by triangular recursion."""
        a = np.asarray(self.coeffs, dtype=complex)
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        r = np.zeros(n + 1, dtype=complex)
        r[0] = 1.0 / a[0]
        for k in range(1, n + 1):
            r[k] = -(a[1:k + 1] @ r[k - 1::-1]) * r[0]
        return PowerSeries(r)

    # -- calculus --------------------------------------------------------------

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            return PowerSeries((0j,))
        return PowerSeries((k + 1) * c for k, c in enumerate(self.coeffs[1:]))

    def integrate(self, const: complex = 0.0) -> "PowerSeries":
        return PowerSeries((complex(const),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def log1(self) -> "PowerSeries":
        """log of a series with unit constant term, via (log a)' = a'/a."""
        if abs(self.coeffs[0] - 1.0) > CONST_TERM_TOL:
            raise ValueError("log needs constant term 1")
        if self.order == 0:
            return PowerSeries((0j,))
        return (self.derivative() * self.reciprocal()).integrate()

    def exp(self) -> "PowerSeries":
        """Exponential of a series with zero constant term, via (exp a)' = a' exp a."""
        if abs(self.coeffs[0]) > CONST_TERM_TOL:
            raise ValueError("exp needs constant term 0")
        n = self.order
        w = np.asarray([k * c for k, c in enumerate(self.coeffs)], dtype=complex)
        e = np.zeros(n + 1, dtype=complex)
        e[0] = 1.0
        for k in range(1, n + 1):
            e[k] = (w[1:k + 1] @ e[k - 1::-1]) / k
        return PowerSeries(e)

    def __pow__(self, j: int) -> "PowerSeries":
        """Integer power by repeated squaring; negative j goes through reciprocal."""
        if not isinstance(j, int):
            raise TypeError("series powers must be integers")
        if j < 0:
            return self.reciprocal() ** (-j)
        result = PowerSeries.one(self.order)
        base = self
        while j:
            if j & 1:
                result = result * base
            j >>= 1
            if j:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------------

    def deviation(self, other: "PowerSeries") -> float:
        """max |a_k - b_k| over the shared order."""
        n = min(self.order, other.order)
        return max(abs(a - b) for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
