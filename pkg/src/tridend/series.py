"""Schröder numbers and truncated power series with rational coefficients."""
from __future__ import annotations

import functools
from fractions import Fraction

from .report import Report

__all__ = ["small_schroeder", "big_schroeder", "RationalSeries", "tree_series",
           "codend_series", "coass_series", "check_series_identities"]


@functools.lru_cache(maxsize=None)
def small_schroeder(n: int) -> int:
    """a_n: (n+1) a_n = (6n-3) a_{n-1} - (n-2) a_{n-2}, a_0 = a_1 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    num = (6 * n - 3) * small_schroeder(n - 1) - (n - 2) * small_schroeder(n - 2)
    q, r = divmod(num, n + 1)
    if r:
        raise ArithmeticError(f"inexact division computing a_{n}")
    return q


def big_schroeder(n: int) -> int:
    """A_0 = 0, A_1 = A_2 = 1, A_n = 2 a_{n-2} otherwise."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    if n <= 2:
        return 1
    return 2 * small_schroeder(n - 2)


class RationalSeries:
    """Power series known exactly through X^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[:order + 1]
        if not coeffs:
            raise ValueError("a series needs an order")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> RationalSeries:
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> RationalSeries:
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def _lift(self, other):
        if isinstance(other, RationalSeries):
            return other
        return RationalSeries.constant(other, self.order)

    def _common(self, other):
        n = min(self.order, other.order)
        return n, self.coeffs[:n + 1], other.coeffs[:n + 1]

    def __add__(self, other):
        n, a, b = self._common(self._lift(other))
        return RationalSeries([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        n, a, b = self._common(other)
        return RationalSeries([sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)])

    __rmul__ = __mul__

    def inverse(self) -> RationalSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        b = [1 / a[0]]
        for k in range(1, len(a)):
            b.append(-sum(a[i] * b[k - i] for i in range(1, k + 1)) / a[0])
        return RationalSeries(b)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, k: int):
        out = RationalSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def divide_by_x(self) -> RationalSeries:
        """Exact division by X; the order drops by one."""
        if self.coeffs[0] != 0:
            raise ArithmeticError("constant term is not zero")
        return RationalSeries(self.coeffs[1:])

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        n, a, b = self._common(other)
        return a == b

    __hash__ = None

    def integer_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("non-integral coefficient")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"RationalSeries({[str(c) for c in self.coeffs]})"


def tree_series(order: int) -> RationalSeries:
    """R(X) = Σ_{n>=1} a_n X^n."""
    return RationalSeries([0] + [small_schroeder(n) for n in range(1, order + 1)])


def codend_series(order: int) -> RationalSeries:
    """P(X) = Σ_{n>=1} A_n X^n."""
    return RationalSeries([big_schroeder(n) for n in range(order + 1)])


def coass_series(order: int) -> RationalSeries:
    """P(X)/X - 1."""
    return codend_series(order + 1).divide_by_x() - 1


def check_series_identities(order: int) -> Report:
    """Check the generating-function identities through X^order."""
    if order < 3:
        raise ValueError("order must be at least 3")
    report = Report("series")
    X = RationalSeries.x(order)
    R = tree_series(order)
    P = codend_series(order)
    one_r = 1 + R
    checks = [
        ("P=R/(1+R)^2", P, R / (one_r * one_r)),
        ("P=X+X^2+2X^2R", P, X + X * X + 2 * X * X * R),
        ("R/(1+R)=X+2XR", R / one_r, X + 2 * X * R),
        ("P/X-1=R/(1+R)", coass_series(order), R / one_r),
        ("(4X(1+R)-1-X)^2=1-6X+X^2", (4 * X * one_r - 1 - X) ** 2, 1 - 6 * X + X * X),
    ]
    for name, lhs, rhs in checks:
        report.cases += 1
        report.compare(name, order, lhs, rhs)
    return report
