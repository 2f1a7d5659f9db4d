"""Exact scalars and binomial coefficients.

Python ``int`` already is an arbitrary-precision signed integer and
``fractions.Fraction`` normalizes after every operation, so both are used
directly as the scalar types of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class Params:
    """Order ``p`` and shift ``q`` of a (p, q) family, with ``1 <= q < p``."""

    p: int
    q: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("p and q must be integers")
        if self.p < 2:
            raise ValueError(f"p must be >= 2, got {self.p}")
        if not 1 <= self.q < self.p:
            raise ValueError(f"q must satisfy 1 <= q < p, got p={self.p} q={self.q}")

    @property
    def dual(self) -> Params:
        """The (p, p - q) parameters; their table is the transpose."""
        return Params(self.p, self.p - self.q)


def binom_integer(n: int, k: int) -> int:
    """C(n, k) for any integer n, zero when k < 0.

    Negative ``n`` uses the falling-factorial product, so
    ``binom_integer(-1, k) == (-1)**k``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def binom_rational(alpha: Rational | int, k: int) -> Fraction:
    """Generalized binomial alpha (alpha - 1) ... (alpha - k + 1) / k!."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    alpha = Fraction(alpha)
    num = 1
    den = 1
    # accumulate over a common denominator; one normalization at the end
    a, b = alpha.numerator, alpha.denominator
    for i in range(k):
        num *= a - i * b
        den *= b * (i + 1)
    return Fraction(num, den)


def sign_power(n: int) -> int:
    """(-1)**n as an int, also for negative n."""
    return -1 if n % 2 else 1


def as_integer(value: Rational | int, what: str = "value") -> int:
    """Return ``value`` as an int, raising ArithmeticError if it is not integral."""
    if isinstance(value, float):
        raise TypeError(f"{what} is a float; exact arithmetic was lost")
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator
