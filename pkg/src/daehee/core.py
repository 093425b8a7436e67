"""Exact dense univariate polynomials and truncated power series.

Every scalar is a ``fractions.Fraction``, so all arithmetic in this package
is exact; there is no floating point anywhere.

A ``Poly`` is a tuple of coefficients indexed by power, with no trailing
zeros (the zero polynomial is the empty tuple).  A ``Series`` is a truncated
formal power series: a coefficient tuple of fixed length ``order + 1``.
Arithmetic on two series truncates to the smaller order, so a result never
carries coefficients it cannot vouch for.

Both types are immutable and hashable; all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


def rat(value: RatLike) -> Fraction:
    """Coerce ints and 'p/q' strings to an exact rational."""
    return Fraction(value)


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def of(*coeffs: RatLike) -> Poly:
        return Poly(_strip(Fraction(c) for c in coeffs))

    @staticmethod
    def from_coeffs(coeffs: Iterable[RatLike]) -> Poly:
        return Poly(_strip(Fraction(c) for c in coeffs))

    @staticmethod
    def constant(c: RatLike) -> Poly:
        return Poly.of(c)

    @staticmethod
    def x() -> Poly:
        return Poly.of(0, 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(_strip(out))

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(_strip(out))

    def scale(self, c: RatLike) -> Poly:
        c = Fraction(c)
        if c == 0:
            return Poly()
        return Poly(tuple(c * a for a in self.coeffs))

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("polynomial power must be nonnegative")
        result = Poly.of(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, point: RatLike) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        x = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        """Substitute ``inner`` for the variable (Horner over Poly)."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.of(c)
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c != 0)


def from_roots(alphas: Sequence[RatLike], mults: Sequence[int]) -> Poly:
    """Expand the product of (x - alpha_i)^(m_i); exact, degree = sum(mults).

    Empty inputs (or all multiplicities zero) give the constant 1.
    """
    if len(alphas) != len(mults):
        raise ValueError("alphas and mults must have equal length")
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be nonnegative")
    out = Poly.of(1)
    for alpha, m in zip(alphas, mults):
        if m:
            out = out * Poly.of(-Fraction(alpha), 1) ** m
    return out


def falling_factorial(n: int) -> Poly:
    """x(x-1)...(x-n+1) as a polynomial; n = 0 gives 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return from_roots(range(n), [1] * n)


def rising_factorial(n: int) -> Poly:
    """x(x+1)...(x+n-1) as a polynomial; n = 0 gives 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return from_roots([-i for i in range(n)], [1] * n)


def integrate_0_to(p: Poly, upper: RatLike) -> Fraction:
    """Exact definite integral of p from 0 to ``upper``."""
    u = Fraction(upper)
    total = Fraction(0)
    power = u
    for m, c in enumerate(p.coeffs):
        total += c * power / (m + 1)
        power *= u
    return total


@dataclass(frozen=True)
class Series:
    """Power series truncated at t^order; ``coeffs`` has length order + 1.

    The order is carried explicitly and never silently extended: adding or
    multiplying series of different orders truncates to the minimum.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series carries at least its constant term")

    @staticmethod
    def from_coeffs(coeffs: Iterable[RatLike]) -> Series:
        return Series(tuple(Fraction(c) for c in coeffs))

    @staticmethod
    def one(order: int) -> Series:
        return Series((Fraction(1),) + (Fraction(0),) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise ValueError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1])

    def __add__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __mul__(self, other: Series) -> Series:
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, ca in enumerate(self.coeffs[: n + 1]):
            if ca == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ca * other.coeffs[j]
        return Series(tuple(out))

    def pow(self, k: int) -> Series:
        """k-th power by repeated truncated multiplication; k = 0 gives 1."""
        if k < 0:
            raise ValueError("series power must be nonnegative")
        result = Series.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> Series:
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        out = [Fraction(1) / c0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                acc += self.coeffs[i] * out[n - i]
            out.append(-acc / c0)
        return Series(tuple(out))


def log1p_over_t(order: int) -> Series:
    """log(1+t)/t truncated at t^order: coefficients (-1)^m / (m+1)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    return Series(tuple(Fraction((-1) ** m, m + 1) for m in range(order + 1)))


def exp_xt(x: RatLike, order: int) -> Series:
    """e^{xt} truncated at t^order: coefficients x^m / m!."""
    x = Fraction(x)
    return Series(tuple(x**m / math.factorial(m) for m in range(order + 1)))


def mul_exp_xt(s: Series, x: RatLike, order: int) -> Series:
    """Truncated product of s with e^{xt}; x = 0 returns s truncated."""
    return s.truncate(min(order, s.order)) * exp_xt(x, order)


def bernoulli_gf(order: int) -> Series:
    """t/(e^t - 1): the reciprocal of sum_m t^m/(m+1)!."""
    expm1_over_t = Series(
        tuple(Fraction(1, math.factorial(m + 1)) for m in range(order + 1))
    )
    return expm1_over_t.inverse()


def t_over_log1p(order: int) -> Series:
    """t/log(1+t): the reciprocal of log(1+t)/t."""
    return log1p_over_t(order).inverse()


def binomial_gf(x: RatLike, order: int) -> Series:
    """(1+t)^x for rational x: coefficients are binomial(x, m)."""
    x = Fraction(x)
    coeffs = []
    c = Fraction(1)
    for m in range(order + 1):
        coeffs.append(c)
        c = c * (x - m) / (m + 1)
    return Series(tuple(coeffs))
