"""Moment oracle for k-fold product functionals.

Every integral in this package has an integrand that is a polynomial in the
product u = x_1 x_2 ... x_k of the integration variables.  Such a functional
is determined by its monomial moments, and because the variables are
independent the k-fold moment of u^m factors into a product of k univariate
moments:

* Volkenborn kind: the univariate moment of x^m is the Bernoulli number B_m
  (with B_1 = -1/2), so the k-fold moment of u^m is B_m^k.
* Box kind over [0, l_1] x ... x [0, l_k]: the moment of u^m is
  prod_j l_j^{m+1} / (m+1).

Evaluating a functional therefore reduces to an exact finite sum over the
integrand's coefficients.  This module is the ground truth against which
every stated identity is checked; it deliberately knows nothing about the
connection-coefficient formulas it adjudicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Union

from .classical import bernoulli
from .core import Poly, RatLike


@dataclass(frozen=True)
class Volkenborn:
    """k-fold p-adic product functional, realized through its moments."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("fold count k must be at least 1")


@dataclass(frozen=True)
class Box:
    """Iterated integral over [0, l_1] x ... x [0, l_k] with finite rational limits."""

    limits: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.limits:
            raise ValueError("a box integral needs at least one limit")

    @staticmethod
    def of(limits: Iterable[RatLike]) -> Box:
        return Box(tuple(Fraction(l) for l in limits))

    @property
    def k(self) -> int:
        return len(self.limits)


IntegralKind = Union[Volkenborn, Box]


def volkenborn_moment(m: int) -> Fraction:
    """Moment of x^m under the univariate functional: the Bernoulli number B_m."""
    return bernoulli(m)


@cache
def product_moment(kind: IntegralKind, m: int) -> Fraction:
    """k-fold moment of (x_1 ... x_k)^m under ``kind``."""
    if m < 0:
        raise ValueError("moment index must be nonnegative")
    if isinstance(kind, Volkenborn):
        return bernoulli(m) ** kind.k
    prod = Fraction(1)
    for limit in kind.limits:
        prod *= limit ** (m + 1) / (m + 1)
    return prod


def eval_product_functional(p: Poly, kind: IntegralKind) -> Fraction:
    """Apply the functional to p(x_1 ... x_k): sum of c_m times the m-th moment."""
    return sum(
        (c * product_moment(kind, m) for m, c in enumerate(p.coeffs) if c != 0),
        Fraction(0),
    )


def eval_product_functional_poly(p: Poly, kind: IntegralKind) -> Poly:
    """Apply the functional to p(x_1 ... x_k * x), leaving a polynomial in x.

    Each u^m x^m term integrates to (m-th moment) * x^m, so the result is the
    coefficientwise product of p with the moment sequence.
    """
    return Poly.from_coeffs(
        c * product_moment(kind, m) for m, c in enumerate(p.coeffs)
    )


def reflect(p: Poly) -> Poly:
    """Substitute -u for u: flip the sign of every odd-power coefficient.

    An involution; turns first-kind integrands prod (u - a_i)^{r_i} into
    second-kind integrands prod (-u - a_i)^{r_i}.
    """
    return Poly(tuple((-c if m & 1 else c) for m, c in enumerate(p.coeffs)))
