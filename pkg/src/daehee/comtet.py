"""Generalized Comtet numbers and multiparameter noncentral Stirling numbers.

A ``ParamVector`` holds roots alpha_0..alpha_{n-1} with nonnegative
multiplicities r_0..r_{n-1}.  The generalized Comtet numbers of the first
kind are the monomial coefficients of prod_i (x - alpha_i)^{r_i}; the
multiparameter noncentral Stirling numbers of the second kind are the
composition of that row with the classical second-kind triangle, i.e. the
coefficients of the same product in the falling-factorial basis.

The signed variant composes with (-1)^m and arises from expanding the
product at a negated argument, prod_i (-u - alpha_i)^{r_i}, in the falling
factorials of u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .classical import stirling2
from .core import Poly, RatLike, from_roots


@dataclass(frozen=True)
class ParamVector:
    """Roots with multiplicities; the empty vector is the empty product."""

    alphas: tuple[Fraction, ...] = ()
    mults: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.alphas) != len(self.mults):
            raise ValueError("alphas and mults must have equal length")
        if any(m < 0 for m in self.mults):
            raise ValueError("multiplicities must be nonnegative")

    @staticmethod
    def of(alphas: Iterable[RatLike], mults: Iterable[int]) -> ParamVector:
        return ParamVector(tuple(Fraction(a) for a in alphas), tuple(mults))

    @staticmethod
    def constant(alpha: RatLike, r: int, n: int) -> ParamVector:
        """n copies of the same root with multiplicity r."""
        return ParamVector.of([alpha] * n, [r] * n)

    @staticmethod
    def run(start: RatLike, length: int, r: int = 1) -> ParamVector:
        """Consecutive roots start, start+1, ..., start+length-1."""
        s = Fraction(start)
        return ParamVector.of([s + i for i in range(length)], [r] * length)

    def __len__(self) -> int:
        return len(self.alphas)

    @property
    def total_weight(self) -> int:
        """Degree of the root product, |r| = sum of multiplicities."""
        return sum(self.mults)

    def shift(self, c: RatLike) -> ParamVector:
        c = Fraction(c)
        return ParamVector(tuple(a + c for a in self.alphas), self.mults)

    def render(self) -> str:
        alphas = ",".join(str(a) for a in self.alphas)
        mults = ",".join(str(m) for m in self.mults)
        return f"alphas=({alphas}) mults=({mults})"


@dataclass(frozen=True)
class ComtetRow:
    """Monomial coefficients of the root product, indexed 0..|r| (monic)."""

    params: ParamVector
    coeffs: tuple[Fraction, ...]

    def coefficient(self, m: int) -> Fraction:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return Fraction(0)


@cache
def root_product(params: ParamVector) -> Poly:
    """The expanded product prod_i (x - alpha_i)^{r_i}."""
    return from_roots(params.alphas, params.mults)


def comtet_first(params: ParamVector) -> ComtetRow:
    """Generalized Comtet numbers of the first kind for ``params``."""
    poly = root_product(params)
    w = params.total_weight
    coeffs = tuple(poly.coefficient(m) for m in range(w + 1))
    return ComtetRow(params, coeffs)


def _check_ell(params: ParamVector, ell: int) -> None:
    if ell < 0 or ell > params.total_weight:
        raise ValueError(
            f"index {ell} outside 0..{params.total_weight} for {params.render()}"
        )


def noncentral_stirling2(params: ParamVector, ell: int) -> Fraction:
    """Multiparameter noncentral Stirling number of the second kind.

    Coefficient of the falling factorial (x)_ell in the expansion of the
    root product: sum over m >= ell of the Comtet row times S(m, ell).
    """
    _check_ell(params, ell)
    row = comtet_first(params)
    return sum(
        (row.coeffs[m] * stirling2(m, ell) for m in range(ell, params.total_weight + 1)),
        Fraction(0),
    )


def noncentral_stirling2_signed(params: ParamVector, ell: int) -> Fraction:
    """Signed variant: coefficient of (u)_ell in prod_i (-u - alpha_i)^{r_i}."""
    _check_ell(params, ell)
    row = comtet_first(params)
    return sum(
        (
            (-1) ** m * row.coeffs[m] * stirling2(m, ell)
            for m in range(ell, params.total_weight + 1)
        ),
        Fraction(0),
    )
