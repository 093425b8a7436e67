"""Multiparameter poly-Cauchy numbers of the first and second kind.

These are the box-integral counterparts of the generalized Daehee numbers:
the same root-product integrands, integrated over [0, l_1] x ... x [0, l_k]
instead of the k-fold p-adic functional.  With unit limits, one fold and
consecutive roots they reduce to the classical Cauchy numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .classical import lah
from .comtet import ParamVector, comtet_first
from .core import Poly, RatLike
from .oracle import Box, eval_product_functional, reflect


@dataclass(frozen=True)
class PolyCauchyQuery:
    """One poly-Cauchy value: n roots, k folds, k upper limits, a kind."""

    n: int
    k: int
    params: ParamVector
    limits: tuple[Fraction, ...]
    kind: str = "first"

    def __post_init__(self) -> None:
        if self.n != len(self.params):
            raise ValueError("query n must equal the number of roots")
        if self.k < 1:
            raise ValueError("fold count k must be at least 1")
        if len(self.limits) != self.k:
            raise ValueError("one upper limit per fold is required")
        if self.kind not in ("first", "second"):
            raise ValueError(f"unknown kind {self.kind!r}")

    @staticmethod
    def of(
        alphas: Iterable[RatLike],
        mults: Iterable[int],
        limits: Iterable[RatLike],
        kind: str = "first",
    ) -> PolyCauchyQuery:
        params = ParamVector.of(alphas, mults)
        lims = tuple(Fraction(l) for l in limits)
        return PolyCauchyQuery(len(params), len(lims), params, lims, kind)


def integrand(q: PolyCauchyQuery) -> Poly:
    from .comtet import root_product

    p = root_product(q.params)
    return reflect(p) if q.kind == "second" else p


def poly_cauchy(q: PolyCauchyQuery) -> Fraction:
    """Reference value through the box-moment oracle."""
    return eval_product_functional(integrand(q), Box(q.limits))


def _stated_moment(limits: tuple[Fraction, ...], m: int) -> Fraction:
    # The stated moment expression (l_1 ... l_k)^{m+1} / (m+1)^k, kept in
    # this shape rather than the oracle's per-variable factorization.
    prod = Fraction(1)
    for limit in limits:
        prod *= limit
    return prod ** (m + 1) / Fraction(m + 1) ** len(limits)


def poly_cauchy_via_thm(q: PolyCauchyQuery, variant: str = "corrected") -> Fraction:
    """Connection-coefficient route.

    First kind: the Comtet row against the stated moment expression, read
    with a single summation index (the printed statement mixes three index
    letters; no other reading is evaluable).  Second kind corrected inserts
    (-1)^m; second kind as_stated follows the printed Lah form, which drops
    that sign and applies the stated moment at the Lah target index.
    """
    if variant not in ("as_stated", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    row = comtet_first(q.params)
    w = q.params.total_weight
    if q.kind == "first" or variant == "corrected":
        sign = -1 if q.kind == "second" else 1
        return sum(
            (
                sign**m * row.coeffs[m] * _stated_moment(q.limits, m)
                for m in range(w + 1)
            ),
            Fraction(0),
        )
    total = Fraction(0)
    for m in range(w + 1):
        for ell in range(m + 1):
            total += row.coeffs[m] * lah(m, ell) * _stated_moment(q.limits, ell)
    return total
