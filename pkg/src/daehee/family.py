"""Generalized higher-order Daehee numbers and polynomials, both kinds.

A ``DaeheeQuery`` names one family member: n roots with multiplicities
(a ``ParamVector``), a fold count k, a kind (first = integrand in the
product u of the k variables, second = integrand in -u) and a form
(number, or polynomial in the extra variable x multiplying u).

Every query has a reference value through the moment oracle.  The
connection-coefficient routes in this module recompute the same values
through the stated Stirling/Lah/Comtet formulas; the claims registry
compares the two.  Routes that exist in an ``as_stated`` and a
``corrected`` variant evaluate, respectively, the printed formula under
the minimal index repair that makes it evaluable, and the repaired form
that is derivable and oracle-true.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Union

from . import polycauchy
from .classical import daehee, lah, stirling1, stirling2
from .comtet import (
    ParamVector,
    comtet_first,
    noncentral_stirling2,
    noncentral_stirling2_signed,
    root_product,
)
from .core import Poly, falling_factorial
from .oracle import (
    Box,
    Volkenborn,
    eval_product_functional,
    eval_product_functional_poly,
    reflect,
    volkenborn_moment,
)

Value = Union[Fraction, Poly]

FIRST = "first"
SECOND = "second"
NUMBER = "number"
POLYNOMIAL = "polynomial"
AS_STATED = "as_stated"
CORRECTED = "corrected"


@dataclass(frozen=True)
class DaeheeQuery:
    """One family member; params length must equal n, k must be positive."""

    n: int
    k: int
    params: ParamVector
    kind: str = FIRST
    form: str = NUMBER

    def __post_init__(self) -> None:
        if self.n != len(self.params):
            raise ValueError("query n must equal the number of roots")
        if self.k < 1:
            raise ValueError("fold count k must be at least 1")
        if self.kind not in (FIRST, SECOND):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.form not in (NUMBER, POLYNOMIAL):
            raise ValueError(f"unknown form {self.form!r}")


def integrand(q: DaeheeQuery) -> Poly:
    """Expanded integrand in u (second kind reflects u to -u)."""
    p = root_product(q.params)
    return reflect(p) if q.kind == SECOND else p


@cache
def number_value(q: DaeheeQuery) -> Fraction:
    """Reference value of a number query through the moment oracle."""
    return eval_product_functional(integrand(q), Volkenborn(q.k))


@cache
def poly_value(q: DaeheeQuery) -> Poly:
    """Reference value of a polynomial query through the moment oracle."""
    return eval_product_functional_poly(integrand(q), Volkenborn(q.k))


def value(q: DaeheeQuery) -> Value:
    return poly_value(q) if q.form == POLYNOMIAL else number_value(q)


@cache
def plain_number(n: int, k: int, kind: str = FIRST) -> Fraction:
    """Plain generalized Daehee number: falling-factorial integrand (u)_n."""
    base = falling_factorial(n)
    if kind == SECOND:
        base = reflect(base)
    return eval_product_functional(base, Volkenborn(k))


@cache
def plain_poly(n: int, k: int, kind: str = FIRST) -> Poly:
    """Plain generalized Daehee polynomial: integrand (u x)_n resp. (-u x)_n."""
    base = falling_factorial(n)
    if kind == SECOND:
        base = reflect(base)
    return eval_product_functional_poly(base, Volkenborn(k))


# ---------------------------------------------------------------------------
# First-kind connection routes
# ---------------------------------------------------------------------------


@cache
def _stirling_daehee_sum(m: int, terms: str) -> Fraction:
    # sum_l S(m, l) D_l, with D_l either from the memoized table or inlined
    # as (-1)^l l!/(l+1); both readings of the inner factor.
    total = Fraction(0)
    for ell in range(m + 1):
        if terms == "table":
            d = daehee(ell)
        else:
            d = Fraction((-1) ** ell * math.factorial(ell), ell + 1)
        total += stirling2(m, ell) * d
    return total


def number_via_connection(q: DaeheeQuery, daehee_terms: str = "table") -> Fraction:
    """First-kind number via the Comtet row and k-fold Stirling-Daehee sums.

    The k-fold sum over independent indices factors into the k-th power of
    sum_l S(m, l) D_l.  ``daehee_terms`` selects how the D_l factor is
    produced: "table" uses the memoized Daehee numbers, "closed" inlines the
    explicit (-1)^l l!/(l+1) form.
    """
    if q.kind != FIRST:
        raise ValueError("connection route is stated for the first kind")
    if daehee_terms not in ("table", "closed"):
        raise ValueError(f"unknown daehee_terms {daehee_terms!r}")
    row = comtet_first(q.params)
    return sum(
        (
            row.coeffs[m] * _stirling_daehee_sum(m, daehee_terms) ** q.k
            for m in range(q.params.total_weight + 1)
        ),
        Fraction(0),
    )


def number_via_noncentral(q: DaeheeQuery) -> Fraction:
    """First-kind number as sum_l S(n,l;alphas,mults) times the plain number."""
    if q.kind != FIRST:
        raise ValueError("noncentral expansion is stated for the first kind")
    return sum(
        (
            noncentral_stirling2(q.params, ell) * plain_number(ell, q.k)
            for ell in range(q.params.total_weight + 1)
        ),
        Fraction(0),
    )


def poly_via_noncentral(q: DaeheeQuery) -> Poly:
    """First-kind polynomial as sum_l S(n,l;alphas,mults) times the plain polynomial."""
    if q.kind != FIRST:
        raise ValueError("noncentral expansion is stated for the first kind")
    out = Poly()
    for ell in range(q.params.total_weight + 1):
        out = out + plain_poly(ell, q.k).scale(noncentral_stirling2(q.params, ell))
    return out


# ---------------------------------------------------------------------------
# Second-kind connection routes
# ---------------------------------------------------------------------------


def second_corrected(q: DaeheeQuery) -> Value:
    """Derivable second-kind form: signed noncentral row times first-kind plains.

    Expanding prod (-u - a_i)^{r_i} in the falling factorials of u gives the
    signed connectors, and each (u)_l integrates to the plain first-kind value.
    """
    if q.kind != SECOND:
        raise ValueError("corrected route applies to second-kind queries")
    w = q.params.total_weight
    if q.form == NUMBER:
        return sum(
            (
                noncentral_stirling2_signed(q.params, ell) * plain_number(ell, q.k)
                for ell in range(w + 1)
            ),
            Fraction(0),
        )
    out = Poly()
    for ell in range(w + 1):
        out = out + plain_poly(ell, q.k).scale(
            noncentral_stirling2_signed(q.params, ell)
        )
    return out


@cache
def _lah_row_sum(m: int) -> Fraction:
    return sum((lah(m, ell) for ell in range(m + 1)), Fraction(0))


def second_number_via_lah(q: DaeheeQuery, variant: str = CORRECTED) -> Fraction:
    """Second-kind number via the Lah-conversion statement.

    as_stated: sum_m S(n,m;alphas,mults) * (sum_l L(m,l)) * (sum_l S(m,l) D_l)^k,
    the printed form with the Lah index repaired to the inner summation
    variable.  It drops the (-1)^m from (-u)_m and so fails in general.
    corrected: the signed noncentral form, which is oracle-true.
    """
    if q.kind != SECOND or q.form != NUMBER:
        raise ValueError("route applies to second-kind number queries")
    if variant == CORRECTED:
        result = second_corrected(q)
        assert isinstance(result, Fraction)
        return result
    if variant != AS_STATED:
        raise ValueError(f"unknown variant {variant!r}")
    return sum(
        (
            noncentral_stirling2(q.params, m)
            * _lah_row_sum(m)
            * _stirling_daehee_sum(m, "table") ** q.k
            for m in range(q.params.total_weight + 1)
        ),
        Fraction(0),
    )


@cache
def _collapsed_plain_poly(m: int, k: int) -> Poly:
    # sum_l S(m, l) * plain_poly(l, 1), raised to the k-th power; the inner
    # sum telescopes to B_m x^m, so the power carries degree m*k.
    inner = Poly()
    for ell in range(m + 1):
        inner = inner + plain_poly(ell, 1).scale(stirling2(m, ell))
    return inner**k


def second_poly_via_lah(q: DaeheeQuery, variant: str = CORRECTED) -> Poly:
    """Second-kind polynomial via the Lah-conversion statement.

    as_stated reads the product factor as the k = 1 plain polynomial of the
    inner index, the only single-subscript polynomial family in scope; the
    missing sign and the collapsed product make it fail in general.
    """
    if q.kind != SECOND or q.form != POLYNOMIAL:
        raise ValueError("route applies to second-kind polynomial queries")
    if variant == CORRECTED:
        result = second_corrected(q)
        assert isinstance(result, Poly)
        return result
    if variant != AS_STATED:
        raise ValueError(f"unknown variant {variant!r}")
    out = Poly()
    for m in range(q.params.total_weight + 1):
        coeff = noncentral_stirling2(q.params, m) * _lah_row_sum(m)
        out = out + _collapsed_plain_poly(m, q.k).scale(coeff)
    return out


def second_poly_via_signed(q: DaeheeQuery, variant: str = CORRECTED) -> Poly:
    """Second-kind polynomial via the signed noncentral statement.

    as_stated applies (-1)^l to the UNSIGNED noncentral connector, which
    coincides with the derivable form only for special parameter families;
    corrected moves the sign inside the defining sum (the signed connector).
    """
    if q.kind != SECOND or q.form != POLYNOMIAL:
        raise ValueError("route applies to second-kind polynomial queries")
    if variant == CORRECTED:
        result = second_corrected(q)
        assert isinstance(result, Poly)
        return result
    if variant != AS_STATED:
        raise ValueError(f"unknown variant {variant!r}")
    out = Poly()
    for ell in range(q.params.total_weight + 1):
        coeff = (-1) ** ell * noncentral_stirling2(q.params, ell)
        out = out + plain_poly(ell, q.k).scale(coeff)
    return out


def second_via_lah_signed(q: DaeheeQuery) -> Value:
    """Sign-repaired Lah route: keeps the Lah structure, restores (-1)^m.

    Uses (-u)_m = (-1)^m sum_l L(m,l) (u)_l, so it must agree with both
    the signed noncentral route and the oracle.
    """
    if q.kind != SECOND:
        raise ValueError("route applies to second-kind queries")
    w = q.params.total_weight
    if q.form == NUMBER:
        total = Fraction(0)
        for m in range(w + 1):
            inner = sum(
                (lah(m, ell) * plain_number(ell, q.k) for ell in range(m + 1)),
                Fraction(0),
            )
            total += (-1) ** m * noncentral_stirling2(q.params, m) * inner
        return total
    out = Poly()
    for m in range(w + 1):
        sign = (-1) ** m * noncentral_stirling2(q.params, m)
        for ell in range(m + 1):
            out = out + plain_poly(ell, q.k).scale(sign * lah(m, ell))
    return out


# ---------------------------------------------------------------------------
# Single-variable reductions (k integration variables collapsed to one)
# ---------------------------------------------------------------------------


def single_integral_value(params: ParamVector) -> Fraction:
    """Direct moment sum for the one-variable integral of the root product."""
    row = comtet_first(params)
    return sum(
        (row.coeffs[m] * volkenborn_moment(m) for m in range(len(row.coeffs))),
        Fraction(0),
    )


def single_run_via_connection(alphas: tuple[Fraction, ...], variant: str) -> Fraction:
    """Stated formula for the one-variable integral with simple roots.

    as_stated uses the printed Stirling-ratio factor s(n+i, i)/binom(n+i, i)
    inside the noncentral sum; corrected replaces it with the Daehee number
    D_i = (-1)^i i!/(i+1), which is what the expansion actually produces.
    """
    n = len(alphas)
    params = ParamVector.of(alphas, [1] * n)
    total = Fraction(0)
    for i in range(n + 1):
        if variant == AS_STATED:
            factor = stirling1(n + i, i) / math.comb(n + i, i)
        elif variant == CORRECTED:
            factor = daehee(i)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        total += noncentral_stirling2(params, i) * factor
    return total


# ---------------------------------------------------------------------------
# Special-case reductions
# ---------------------------------------------------------------------------


def _shifted_run_value(
    alpha: Fraction, length: int, k: int, kind: str, form: str
) -> Value:
    """Family value for the consecutive-root run alpha, alpha+1, ..."""
    params = ParamVector.run(alpha, length)
    return value(DaeheeQuery(length, k, params, kind, form))


def special_case(
    case_id: int,
    section: str,
    inputs: dict,
    variant: str = AS_STATED,
) -> tuple[Value, Value]:
    """Construct both sides of one special-case reduction.

    ``section`` selects the first- or second-kind family of reductions;
    ``inputs`` supplies the case's free parameters (n, k, r, alpha, params,
    limits, form as applicable).  Returns (family value, reduced value).
    Cases whose printed reduction is not derivable additionally accept the
    corrected variant; for all other cases the two variants coincide.
    """
    if section not in (FIRST, SECOND):
        raise ValueError(f"unknown section {section!r}")
    if variant not in (AS_STATED, CORRECTED):
        raise ValueError(f"unknown variant {variant!r}")
    kind = section

    if case_id == 1:
        # Roots 0..n-1, all with multiplicity r.  The printed reduction sends
        # the result to the plain family at index n*r; that only holds for
        # r = 1, since the product is the r-th power of the length-n falling
        # factorial, not the length-n*r one.  The corrected side integrates
        # that r-th power.
        n, k, r, form = inputs["n"], inputs["k"], inputs["r"], inputs["form"]
        params = ParamVector.run(0, n, r)
        q = DaeheeQuery(n, k, params, kind, form)
        lhs = value(q)
        if variant == AS_STATED:
            rhs = (
                plain_poly(n * r, k, kind)
                if form == POLYNOMIAL
                else plain_number(n * r, k, kind)
            )
        else:
            base = falling_factorial(n)
            if kind == SECOND:
                base = reflect(base)
            power = base**r
            rhs = (
                eval_product_functional_poly(power, Volkenborn(k))
                if form == POLYNOMIAL
                else eval_product_functional(power, Volkenborn(k))
            )
        return lhs, rhs

    if case_id in (2, 3):
        # Equal roots alpha with multiplicity r (case 3 fixes r = 1): the
        # integrand is a pure power, expanded in falling factorials of the
        # shifted argument, giving consecutive-root runs on the right.
        n, k, form = inputs["n"], inputs["k"], inputs["form"]
        alpha = Fraction(inputs["alpha"])
        r = inputs["r"] if case_id == 2 else 1
        params = ParamVector.constant(alpha, r, n)
        q = DaeheeQuery(n, k, params, kind, form)
        lhs = value(q)
        nr = n * r
        if form == POLYNOMIAL:
            rhs = Poly()
            for ell in range(nr + 1):
                term = _shifted_run_value(alpha, ell, k, kind, POLYNOMIAL)
                assert isinstance(term, Poly)
                rhs = rhs + term.scale(stirling2(nr, ell))
        else:
            rhs = sum(
                (
                    stirling2(nr, ell)
                    * _shifted_run_value(alpha, ell, k, kind, NUMBER)
                    for ell in range(nr + 1)
                ),
                Fraction(0),
            )
        return lhs, rhs

    if case_id == 4:
        # Roots all zero with multiplicity one: expansion of u^n (resp.
        # (-u)^n) in falling factorials.  The printed number form for the
        # second kind points at the FIRST-kind plain family; the corrected
        # side keeps the second kind.
        n, k, form = inputs["n"], inputs["k"], inputs["form"]
        params = ParamVector.constant(0, 1, n)
        q = DaeheeQuery(n, k, params, kind, form)
        lhs = value(q)
        rhs_kind = kind
        if kind == SECOND and form == NUMBER and variant == AS_STATED:
            rhs_kind = FIRST
        if form == POLYNOMIAL:
            rhs = Poly()
            for ell in range(n + 1):
                rhs = rhs + plain_poly(ell, k, rhs_kind).scale(stirling2(n, ell))
        else:
            rhs = sum(
                (
                    stirling2(n, ell) * plain_number(ell, k, rhs_kind)
                    for ell in range(n + 1)
                ),
                Fraction(0),
            )
        return lhs, rhs

    if case_id == 5:
        # Roots 0..n-1 with multiplicity one: the integrand IS the falling
        # factorial, so the family value equals the plain family member.
        n, k, form = inputs["n"], inputs["k"], inputs["form"]
        params = ParamVector.run(0, n)
        q = DaeheeQuery(n, k, params, kind, form)
        lhs = value(q)
        rhs = plain_poly(n, k, kind) if form == POLYNOMIAL else plain_number(n, k, kind)
        return lhs, rhs

    if case_id in (6, 7):
        # All k integration variables collapsed to a single one (case 7 fixes
        # all multiplicities to one).  The printed second-kind form carries a
        # single overall minus instead of negating the argument; corrected
        # reflects the integrand.
        params: ParamVector = inputs["params"]
        if case_id == 7:
            params = ParamVector(params.alphas, (1,) * len(params))
        q = DaeheeQuery(len(params), 1, params, kind, NUMBER)
        lhs = number_value(q)
        direct = single_integral_value(params)
        if kind == FIRST:
            rhs = direct
        elif variant == AS_STATED:
            rhs = -direct
        else:
            rhs = single_integral_value_signed(params)
        return lhs, rhs

    if case_id == 8:
        # Same integrand, box functional: the family query re-evaluated under
        # box limits must equal the multiparameter poly-Cauchy number.
        params, k = inputs["params"], inputs["k"]
        limits = tuple(Fraction(l) for l in inputs["limits"])
        q = DaeheeQuery(len(params), k, params, kind, NUMBER)
        lhs = eval_product_functional(integrand(q), Box(limits))
        pq = polycauchy.PolyCauchyQuery(len(params), k, params, limits, kind)
        rhs = polycauchy.poly_cauchy(pq)
        return lhs, rhs

    raise ValueError(f"unknown special case id {case_id!r}")


def single_integral_value_signed(params: ParamVector) -> Fraction:
    """One-variable moment sum with the argument negated (second kind)."""
    row = comtet_first(params)
    return sum(
        (
            (-1) ** m * row.coeffs[m] * volkenborn_moment(m)
            for m in range(len(row.coeffs))
        ),
        Fraction(0),
    )
