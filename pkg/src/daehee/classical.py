"""Classical triangles and sequences: Stirling, Lah, Bernoulli, Daehee, Cauchy.

All values are exact rationals, memoized per process.  Conventions:

* Stirling numbers of the first kind are SIGNED: s(n, m) is the coefficient
  of x^m in the falling factorial x(x-1)...(x-n+1).
* B_1 = -1/2, i.e. Bernoulli numbers are coefficient extractions from
  t/(e^t - 1).  This is the convention under which the monomial moments of
  the underlying product functional are exactly the Bernoulli numbers.
* Lah numbers are UNSIGNED, L(m, l) = binom(m-1, l-1) * m!/l!; any sign
  from reflecting the argument is handled explicitly at use sites.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache

from .core import (
    Poly,
    RatLike,
    bernoulli_gf,
    exp_xt,
    falling_factorial,
    integrate_0_to,
    log1p_over_t,
)


def _check_pair(n: int, m: int) -> None:
    if n < 0 or m < 0 or m > n:
        raise ValueError(f"indices out of range: ({n}, {m})")


@cache
def stirling1(n: int, m: int) -> Fraction:
    """Signed Stirling number of the first kind s(n, m)."""
    _check_pair(n, m)
    if n == 0:
        return Fraction(1)
    if m == 0:
        return Fraction(0)
    # s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m)
    upper = stirling1(n - 1, m) if m <= n - 1 else Fraction(0)
    return stirling1(n - 1, m - 1) - (n - 1) * upper


@cache
def stirling2(n: int, m: int) -> Fraction:
    """Stirling number of the second kind S(n, m)."""
    _check_pair(n, m)
    if n == 0:
        return Fraction(1)
    if m == 0:
        return Fraction(0)
    upper = stirling2(n - 1, m) if m <= n - 1 else Fraction(0)
    return m * upper + stirling2(n - 1, m - 1)


@cache
def lah(m: int, ell: int) -> Fraction:
    """Unsigned Lah number L(m, ell)."""
    _check_pair(m, ell)
    if m == 0:
        return Fraction(1)
    if ell == 0:
        return Fraction(0)
    return Fraction(math.comb(m - 1, ell - 1) * math.factorial(m), math.factorial(ell))


@cache
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return bernoulli_gf(n).coefficient(n) * math.factorial(n)


@cache
def bernoulli_higher(n: int, k: int, x: RatLike = 0) -> Fraction:
    """Higher-order Bernoulli polynomial value B_n^(k)(x).

    Defined as n! times the t^n coefficient of (t/(e^t-1))^k e^{xt};
    k = 0 degenerates to x^n.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    x = Fraction(x)
    if k == 0:
        return x**n
    series = bernoulli_gf(n).pow(k) * exp_xt(x, n)
    return series.coefficient(n) * math.factorial(n)


@cache
def daehee(n: int) -> Fraction:
    """Daehee number D_n = (-1)^n n!/(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Fraction((-1) ** n * math.factorial(n), n + 1)


@cache
def daehee_higher(n: int, k: int) -> Fraction:
    """Higher-order Daehee number D_n^(k) = s(n+k, k) / binom(n+k, k).

    Agrees with n! times the t^n coefficient of (log(1+t)/t)^k.
    k = 0 is admitted only for n = 0 (the empty generating-function power).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k == 0:
        if n == 0:
            return Fraction(1)
        raise ValueError("order k must be at least 1 when n > 0")
    if k < 0:
        raise ValueError("order k must be nonnegative")
    return stirling1(n + k, k) / math.comb(n + k, k)


@cache
def daehee_higher_gf(n: int, k: int) -> Fraction:
    """Higher-order Daehee number via the generating-function route."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return log1p_over_t(n).pow(k).coefficient(n) * math.factorial(n)


@cache
def daehee_poly_higher(n: int, k: int, x: RatLike = 0) -> Fraction:
    """Higher-order Daehee polynomial value D_n^(k)(x).

    Computed through the Stirling connection sum_l s(n, l) B_l^(k)(x);
    at x = 0 this equals daehee_higher(n, k).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("order k must be at least 1")
    x = Fraction(x)
    return sum(
        (stirling1(n, ell) * bernoulli_higher(ell, k, x) for ell in range(n + 1)),
        Fraction(0),
    )


@cache
def cauchy1(n: int) -> Fraction:
    """Cauchy number of the first kind: integral of x(x-1)...(x-n+1) over [0,1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return integrate_0_to(falling_factorial(n), 1)


@cache
def cauchy2(n: int) -> Fraction:
    """Cauchy number of the second kind: integral of (-x)(-x-1)...(-x-n+1) over [0,1]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    flipped = falling_factorial(n).compose(Poly.of(0, -1))  # substitute -x
    return integrate_0_to(flipped, 1)
