"""The sequence and polynomial families whose Hankel determinants we study.

Integer side
    ``catalan(n)``          1, 1, 2, 5, 14, 42, ...
    ``catalan_conv(k, n)``  coefficient of x^n in c(x)^k, where c is the
                            Catalan generating function; closed form
                            k/(n+k) * C(2n+k-1, n), an integer for all k >= 1.

Polynomial side (weight variable t)
    ``narayana(n)``         the Narayana polynomial C_n(t); at t=1 it
                            collapses to catalan(n).
    ``narayana_series(order)``           c0(x,t) = sum C_n(t) x^n
    ``narayana_series_weighted(order)``  c1(x,t) = 1 + t * sum_{n>=1} C_n(t) x^n
    ``mixed_power_series(k, order)``     alternating product
        c^(0) = 1,  c^(2j) = (c0*c1)^j,  c^(2j+1) = (c0*c1)^j * c0,
        whose x^n coefficient ``narayana_conv(k, n)`` reduces to
        catalan_conv(k, n) at t=1.

Lucas side
    ``lucas(n, x, s)``      L_0 = 2, L_1 = x, L_n = x L_{n-1} + s L_{n-2},
                            generic over any operands with +, *.
    ``companion_poly(k)``     L_k(1, -x), the integer companion polynomial.
    ``companion_poly_t(k)``   its t-refinement; degree floor((k+1)/2) in x.

Everything is exact; results are cached where rebuilding would repeat work.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .polyring import UniPoly
from .series import INTEGER_RING, POLY_RING, Series


def catalan(n: int) -> int:
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


def catalan_conv(k: int, n: int) -> int:
    """Coefficient of x^n in the k-th power of the Catalan series."""
    if k < 1:
        raise ValueError(f"convolution power k={k} must be >= 1")
    if n < 0:
        return 0
    return k * comb(2 * n + k - 1, n) // (n + k)


@lru_cache(maxsize=None)
def catalan_series(order: int) -> Series:
    return Series(INTEGER_RING, [catalan(n) for n in range(order)])


def catalan_power_series(k: int, order: int) -> Series:
    """c(x)^k as a series, for cross-checking the closed form."""
    if k < 1:
        raise ValueError(f"convolution power k={k} must be >= 1")
    return catalan_series(order) ** k


@lru_cache(maxsize=None)
def narayana(n: int) -> UniPoly:
    """Narayana polynomial: sum over k of C(n,k) C(n-1,k) / (k+1) * t^k."""
    if n < 0:
        return UniPoly()
    if n == 0:
        return UniPoly((1,))
    return UniPoly(
        [comb(n, k) * comb(n - 1, k) // (k + 1) for k in range(n)]
    )


@lru_cache(maxsize=None)
def narayana_series(order: int) -> Series:
    """c0(x,t): ordinary generating function of the Narayana polynomials."""
    return Series(POLY_RING, [narayana(n) for n in range(order)])


@lru_cache(maxsize=None)
def narayana_series_weighted(order: int) -> Series:
    """c1(x,t) = 1 - t + t*c0(x,t): every positive-index coefficient gains t."""
    t = UniPoly((0, 1))
    coeffs: list[UniPoly] = [UniPoly((1,))]
    for n in range(1, order):
        coeffs.append(t * narayana(n))
    return Series(POLY_RING, coeffs)


@lru_cache(maxsize=None)
def _weighted_pair(order: int) -> Series:
    return narayana_series(order) * narayana_series_weighted(order)


@lru_cache(maxsize=None)
def _weighted_pair_power(j: int, order: int) -> Series:
    if j == 0:
        return Series.one(POLY_RING, order)
    return _weighted_pair_power(j - 1, order) * _weighted_pair(order)


def mixed_power_series(k: int, order: int) -> Series:
    """The k-th mixed convolution power, alternating c0 and c1 factors.

    k = 0 is the constant series 1.  At t = 1 both factors collapse to the
    Catalan series, so the x^n coefficient evaluates to catalan_conv(k, n).
    """
    if k < 0:
        raise ValueError(f"convolution power k={k} must be >= 0")
    half, odd = divmod(k, 2)
    base = _weighted_pair_power(half, order)
    if odd:
        return base * narayana_series(order)
    return base


def narayana_conv(k: int, n: int) -> UniPoly:
    """Coefficient of x^n in the k-th mixed convolution power."""
    if k < 1:
        raise ValueError(f"convolution power k={k} must be >= 1")
    if n < 0:
        return UniPoly()
    # Round the truncation order up so repeated queries share cached series.
    order = 16 * (n // 16 + 1)
    return mixed_power_series(k, order).coefficient(n)


def lucas(n: int, x, s):
    """Lucas polynomial L_n evaluated on any commutative operands.

    L_0 = 2, L_1 = x, L_n = x*L_{n-1} + s*L_{n-2}.  Works for ints,
    UniPoly and Series operands alike; 2 is formed inside the operand ring.
    """
    if n < 0:
        raise ValueError(f"Lucas index n={n} must be >= 0")
    two = x * 0 + 2
    a, b = two, x
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, x * b + s * a
    return b


def companion_poly(k: int) -> UniPoly:
    """L_k(1, -x) as a polynomial in x; degree floor(k/2).

    First few: 1; 1 - 2x; 1 - 3x; 1 - 4x + 2x^2; 1 - 5x + 5x^2.
    """
    if k < 1:
        raise ValueError(f"companion index k={k} must be >= 1")
    return lucas(k, UniPoly((1,)), UniPoly((0, -1)))


def companion_poly_t(k: int) -> Series:
    """t-refined companion polynomial, as a series in x over Z[t].

    Even index 2j:  L_j(1 - (1+t)x, -t x^2).
    Odd index 2j+1: xt * L_j(...) + L_{j+1}(...), same arguments.
    The x-degree is floor((k+1)/2) and the series order is one past it, so
    the value is the whole polynomial.  At t=1 it collapses to
    companion_poly(k).
    """
    if k < 1:
        raise ValueError(f"companion index k={k} must be >= 1")
    order = (k + 1) // 2 + 1
    x_arg = Series.from_polynomial(POLY_RING, [1, UniPoly((-1, -1))], order)
    s_arg = Series.from_polynomial(POLY_RING, [0, 0, UniPoly((0, -1))], order)
    half, odd = divmod(k, 2)
    if not odd:
        return lucas(half, x_arg, s_arg)
    xt = Series.from_polynomial(POLY_RING, [0, UniPoly((0, 1))], order)
    return xt * lucas(half, x_arg, s_arg) + lucas(half + 1, x_arg, s_arg)


CATALAN_CONV = "catalan-conv"
NARAYANA_CONV = "narayana-conv"
FAMILY_KINDS = (CATALAN_CONV, NARAYANA_CONV)


@dataclass(frozen=True)
class Family:
    """A convolution-power family selected by kind and power k."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"convolution power k={self.k} must be >= 1")

    @property
    def polynomial(self) -> bool:
        return self.kind == NARAYANA_CONV

    def value(self, n: int):
        if self.kind == CATALAN_CONV:
            return catalan_conv(self.k, n)
        return narayana_conv(self.k, n)
