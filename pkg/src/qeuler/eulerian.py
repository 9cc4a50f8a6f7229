"""Classical Eulerian polynomials: recurrence engine and generating-function oracle.

Two independent engines are kept deliberately.  The canonical convention is
the binomial recurrence

    A_0 = 1,   A_n(t) = sum_{k<n} C(n,k) A_k(t) (t-1)^{n-1-k}   (n >= 1),

whose values satisfy A_n(1) = n! with positive palindromic coefficients.
The exponential generating function (1-x)/(e^{t(1-x)} - x) expands to
(-1)^n A_n(x), i.e. the two printed conventions differ by the substitution
t -> -t; ``eulerian_series_coeff`` exposes the series side as an oracle so the
sign reconciliation is checked, never assumed.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

from .errors import PoleAtMinusOne, PoleAtOne
from .polyq import PolyQ
from .series import TruncSeries, series_div

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class EulerianPoly:
    n: int
    poly: PolyQ


_polys: list[PolyQ] = [PolyQ.one()]
_polys_lock = threading.Lock()


def eulerian_poly(n: int) -> EulerianPoly:
    """A_n(t) from the recurrence engine."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= len(_polys):
        with _polys_lock:
            t_minus_1 = PolyQ((-1, 1))
            while len(_polys) <= n:
                m = len(_polys)
                acc = PolyQ.zero()
                for k in range(m):
                    acc = acc + comb(m, k) * _polys[k] * t_minus_1 ** (m - 1 - k)
                _polys.append(acc)
    return EulerianPoly(n, _polys[n])


def recurrence_residual(n: int) -> PolyQ:
    """sum_{k<=n} C(n,k) A_k(t) (t-1)^{n-k} - t A_n(t).

    Zero for n >= 1; equals 1 - t for n = 0.
    """
    t_minus_1 = PolyQ((-1, 1))
    acc = PolyQ.zero()
    for k in range(n + 1):
        acc = acc + comb(n, k) * eulerian_poly(k).poly * t_minus_1 ** (n - k)
    return acc - PolyQ((0, 1)) * eulerian_poly(n).poly


def eulerian_series_coeff(n: int, x0: Scalar) -> Fraction:
    """Coefficient of t^n/n! in (1-x0)/(e^{t(1-x0)} - x0), via series division.

    Equals (-1)^n A_n(x0); kept independent of the recurrence engine.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x0)
    if x == 1:
        raise PoleAtOne("the generating function has a vanishing denominator at x = 1")
    num = TruncSeries.constant(1 - x, n)
    den_coeffs = [(1 - x) ** j for j in range(n + 1)]
    den_coeffs[0] = 1 - x  # e^{t(1-x)} contributes 1 at t^0, then subtract x
    den = TruncSeries(n, den_coeffs)
    return series_div(num, den).coeffs[n]


def witt_value(n: int, q: Scalar) -> Fraction:
    """A_n(-q) from the recurrence engine.

    This is the polynomial value for which the fermionic integral of x^n
    under the -q^{-1} measure equals (-1)^n (1+q)^{-n} A_n(-q).
    """
    qf = Fraction(q)
    if qf == -1:
        raise PoleAtMinusOne("q = -1 makes -q the excluded evaluation point")
    return eulerian_poly(n).poly.evaluate(-qf)
