# -*- coding: utf-8 -*-
#
# This file is part of Minimal Kit.
# Copyright (C) 2026 Minimal Kit developers.
#
# Minimal Kit is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License as
# published by the Free Software Foundation; either version 2 of the
# License, or (at your option) any later version.
#
# Minimal Kit is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.

"""Complex polynomials, rational maps and Laurent expansions.

Coefficients are double precision complex numbers stored in ascending
powers.  Every value is immutable once built.
"""

from collections import namedtuple

import numpy as np
import numpy.polynomial.polynomial as poly

from .config import resolve_tolerances
from .utils import create_logger

logger = create_logger("minimalkit.complex_rational")


class DegenerateInputError(Exception):

    """Raised when a zero or constant polynomial reaches an operation."""


class ZeroFunctionError(Exception):

    """Raised when the order of the zero function is requested."""


class _Infinity(object):

    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_Infinity, cls).__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INFINITY'

    def __str__(self):
        return 'inf'

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinity(point):
    """Return True for the point at infinity."""
    return point is INFINITY


def same_point(p, q, radius=1e-8):
    """Compare two sphere points, finite ones up to ``radius*(1+|p|)``."""
    if is_infinity(p) or is_infinity(q):
        return is_infinity(p) and is_infinity(q)
    return abs(complex(p) - complex(q)) <= radius * (1.0 + abs(complex(p)))


def point_sort_key(point):
    """Deterministic ordering of sphere points, infinity last."""
    if is_infinity(point):
        return (1, 0.0, 0.0)
    point = complex(point)
    return (0, round(point.real, 9), round(point.imag, 9))


class ComplexPoly(object):

    """Polynomial with complex coefficients in ascending powers.

    The zero polynomial has no coefficients and degree -1.  Trailing
    exact zeros are stripped on construction.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=()):
        coeffs = np.array(coeffs, dtype=complex).ravel()
        nonzero = np.flatnonzero(coeffs)
        if len(nonzero):
            coeffs = coeffs[:nonzero[-1] + 1].copy()
        else:
            coeffs = np.zeros(0, dtype=complex)
        coeffs.flags.writeable = False
        self._coeffs = coeffs

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        """Build ``leading * prod(z - r)``."""
        result = cls([leading])
        for root in roots:
            result = result * cls([-complex(root), 1.0])
        return result

    @classmethod
    def monomial(cls, power, coefficient=1.0):
        """Build ``coefficient * z**power``."""
        coeffs = np.zeros(power + 1, dtype=complex)
        coeffs[power] = coefficient
        return cls(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return len(self._coeffs) == 0

    def leading(self):
        if self.is_zero():
            return 0j
        return self._coeffs[-1]

    def norm(self):
        """Euclidean norm of the coefficient vector."""
        return float(np.linalg.norm(self._coeffs))

    def scale_at(self, center):
        """Bound on the coefficient sizes of ``p(center + h)``."""
        if self.is_zero():
            return 0.0
        powers = (1.0 + abs(center)) ** np.arange(len(self._coeffs))
        return float(np.sum(np.abs(self._coeffs) * powers))

    def __call__(self, z):
        if self.is_zero():
            return np.zeros_like(np.asarray(z, dtype=complex))
        return poly.polyval(z, self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, ComplexPoly):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(tuple(self._coeffs.tolist()))

    def __repr__(self):
        return "ComplexPoly(%r)" % (self._coeffs.tolist(),)

    def __neg__(self):
        return ComplexPoly(-self._coeffs)

    def __add__(self, other):
        return poly_arith(self, _as_poly(other), 'add')

    __radd__ = __add__

    def __sub__(self, other):
        return poly_arith(self, _as_poly(other), 'sub')

    def __rsub__(self, other):
        return poly_arith(_as_poly(other), self, 'sub')

    def __mul__(self, other):
        return poly_arith(self, _as_poly(other), 'mul')

    __rmul__ = __mul__

    def __pow__(self, power):
        result = ComplexPoly([1.0])
        for _ in range(power):
            result = result * self
        return result

    def derivative(self, order=1):
        if self.degree() < order:
            return ComplexPoly()
        return ComplexPoly(poly.polyder(self._coeffs, order))

    def shift(self, center):
        """Return the polynomial ``h -> p(center + h)``."""
        if self.is_zero():
            return self
        result = np.array([self._coeffs[-1]], dtype=complex)
        for coeff in self._coeffs[-2::-1]:
            result = np.convolve(result, [center, 1.0])
            result[0] += coeff
        return ComplexPoly(result)

    def reverse(self):
        """Return ``z**deg * p(1/z)``."""
        return ComplexPoly(self._coeffs[::-1])

    def monic(self):
        if self.is_zero():
            raise DegenerateInputError("The zero polynomial has no monic form")
        return ComplexPoly(self._coeffs / self._coeffs[-1])

    def divmod(self, other):
        """Polynomial division returning ``(quotient, remainder)``."""
        if other.is_zero():
            raise DegenerateInputError("Division by the zero polynomial")
        if self.is_zero():
            return ComplexPoly(), ComplexPoly()
        if self.degree() < other.degree():
            return ComplexPoly(), self
        quotient, remainder = poly.polydiv(self._coeffs, other._coeffs)
        return ComplexPoly(quotient), ComplexPoly(remainder)

    def order_at(self, center, tol=None):
        """Multiplicity of ``center`` as a root, up to the zero tolerance."""
        if self.is_zero():
            raise ZeroFunctionError("The zero polynomial has no order")
        zero = resolve_tolerances(tol).zero
        shifted = self.shift(center).coeffs
        threshold = zero * self.scale_at(center)
        order = 0
        while order < len(shifted) - 1 and abs(shifted[order]) <= threshold:
            order += 1
        return order


def _as_poly(value):
    if isinstance(value, ComplexPoly):
        return value
    return ComplexPoly([value])


def poly_arith(a, b, op):
    """Exact coefficient arithmetic between two polynomials.

    :param op: one of ``'add'``, ``'sub'`` or ``'mul'``.
    :returns: ComplexPoly with trailing zeros stripped.
    """
    if op == 'add':
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        return ComplexPoly(poly.polyadd(a.coeffs, b.coeffs))
    elif op == 'sub':
        if b.is_zero():
            return a
        if a.is_zero():
            return -b
        return ComplexPoly(poly.polysub(a.coeffs, b.coeffs))
    elif op == 'mul':
        if a.is_zero() or b.is_zero():
            return ComplexPoly()
        return ComplexPoly(np.convolve(a.coeffs, b.coeffs))
    raise ValueError("Unknown polynomial operation: %r" % (op,))


def _polish(p, guess, multiplicity, iterations=3):
    """Newton steps on the (multiplicity-1)-th derivative of ``p``."""
    target = p.derivative(multiplicity - 1)
    slope = target.derivative()
    best, best_value = guess, abs(target(guess))
    current = guess
    for _ in range(iterations):
        denominator = slope(current)
        if denominator == 0:
            break
        current = current - target(current) / denominator
        value = abs(target(current))
        if value < best_value:
            best, best_value = current, value
        else:
            break
    return complex(best)


def _cluster_roots(p, candidates, tol):
    remaining = [complex(x) for x in candidates]
    found = []
    while remaining:
        seed = remaining[0]
        by_distance = sorted(range(len(remaining)),
                             key=lambda i: abs(remaining[i] - seed))
        radius = tol.cluster * (1.0 + abs(seed))
        size = len([i for i in by_distance
                    if abs(remaining[i] - seed) <= 2 * radius])
        for multiplicity in range(size, 0, -1):
            members = [remaining[i] for i in by_distance[:multiplicity]]
            centre = _polish(p, sum(members) / multiplicity, multiplicity)
            if multiplicity == 1 or p.order_at(centre, tol) >= multiplicity:
                break
        if multiplicity > 1:
            logger.debug("Merged %d eigenvalues into a root of multiplicity "
                         "%d at %r" % (multiplicity, multiplicity, centre))
        found.append((centre, multiplicity))
        chosen = set(by_distance[:multiplicity])
        remaining = [x for i, x in enumerate(remaining) if i not in chosen]
    return found


def roots(p, tol=None):
    """All complex roots of ``p`` with multiplicities.

    Companion matrix eigenvalues are clustered, each cluster is accepted
    as a multiple root only when the derivatives vanish there, and the
    cluster centre gets Newton polished.

    :returns: list of ``(root, multiplicity)`` pairs, multiplicities
        summing to the degree.
    """
    tol = resolve_tolerances(tol)
    if p.degree() < 1:
        raise DegenerateInputError("Cannot find roots of %r" % (p,))
    coeffs = p.coeffs
    low = 0
    while coeffs[low] == 0:
        low += 1
    found = []
    if low:
        found.append((0j, low))
    rest = ComplexPoly(coeffs[low:])
    if rest.degree() >= 1:
        candidates = poly.polyroots(rest.coeffs)
        found.extend(_cluster_roots(rest, candidates, tol))
    return sorted(found, key=lambda item: point_sort_key(item[0]))


def common_roots(polys, candidates, tol=None):
    """Common roots of nonzero ``polys`` among ``candidates``.

    :returns: list of ``(root, multiplicity)`` with the smallest
        multiplicity over all polynomials.
    """
    tol = resolve_tolerances(tol)
    found = []
    for candidate in candidates:
        if any(same_point(candidate, known, tol.point)
               for known, _ in found):
            continue
        multiplicity = min(p.order_at(candidate, tol) for p in polys)
        if multiplicity > 0:
            found.append((complex(candidate), multiplicity))
    return sorted(found, key=lambda item: point_sort_key(item[0]))


def poly_gcd(a, b, tol=None):
    """Monic greatest common divisor up to the clustering tolerance."""
    tol = resolve_tolerances(tol)
    if a.is_zero() and b.is_zero():
        raise DegenerateInputError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    small, large = sorted((a, b), key=lambda x: x.degree())
    if small.degree() == 0:
        return ComplexPoly([1.0])
    candidates = [root for root, _ in roots(small, tol)]
    factors = common_roots([small, large], candidates, tol)
    return ComplexPoly.from_roots([root for root, multiplicity in factors
                                   for _ in range(multiplicity)])


class LaurentSeries(namedtuple('LaurentSeries', ['center', 'order', 'coeffs'])):

    """Truncated Laurent expansion around a sphere point.

    ``coeffs[i]`` is the coefficient of ``h**(order + i)`` with
    ``h = z - center``, or ``h = 1/z`` at infinity.
    """

    __slots__ = ()

    @property
    def depth(self):
        return len(self.coeffs) - 1

    def coefficient(self, exponent):
        index = exponent - self.order
        if index < 0:
            return 0j
        if index >= len(self.coeffs):
            raise IndexError("Exponent %d beyond the expansion depth"
                             % (exponent,))
        return self.coeffs[index]

    def __call__(self, h):
        h = np.asarray(h, dtype=complex)
        return poly.polyval(h, self.coeffs) * h ** self.order


def _series_divide(numerator, denominator, count):
    result = np.zeros(count, dtype=complex)
    for k in range(count):
        acc = numerator[k] if k < len(numerator) else 0j
        for i in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[i] * result[k - i]
        result[k] = acc / denominator[0]
    return result


def _low_zeros(shifted, original, center, tol):
    threshold = tol.zero * original.scale_at(center)
    count = 0
    while count < len(shifted) - 1 and abs(shifted[count]) <= threshold:
        count += 1
    return count


def laurent_expand(r, center, depth, tol=None):
    """Laurent expansion of a rational map around a sphere point.

    At infinity the series is in ``w = 1/z`` and expands the function
    values only; the 1-form Jacobian is the caller's business.

    :param r: RationalMap to expand.
    :param center: finite complex number or INFINITY.
    :param depth: number of coefficients after the leading one.
    :returns: LaurentSeries with a sharp order.
    """
    tol = resolve_tolerances(tol)
    if r.is_zero():
        raise ZeroFunctionError("The zero function has no Laurent order")
    if depth < 0:
        raise ValueError("Expansion depth must be nonnegative")
    if is_infinity(center):
        num = r.num.reverse().coeffs
        den = r.den.reverse().coeffs
        order = r.den.degree() - r.num.degree()
    else:
        center = complex(center)
        num = r.num.shift(center).coeffs
        den = r.den.shift(center).coeffs
        num_low = _low_zeros(num, r.num, center, tol)
        den_low = _low_zeros(den, r.den, center, tol)
        num, den = num[num_low:], den[den_low:]
        order = num_low - den_low
    coeffs = _series_divide(num, den, depth + 1)
    coeffs.flags.writeable = False
    return LaurentSeries(center, order, coeffs)


def form_laurent_expand(r, center, depth, tol=None):
    """Laurent expansion of the 1-form ``r(z) dz`` in the local coordinate.

    Finite centres use ``z - center``; at infinity ``w = 1/z`` and
    ``dz = -dw/w**2`` shifts the order by -2.
    """
    series = laurent_expand(r, center, depth, tol)
    if is_infinity(center):
        coeffs = -series.coeffs
        coeffs.flags.writeable = False
        return LaurentSeries(INFINITY, series.order - 2, coeffs)
    return series


def form_order(r, center, tol=None):
    """Order of ``r(z) dz`` at a sphere point."""
    return form_laurent_expand(r, center, 0, tol).order


def residue(r, pole, tol=None):
    """Coefficient of ``(z - pole)**-1``; at infinity the residue of ``r dz``.

    Regular points give 0.
    """
    if r.is_zero():
        return 0j
    order = form_order(r, pole, tol)
    if order >= 0:
        return 0j
    series = form_laurent_expand(r, pole, -1 - order, tol)
    return complex(series.coefficient(-1))


class RationalMap(object):

    """Ratio ``num/den`` of complex polynomials."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        num = num if isinstance(num, ComplexPoly) else ComplexPoly(num)
        if den is None:
            den = ComplexPoly([1.0])
        den = den if isinstance(den, ComplexPoly) else ComplexPoly(den)
        if den.is_zero():
            raise DegenerateInputError("Denominator is the zero polynomial")
        if num.is_zero():
            den = ComplexPoly([1.0])
        self.num = num
        self.den = den

    def __repr__(self):
        return "RationalMap(%r, %r)" % (self.num.coeffs.tolist(),
                                        self.den.coeffs.tolist())

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self):
        return self.num.is_zero()

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def derivative(self):
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RationalMap(num, self.den * self.den)

    def poles(self, tol=None):
        """Finite poles with multiplicities, assuming reduced form."""
        if self.den.degree() < 1:
            return []
        return roots(self.den, tol)

    def reduced(self, tol=None):
        """Cancel common roots of numerator and denominator."""
        tol = resolve_tolerances(tol)
        if self.is_zero() or self.num.degree() < 1 or self.den.degree() < 1:
            return self
        common = []
        for root, multiplicity in roots(self.den, tol):
            shared = min(multiplicity, self.num.order_at(root, tol))
            common.extend([root] * shared)
        if not common:
            return self
        divisor = ComplexPoly.from_roots(common)
        num, _ = self.num.divmod(divisor)
        den, _ = self.den.divmod(divisor)
        logger.debug("Cancelled %d common factors of %r" % (len(common), self))
        return RationalMap(num, den)

    def compose_mobius(self, a, b, c, d, jacobian=False):
        """Return ``r((a z + b)/(c z + d))``, times the Jacobian if asked.

        Powers of ``c z + d`` are cancelled exponent-wise, so no
        numerical reduction is needed for reduced inputs.
        """
        determinant = a * d - b * c
        if determinant == 0:
            raise DegenerateInputError("Singular Moebius transformation")
        top = ComplexPoly([b, a])
        bottom = ComplexPoly([d, c])

        def homogenize(p):
            degree = p.degree()
            result = ComplexPoly()
            for power, coeff in enumerate(p.coeffs):
                result = result + (top ** power) * (bottom ** (degree - power)) * coeff
            return result

        if self.is_zero():
            return self
        num = homogenize(self.num)
        den = homogenize(self.den)
        exponent = self.den.degree() - self.num.degree()
        if jacobian:
            num = num * determinant
            exponent -= 2
        if exponent >= 0:
            num = num * bottom ** exponent
        else:
            den = den * bottom ** (-exponent)
        return RationalMap(num, den)
