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

"""Weierstrass data of genus zero minimal immersions.

A datum is the vector ``phi`` of rational functions with
``df_j = phi_j dz``; the immersion is ``f = 2 Re int phi dz`` from the
basepoint.  This module validates data and evaluates ``f`` and its
induced metric.
"""

import cmath
import math

from collections import namedtuple

import numpy as np

from scipy.integrate import quad_vec

from .config import (CFG_PATH_CLEARANCE,
                     CFG_DETOUR_RADIUS,
                     CFG_QUADRATURE_LIMIT,
                     resolve_tolerances)
from .complex_rational import (ComplexPoly,
                               RationalMap,
                               INFINITY,
                               is_infinity,
                               same_point,
                               point_sort_key,
                               roots,
                               common_roots,
                               form_laurent_expand,
                               form_order,
                               residue,
                               ZeroFunctionError)
from .utils import create_logger

logger = create_logger("minimalkit.weierstrass")


class InvalidDatumError(Exception):

    """Raised when a Weierstrass datum is malformed or not complete."""


class DegenerateDatumError(InvalidDatumError):

    """Raised when every component of a datum is zero."""


class NearSingularityError(Exception):

    """Raised when the immersion is evaluated too close to a puncture."""

    def __init__(self, message, point=None):
        super(NearSingularityError, self).__init__(message)
        self.point = point


class SingularMetricError(Exception):

    """Raised when the metric is requested at a puncture."""


MetricSample = namedtuple('MetricSample', ['z', 'lambda_sq'])

NullCheck = namedtuple('NullCheck', ['ok', 'defect', 'offending'])

ResidueCheck = namedtuple('ResidueCheck', ['ok', 'worst_imag', 'residues'])

VectorLaurent = namedtuple('VectorLaurent', ['center', 'order', 'coeffs'])


def _as_rational(component):
    if isinstance(component, RationalMap):
        return component
    num, den = component
    return RationalMap(num, den)


class WeierstrassData(object):

    """The Weierstrass datum of a genus zero minimal immersion.

    :param phi: list of RationalMap, or of ``(num, den)`` coefficient pairs.
    :param punctures: sphere points; detected from the poles when None.
    :param basepoint: finite non-puncture point; defaulted when None.
    :param label: free-form name.
    """

    def __init__(self, phi, punctures=None, basepoint=None, label='',
                 tol=None, reduce=True):
        tol = resolve_tolerances(tol)
        phi = [_as_rational(component) for component in phi]
        if len(phi) < 3:
            raise InvalidDatumError("A datum needs n >= 3 components, got %d"
                                    % (len(phi),))
        if reduce:
            phi = [component.reduced(tol) for component in phi]
        self._phi = tuple(phi)
        self._dphi = tuple(component.derivative() for component in phi)
        if punctures is None:
            punctures = detect_punctures(self._phi, tol)
        else:
            punctures = _normalize_points(punctures, tol)
        self._punctures = tuple(punctures)
        self.label = label
        if basepoint is None:
            basepoint = default_basepoint(self._punctures)
        basepoint = complex(basepoint)
        for point in self.finite_punctures:
            if same_point(point, basepoint, tol.point):
                raise InvalidDatumError("Basepoint %r is a puncture"
                                        % (basepoint,))
        self._basepoint = basepoint

    @property
    def phi(self):
        return self._phi

    @property
    def n(self):
        return len(self._phi)

    @property
    def punctures(self):
        return self._punctures

    @property
    def basepoint(self):
        return self._basepoint

    @property
    def finite_punctures(self):
        return [p for p in self._punctures if not is_infinity(p)]

    @property
    def has_infinity(self):
        return any(is_infinity(p) for p in self._punctures)

    @property
    def separation(self):
        """Minimal distance between finite punctures, 1 when undefined."""
        return minimal_separation(self.finite_punctures)

    def __repr__(self):
        return "<WeierstrassData %r n=%d ends=%d>" % (self.label, self.n,
                                                     len(self._punctures))

    def evaluate(self, z):
        """Return the complex vector ``phi(z)``."""
        return np.array([component(z) for component in self._phi],
                        dtype=complex)

    def evaluate_derivative(self, z):
        return np.array([component(z) for component in self._dphi],
                        dtype=complex)


def minimal_separation(points):
    points = [complex(p) for p in points]
    if len(points) < 2:
        return 1.0
    return min(abs(p - q) for i, p in enumerate(points)
               for q in points[i + 1:])


def default_basepoint(punctures):
    """0 unless it is a puncture, else half way to the nearest other one."""
    finite = [complex(p) for p in punctures if not is_infinity(p)]
    if not any(p == 0 for p in finite):
        return 0j
    others = [abs(p) for p in finite if p != 0]
    delta = min(others) if others else 1.0
    return complex(delta / 2.0)


def _normalize_points(points, tol):
    normalized = []
    for point in points:
        point = point if is_infinity(point) else complex(point)
        if any(same_point(point, known, tol.point) for known in normalized):
            raise InvalidDatumError("Duplicate puncture %r" % (point,))
        normalized.append(point)
    return sorted(normalized, key=point_sort_key)


def detect_punctures(phi, tol=None):
    """Poles of the forms ``phi_j dz`` on the sphere, infinity last.

    :raises DegenerateDatumError: when every component is zero.
    """
    tol = resolve_tolerances(tol)
    phi = [_as_rational(component) for component in phi]
    nonzero = [component for component in phi if not component.is_zero()]
    if not nonzero:
        raise DegenerateDatumError("All components of the datum are zero")
    found = []
    for component in nonzero:
        if component.den.degree() < 1:
            continue
        for pole, _ in roots(component.den, tol):
            if not any(same_point(pole, known, tol.point)
                       for known in found):
                found.append(pole)
    found.sort(key=point_sort_key)
    if any(form_order(component, INFINITY, tol) < 0 for component in nonzero):
        found.append(INFINITY)
    return found


def missing_poles(w, tol=None):
    """Poles of the forms that the datum does not list as punctures."""
    tol = resolve_tolerances(tol)
    return [pole for pole in detect_punctures(w.phi, tol)
            if not any(same_point(pole, p, tol.point) for p in w.punctures)]


def _common_denominators(phi):
    denominators = []
    for component in phi:
        if not component.is_zero() and component.den not in denominators:
            denominators.append(component.den)
    return denominators


def cleared_numerators(phi):
    """Numerators of ``phi`` over the product of its distinct denominators.

    :returns: (list of ComplexPoly, list of the distinct denominators)
    """
    denominators = _common_denominators(phi)
    cleared = []
    for component in phi:
        if component.is_zero():
            cleared.append(ComplexPoly())
            continue
        numerator = component.num
        for den in denominators:
            if den != component.den:
                numerator = numerator * den
        cleared.append(numerator)
    return cleared, denominators


def validate_null(w, tol=None):
    """Check the null condition ``sum phi_j**2 == 0``.

    The numerator of the sum over the squared common denominator is
    compared against the size of its individual terms.

    :returns: NullCheck(ok, defect, offending) where ``offending`` lists
        ``(power, magnitude)`` of the coefficients above tolerance.
    """
    tol = resolve_tolerances(tol)
    cleared, _ = cleared_numerators(w.phi)
    terms = [p * p for p in cleared if not p.is_zero()]
    total = ComplexPoly()
    scale = 0.0
    for term in terms:
        total = total + term
        scale = max(scale, float(np.max(np.abs(term.coeffs))))
    if scale == 0:
        return NullCheck(True, 0.0, [])
    magnitudes = np.abs(total.coeffs) / scale
    offending = [(power, float(value)) for power, value in enumerate(magnitudes)
                 if value > tol.null]
    defect = float(np.max(magnitudes)) if len(magnitudes) else 0.0
    if offending:
        logger.info("Null condition fails for %r, defect %.3g"
                    % (w.label, defect))
    return NullCheck(not offending, defect, offending)


def end_laurent(w, p, depth, tol=None):
    """Vector Laurent expansion of the form ``phi dz`` at a puncture.

    Zero components are skipped when fixing the common order.

    :returns: VectorLaurent whose ``coeffs[i]`` is the n-vector of the
        coefficient of ``h**(order + i)``.
    """
    tol = resolve_tolerances(tol)
    expansions = []
    for component in w.phi:
        if component.is_zero():
            expansions.append(None)
        else:
            expansions.append(form_laurent_expand(component, p, 0, tol))
    orders = [series.order for series in expansions if series is not None]
    if not orders:
        raise ZeroFunctionError("All components of the datum are zero")
    order = min(orders)
    coeffs = np.zeros((depth + 1, w.n), dtype=complex)
    for j, (component, series) in enumerate(zip(w.phi, expansions)):
        if series is None:
            continue
        offset = series.order - order
        if offset > depth:
            continue
        series = form_laurent_expand(component, p, depth - offset, tol)
        coeffs[offset:, j] = series.coeffs
    return VectorLaurent(p, order, coeffs)


def residue_vectors(w, tol=None):
    """Residue vector of ``phi dz`` at every puncture, in puncture order."""
    tol = resolve_tolerances(tol)
    return [(p, np.array([residue(component, p, tol) for component in w.phi],
                         dtype=complex))
            for p in w.punctures]


def check_residues_real(w, tol=None):
    """Check that every residue of ``phi dz`` at every end is real.

    :returns: ResidueCheck(ok, worst_imag, residues)
    """
    tol = resolve_tolerances(tol)
    vectors = residue_vectors(w, tol)
    worst = 0.0
    for _, vector in vectors:
        if len(vector):
            worst = max(worst, float(np.max(np.abs(vector.imag))))
    ok = worst <= tol.residue
    if not ok:
        logger.info("Imaginary residue %.3g in %r" % (worst, w.label))
    return ResidueCheck(ok, worst, vectors)


def residue_sum(w, tol=None):
    """Sum of the residue vectors over all poles, zero on the sphere."""
    vectors = residue_vectors(w, tol)
    total = np.zeros(w.n, dtype=complex)
    for _, vector in vectors:
        total = total + vector
    return total


def metric_order_at(w, p, tol=None):
    """Order of the form ``phi dz`` at a sphere point.

    Points that are not punctures give their nonnegative order and are
    logged as non-ends.
    """
    tol = resolve_tolerances(tol)
    orders = [form_order(component, p, tol) for component in w.phi
              if not component.is_zero()]
    if not orders:
        raise ZeroFunctionError("All components of the datum are zero")
    order = min(orders)
    if not any(same_point(p, q, tol.point) for q in w.punctures):
        logger.warning("%r is not an end of %r, order %d"
                       % (p, w.label, order))
    return order


def branch_points(w, tol=None):
    """Points outside the punctures where every ``phi_j dz`` vanishes.

    :returns: list of ``(point, order)``, infinity included.
    """
    tol = resolve_tolerances(tol)
    nonzero = [component for component in w.phi if not component.is_zero()]
    found = []
    numerators = [component.num for component in nonzero]
    if min(p.degree() for p in numerators) >= 1:
        smallest = min(numerators, key=lambda p: p.degree())
        candidates = [root for root, _ in roots(smallest, tol)]
        for point, order in common_roots(numerators, candidates, tol):
            if not any(same_point(point, q, tol.point)
                       for q in w.finite_punctures):
                found.append((point, order))
    if not w.has_infinity:
        order = min(form_order(component, INFINITY, tol)
                    for component in nonzero)
        if order > 0:
            found.append((INFINITY, order))
    if found:
        logger.warning("Branch points in %r: %r" % (w.label, found))
    return found


def conformal_factor(w, z, tol=None):
    """Return the metric ``lambda**2 = 2 sum |phi_j(z)|**2`` at ``z``.

    :raises SingularMetricError: when ``z`` is a puncture.
    """
    tol = resolve_tolerances(tol)
    z = complex(z)
    for point in w.finite_punctures:
        if abs(z - point) <= tol.zero * (1.0 + abs(point)):
            raise SingularMetricError("The metric is singular at the "
                                      "puncture %r" % (point,))
    with np.errstate(divide='ignore', invalid='ignore'):
        values = w.evaluate(z)
    if not np.all(np.isfinite(values)):
        raise SingularMetricError("The metric is singular at %r" % (z,))
    return MetricSample(z, 2.0 * float(np.sum(np.abs(values) ** 2)))


class _Line(namedtuple('_Line', ['start', 'end'])):

    __slots__ = ()

    def point(self, t):
        return self.start + t * (self.end - self.start)

    def velocity(self, t):
        return self.end - self.start


class _Arc(namedtuple('_Arc', ['center', 'radius', 'angle', 'sweep'])):

    __slots__ = ()

    def point(self, t):
        return self.center + self.radius * cmath.exp(1j * (self.angle
                                                           + t * self.sweep))

    def velocity(self, t):
        return 1j * self.sweep * (self.point(t) - self.center)


def _arc_between(center, radius, a, b):
    alpha = cmath.phase(a - center)
    sweep = cmath.phase((b - center) / (a - center))
    return _Arc(center, radius, alpha, sweep)


def _disk_crossing(start, end, center, radius):
    direction = end - start
    offset = start - center
    qa = abs(direction) ** 2
    if qa == 0:
        return None
    qb = 2.0 * (offset.conjugate() * direction).real
    qc = abs(offset) ** 2 - radius ** 2
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0:
        return None
    root = math.sqrt(disc)
    t0 = max((-qb - root) / (2.0 * qa), 0.0)
    t1 = min((-qb + root) / (2.0 * qa), 1.0)
    if t1 - t0 <= 1e-12:
        return None
    return t0, t1


def _plan_path(start, end, centers, radius):
    """Straight legs and circular detours from ``start`` to ``end``."""
    pieces = []
    cursor, target = start, end
    start_disk = end_disk = None
    for center in centers:
        if abs(start - center) < radius:
            start_disk = center
            cursor = center + radius * (start - center) / abs(start - center)
            pieces.append(_Line(start, cursor))
        if abs(end - center) < radius:
            end_disk = center
            target = center + radius * (end - center) / abs(end - center)
    if start_disk is not None and start_disk == end_disk:
        pieces.append(_arc_between(start_disk, radius, cursor, target))
        pieces.append(_Line(target, end))
        return pieces
    crossings = []
    for center in centers:
        crossing = _disk_crossing(cursor, target, center, radius)
        if crossing is not None:
            crossings.append((crossing[0], crossing[1], center))
    crossings.sort(key=lambda item: item[0])
    position = cursor
    for t0, t1, center in crossings:
        enter = cursor + t0 * (target - cursor)
        leave = cursor + t1 * (target - cursor)
        if enter != position:
            pieces.append(_Line(position, enter))
        pieces.append(_arc_between(center, radius, enter, leave))
        position = leave
    if target != position:
        pieces.append(_Line(position, target))
    if end != target:
        pieces.append(_Line(target, end))
    if crossings:
        logger.debug("Path %r -> %r detours around %d punctures"
                     % (start, end, len(crossings)))
    return pieces


def _piece_integral(w, piece, tol):
    def integrand(t):
        return 2.0 * (w.evaluate(piece.point(t)) * piece.velocity(t)).real

    # Rounding limits the absolute accuracy to the size of the integrand.
    size = max(float(np.max(np.abs(integrand(t)))) for t in (0.0, 0.5, 1.0))
    epsabs = tol.quad * (1.0 + size)
    value, error, info = quad_vec(integrand, 0.0, 1.0, epsabs=epsabs,
                                  epsrel=tol.quad, limit=CFG_QUADRATURE_LIMIT,
                                  full_output=True)
    if info.status == 2 or not np.all(np.isfinite(value)):
        raise NearSingularityError("Non-finite integrand on %r" % (piece,),
                                   point=piece.point(0.5))
    if info.status != 0:
        logger.warning("Quadrature on %r stopped after %d evaluations, "
                       "error estimate %.3g > %.3g"
                       % (piece, info.neval, error, epsabs))
    return value


def _check_clearance(w, z, tol):
    clearance = CFG_PATH_CLEARANCE * w.separation
    for point in w.finite_punctures:
        if abs(z - point) <= clearance:
            raise NearSingularityError("%r is within %.3g of the puncture %r"
                                       % (z, clearance, point), point=z)


def segment_integral(w, a, b, tol=None):
    """``2 Re int phi dz`` along the straight segment from ``a`` to ``b``.

    The caller guarantees the segment stays clear of the punctures.
    """
    tol = resolve_tolerances(tol)
    return _piece_integral(w, _Line(complex(a), complex(b)), tol)


def immersion_eval(w, z, waypoints=None, start=None, tol=None):
    """Evaluate ``f(z) = 2 Re int_{z0}^{z} phi dz``.

    The path runs through the optional ``waypoints`` on straight legs,
    with circular detours around every puncture it would pass too close.

    :param start: optional ``(point, value)`` to integrate from instead of
        the basepoint.
    :raises NearSingularityError: when ``z`` is within the clearance of a
        puncture.
    """
    tol = resolve_tolerances(tol)
    if is_infinity(z):
        raise NearSingularityError("Cannot evaluate the immersion at "
                                   "infinity", point=z)
    z = complex(z)
    _check_clearance(w, z, tol)
    if start is None:
        origin, value = w.basepoint, np.zeros(w.n)
    else:
        origin, value = complex(start[0]), np.array(start[1], dtype=float)
    route = [origin] + [complex(p) for p in (waypoints or [])] + [z]
    for point in route[1:-1]:
        _check_clearance(w, point, tol)
    radius = CFG_DETOUR_RADIUS * w.separation
    centers = w.finite_punctures
    for a, b in zip(route[:-1], route[1:]):
        if a == b:
            continue
        for piece in _plan_path(a, b, centers, radius):
            value = value + _piece_integral(w, piece, tol)
    return value


def reparametrize(w, a, b, c, d, tol=None):
    """Precompose a datum with ``z = (a u + b)/(c u + d)``.

    The new datum describes the same surface in the coordinate ``u``;
    its basepoint is the preimage of the old one when that is finite.
    """
    tol = resolve_tolerances(tol)
    phi = [component.compose_mobius(a, b, c, d, jacobian=True)
           for component in w.phi]
    denominator = a - c * w.basepoint
    basepoint = None
    if denominator != 0:
        basepoint = (d * w.basepoint - b) / denominator
    result = WeierstrassData(phi, label=w.label, tol=tol)
    if basepoint is not None and not any(
            same_point(basepoint, p, tol.point)
            for p in result.finite_punctures):
        result = WeierstrassData(result.phi, punctures=result.punctures,
                                 basepoint=basepoint, label=w.label,
                                 tol=tol, reduce=False)
    return result
