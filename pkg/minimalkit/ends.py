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

"""Asymptotic geometry of the ends of a minimal surface.

Near an end of order ``-k`` the form expands as
``phi dz = (a_{-k} h**-k + ... + a_{-1} h**-1 + ...) dh``.  Order -2
ends are catenoid-type or planar; every other end is not embedded and
its section by a large sphere winds ``k - 1`` times.
"""

import math

from collections import namedtuple

import numpy as np

from scipy.linalg import svd
from scipy.optimize import brentq

from .config import (CFG_LAURENT_DEPTH,
                     CFG_WINDING_SAMPLES,
                     CFG_WINDING_MAX_REFINEMENTS,
                     CFG_ROTATION_RADII,
                     CFG_ASYMPTOTIC_RADII,
                     CFG_ASYMPTOTIC_SAMPLES,
                     CFG_BOUNDED_GROWTH,
                     CFG_BOUNDED_FLOOR,
                     resolve_tolerances)
from .complex_rational import is_infinity
from .weierstrass import (end_laurent,
                          immersion_eval,
                          segment_integral,
                          metric_order_at)
from .utils import create_logger

logger = create_logger("minimalkit.ends")


class ConsistencyError(Exception):

    """Raised when the Laurent data of an end violates the null relations."""


class ModelUndefinedError(Exception):

    """Raised when an end has no catenoid or plane model."""


class NumericInstabilityError(Exception):

    """Raised when a numeric end invariant cannot be computed reliably."""

    def __init__(self, message, diagnostics=None):
        super(NumericInstabilityError, self).__init__(message)
        self.diagnostics = diagnostics or {}


class EndType(object):

    """Classification of an end."""

    CATENOID = 'CatenoidType'
    PLANAR = 'Planar'
    HIGHER_ORDER = 'HigherOrder'


EndAnalysis = namedtuple('EndAnalysis', ['puncture', 'mu', 'k', 'a_minus2',
                                         'a_minus1', 'leading', 'frame', 'a',
                                         'b', 'classification',
                                         'rotation_index', 'embedded'])

AsymptoticCheck = namedtuple('AsymptoticCheck', ['radii', 'ratios', 'bounded'])


def _orthogonal_part(vector, basis):
    for e in basis:
        vector = vector - np.dot(vector, e) * e
    return vector


def _complete_frame(e1, e2):
    """Standard basis vector farthest from span(e1, e2), lowest index on ties."""
    n = len(e1)
    residuals = [_orthogonal_part(np.eye(n)[i], (e1, e2)) for i in range(n)]
    norms = np.array([np.linalg.norm(r) for r in residuals])
    index = int(np.flatnonzero(norms >= norms.max() - 1e-12)[0])
    return residuals[index] / norms[index]


def _pairing(u, v):
    return complex(np.sum(u * v))


def analyze_end(w, p, tol=None):
    """Laurent analysis of the end at the puncture ``p``.

    :returns: EndAnalysis
    :raises ConsistencyError: when the null relations between the
        leading coefficients fail beyond tolerance.
    """
    tol = resolve_tolerances(tol)
    mu = metric_order_at(w, p, tol)
    if mu > -2:
        raise ConsistencyError("Order %d at %r is not a complete end"
                               % (mu, p))
    k = -mu
    series = end_laurent(w, p, k - 1, tol)
    leading = series.coeffs[0]
    a_minus2 = series.coeffs[k - 2]
    residue = series.coeffs[k - 1]
    scale = float(np.linalg.norm(leading))

    if float(np.max(np.abs(residue.imag))) > tol.residue * max(1.0, scale):
        raise ConsistencyError("Residue %r at %r is not real" % (residue, p))
    a_minus1 = residue.real.copy()
    b = float(np.linalg.norm(a_minus1))

    if abs(_pairing(leading, leading)) > tol.bilinear * scale ** 2:
        raise ConsistencyError("Leading coefficient at %r is not null: %r"
                               % (p, _pairing(leading, leading)))
    if mu == -2:
        cross = abs(_pairing(a_minus2, a_minus1))
        if cross > tol.bilinear * scale * max(scale, b):
            raise ConsistencyError("<a_-2, a_-1> = %.3g at %r" % (cross, p))

    real_part, imag_part = leading.real, leading.imag
    a = float(np.linalg.norm(real_part))
    if abs(a - np.linalg.norm(imag_part)) > math.sqrt(tol.bilinear) * a:
        raise ConsistencyError("|Re a| != |Im a| at %r" % (p,))
    e1 = real_part / a
    e2 = _orthogonal_part(imag_part, (e1,))
    e2 = e2 / np.linalg.norm(e2)

    planar = b <= tol.planar * a
    if planar:
        e3 = _complete_frame(e1, e2)
    else:
        e3 = _orthogonal_part(a_minus1, (e1, e2))
        e3 = e3 / np.linalg.norm(e3)

    if k == 2:
        classification = EndType.PLANAR if planar else EndType.CATENOID
    else:
        classification = EndType.HIGHER_ORDER
    return EndAnalysis(puncture=p, mu=mu, k=k,
                       a_minus2=a_minus2, a_minus1=a_minus1, leading=leading,
                       frame=np.array([e1, e2, e3]), a=a, b=b,
                       classification=classification,
                       rotation_index=abs(k - 1), embedded=k == 2)


def _local_point(p, h):
    if is_infinity(p):
        return 1.0 / h
    return p + h


def _chart_radius(w, p):
    if is_infinity(p):
        farthest = max([abs(q) for q in w.finite_punctures] or [0.0])
        return min(1.0, 0.5 / farthest) if farthest > 0 else 1.0
    others = [abs(q - p) for q in w.finite_punctures if q != p]
    return min(1.0, 0.5 * min(others)) if others else 1.0


class EndChart(object):

    """The immersion near an end from the termwise integrated Laurent series.

    ``f(h) = K + 2 Re sum a_j h**(j+1)/(j+1) + 2 a_{-1} log|h|`` for
    ``|h|`` below the chart radius.
    """

    def __init__(self, puncture, series, radius, constant=None):
        self.puncture = puncture
        self.radius = radius
        exponents = series.order + np.arange(len(series.coeffs)) + 1
        keep = exponents != 0
        self._exponents = exponents[keep]
        self._weights = series.coeffs[keep] / exponents[keep][:, None]
        log_index = -1 - series.order
        if 0 <= log_index < len(series.coeffs):
            self._log = series.coeffs[log_index].real
        else:
            self._log = np.zeros(series.coeffs.shape[1])
        if constant is None:
            constant = np.zeros(series.coeffs.shape[1])
        self.constant = constant

    def point(self, h):
        return _local_point(self.puncture, h)

    def raw(self, h):
        h = np.atleast_1d(np.asarray(h, dtype=complex))
        powers = h[:, None] ** self._exponents[None, :]
        return (2.0 * np.dot(powers, self._weights).real
                + 2.0 * np.log(np.abs(h))[:, None] * self._log[None, :])

    def __call__(self, h):
        values = self.raw(h) + self.constant
        if np.ndim(h) == 0:
            return values[0]
        return values


def end_chart(w, p, depth=CFG_LAURENT_DEPTH, tol=None):
    """Local evaluator of the immersion near the end ``p``.

    The integration constant is calibrated by one immersion_eval call.
    """
    tol = resolve_tolerances(tol)
    series = end_laurent(w, p, depth, tol)
    radius = _chart_radius(w, p)
    chart = EndChart(p, series, radius)
    reference = radius / 2.0
    exact = immersion_eval(w, chart.point(reference), tol=tol)
    chart.constant = exact - chart.raw(reference)[0]
    return chart


class AsymptoticModel(object):

    """Catenoid or plane piece matching an order -2 end.

    ``f0(h) = K + 2 Re(-a_{-2}/h) + 2 a_{-1} log|h|``; ``K`` is the circle
    mean of ``f - f0 + K`` at the reference radius, so the model is fixed
    by matching rather than by translation.
    """

    def __init__(self, end, constant, reference=None):
        self.end = end
        self.constant = constant
        self.reference = reference

    def singular_part(self, h):
        return (2.0 * (-self.end.a_minus2 / h).real
                + 2.0 * self.end.a_minus1 * math.log(abs(h)))

    def local(self, z):
        if is_infinity(self.end.puncture):
            return 1.0 / z
        return z - self.end.puncture

    def __call__(self, z):
        return self.constant + self.singular_part(self.local(complex(z)))


def _circle(r, samples):
    theta = 2.0 * math.pi * np.arange(samples) / samples
    return r * np.exp(1j * theta)


def asymptotic_model(w, e, r_ref=None, samples=CFG_ASYMPTOTIC_SAMPLES,
                     tol=None):
    """Model surface of a catenoid-type or planar end.

    :raises ModelUndefinedError: for higher order ends.
    """
    tol = resolve_tolerances(tol)
    if e.classification not in (EndType.CATENOID, EndType.PLANAR):
        raise ModelUndefinedError("The end at %r is asymptotic to neither a "
                                  "catenoid nor a plane" % (e.puncture,))
    if r_ref is None:
        r_ref = min(CFG_ASYMPTOTIC_RADII[0], _chart_radius(w, e.puncture) / 2.0)
    model = AsymptoticModel(e, np.zeros(w.n))
    points = _circle(r_ref, samples)
    values = np.array([immersion_eval(w, _local_point(e.puncture, h), tol=tol)
                       for h in points])
    singular = np.array([model.singular_part(h) for h in points])
    model.constant = np.mean(values - singular, axis=0)
    model.reference = (r_ref, points, values)
    return model


def verify_asymptotic(w, e, radii=CFG_ASYMPTOTIC_RADII, model=None,
                      samples=CFG_ASYMPTOTIC_SAMPLES, tol=None):
    """Sup ratios ``|f - f0|/|h|`` on circles of decreasing radius.

    The immersion is continued radially from the largest circle inward.
    Bounded means the last ratio is within a growth factor of the
    ratio two radii earlier.

    :returns: AsymptoticCheck(radii, ratios, bounded)
    """
    tol = resolve_tolerances(tol)
    radii = list(radii)
    if model is None:
        model = asymptotic_model(w, e, radii[0], samples, tol)
    r_ref, points, values = model.reference
    if r_ref != radii[0] or len(points) != samples:
        points = _circle(radii[0], samples)
        values = np.array([immersion_eval(w, _local_point(e.puncture, h),
                                          tol=tol) for h in points])
    ratios = []
    previous = points
    for r in radii:
        current = previous * (r / abs(previous[0]))
        if r != radii[0]:
            values = np.array([
                value + segment_integral(w, _local_point(e.puncture, h0),
                                         _local_point(e.puncture, h1), tol)
                for value, h0, h1 in zip(values, previous, current)])
        residual = [np.linalg.norm(value - model(_local_point(e.puncture, h)))
                    for value, h in zip(values, current)]
        ratios.append(max(residual) / r)
        previous = current
    tail = ratios[-3:]
    bounded = tail[-1] <= CFG_BOUNDED_GROWTH * max(tail[0], CFG_BOUNDED_FLOOR)
    logger.debug("Asymptotic ratios at %r: %r" % (e.puncture, ratios))
    return AsymptoticCheck(radii, ratios, bounded)


def _section_point(chart, end, R, theta):
    """Solve ``|f(r e^{i theta})| = R`` on the chart."""
    def excess(r):
        return float(np.linalg.norm(chart(r * np.exp(1j * theta)))) - R

    alpha = float(np.linalg.norm(end.leading.real))
    guess = (2.0 * alpha / ((end.k - 1) * R)) ** (1.0 / (end.k - 1))
    lo, hi = guess / 4.0, min(4.0 * guess, chart.radius)
    for _ in range(40):
        if excess(lo) > 0:
            break
        lo /= 2.0
    while excess(hi) >= 0 and hi < chart.radius:
        hi = min(2.0 * hi, chart.radius)
    if excess(lo) <= 0 or excess(hi) >= 0:
        raise NumericInstabilityError(
            "No radius with |f| = %g at theta = %g" % (R, theta),
            {'theta': theta, 'R': R, 'bracket': (lo, hi),
             'values': (excess(lo), excess(hi))})
    r = brentq(excess, lo, hi, xtol=1e-14, rtol=1e-12)
    return chart(r * np.exp(1j * theta)) / R


def _section(chart, end, R, thetas):
    return np.array([_section_point(chart, end, R, theta) for theta in thetas])


def _plane_basis(end, curve):
    if end.mu == -2:
        return end.frame[0], end.frame[1]
    _, _, vt = svd(curve, full_matrices=False)
    return vt[0], vt[1]


def _winding(chart, end, R, samples):
    thetas = 2.0 * math.pi * np.arange(samples) / samples
    curve = _section(chart, end, R, thetas)
    u, v = _plane_basis(end, curve)
    for _ in range(CFG_WINDING_MAX_REFINEMENTS):
        angles = np.arctan2(np.dot(curve, v), np.dot(curve, u))
        steps = np.diff(np.append(angles, angles[0]))
        steps = (steps + math.pi) % (2.0 * math.pi) - math.pi
        coarse = np.flatnonzero(np.abs(steps) > math.pi / 4.0)
        if not len(coarse):
            break
        following = np.append(thetas[1:], 2.0 * math.pi)
        middles = (thetas[coarse] + following[coarse]) / 2.0
        logger.debug("Refining %d winding steps at R=%g" % (len(coarse), R))
        thetas = np.concatenate([thetas, middles])
        curve = np.vstack([curve, _section(chart, end, R, middles)])
        order = np.argsort(thetas)
        thetas, curve = thetas[order], curve[order]
    else:
        angles = np.arctan2(np.dot(curve, v), np.dot(curve, u))
        steps = np.diff(np.append(angles, angles[0]))
        steps = (steps + math.pi) % (2.0 * math.pi) - math.pi
    return int(round(abs(np.sum(steps)) / (2.0 * math.pi)))


def rotation_index_numeric(w, p, radii=CFG_ROTATION_RADII,
                           samples=CFG_WINDING_SAMPLES, tol=None):
    """Winding number of the normalized section ``E_R`` of the end.

    :raises NumericInstabilityError: when the winding differs between radii.
    """
    tol = resolve_tolerances(tol)
    end = analyze_end(w, p, tol)
    chart = end_chart(w, p, tol=tol)
    windings = [_winding(chart, end, R, samples) for R in radii]
    if len(set(windings)) != 1:
        raise NumericInstabilityError("Winding of the end at %r is not "
                                      "stable: %r" % (p, windings),
                                      {'radii': list(radii),
                                       'windings': windings})
    return windings[0]


def model_leading_term(end):
    """Unit vectors ``E1, E2`` of the limit circle of an order ``-k`` end.

    ``f/R -> cos((k-1)t) E1 + sin((k-1)t) E2`` with
    ``E1 + i E2 = -a_{-k}/|Re a_{-k}|``.
    """
    e1 = -end.leading.real / np.linalg.norm(end.leading.real)
    e2 = _orthogonal_part(-end.leading.imag, (e1,))
    return e1, e2 / np.linalg.norm(e2)


def limit_circle_deviation(w, p, R, samples=CFG_WINDING_SAMPLES, tol=None,
                           chart=None):
    """Sup distance between ``f/R`` on ``|f| = R`` and its limit circle."""
    tol = resolve_tolerances(tol)
    end = analyze_end(w, p, tol)
    if chart is None:
        chart = end_chart(w, p, tol=tol)
    e1, e2 = model_leading_term(end)
    thetas = 2.0 * math.pi * np.arange(samples) / samples
    curve = _section(chart, end, R, thetas)
    turns = (end.k - 1) * thetas
    model = np.outer(np.cos(turns), e1) + np.outer(np.sin(turns), e2)
    return float(np.max(np.linalg.norm(curve - model, axis=1)))
