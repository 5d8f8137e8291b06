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

"""Gauss map degree, total curvature and the curvature inequalities.

Every right hand side is an integer multiple of pi; the multiples are
kept as integers and the float values are derived from them.
"""

import math

from collections import namedtuple

import numpy as np

from scipy.linalg import svd

from .config import (CFG_CURVATURE_ITERATIONS,
                     CFG_CURVATURE_SAMPLES,
                     resolve_tolerances)
from .complex_rational import (ComplexPoly,
                               is_infinity,
                               same_point,
                               point_sort_key,
                               roots,
                               DegenerateInputError)
from .weierstrass import (cleared_numerators,
                          branch_points,
                          metric_order_at,
                          minimal_separation)
from .utils import create_logger

logger = create_logger("minimalkit.curvature")


class ConvergenceError(Exception):

    """Raised when the numeric total curvature does not stabilize."""

    def __init__(self, message, estimates=()):
        super(ConvergenceError, self).__init__(message)
        self.estimates = tuple(estimates)


GaussMap = namedtuple('GaussMap', ['psi', 'degree'])

Inequalities = namedtuple('Inequalities', ['gackstatter_multiple',
                                           'ejiri_multiple',
                                           'ejiri_equality',
                                           'applicable'])


class CurvatureReport(namedtuple('CurvatureReport',
                                 ['d', 'tc_multiple', 'tc_numeric', 'genus',
                                  'm', 'chi', 'co_multiple', 'co_equality',
                                  'co_cross_check', 'gackstatter_multiple',
                                  'full', 'l', 'ejiri_multiple',
                                  'ejiri_equality'],
                                 defaults=(None,) * 14)):

    """Curvature invariants of a datum, pi multiples kept exact."""

    __slots__ = ()

    @property
    def tc_algebraic(self):
        return math.pi * self.tc_multiple

    @property
    def co_rhs(self):
        return math.pi * self.co_multiple

    @property
    def gackstatter_rhs(self):
        if self.gackstatter_multiple is None:
            return None
        return math.pi * self.gackstatter_multiple

    @property
    def ejiri_rhs(self):
        if self.ejiri_multiple is None:
            return None
        return math.pi * self.ejiri_multiple


def _divisor_candidates(numerators, denominators, tol):
    candidates = []
    for p in list(denominators) + list(numerators):
        if p.degree() < 1:
            continue
        for root, _ in roots(p, tol):
            if not any(same_point(root, known, tol.point)
                       for known in candidates):
                candidates.append(root)
    return sorted(candidates, key=point_sort_key)


def gauss_map(w, tol=None):
    """Gauss map ``[psi_1 : ... : psi_n]`` with its projective degree.

    Components are cleared over the product of the distinct denominators
    and the common polynomial factor is removed.  Common roots are found
    from the small factors, so multiplicities stay exact integers.
    """
    tol = resolve_tolerances(tol)
    cleared, denominators = cleared_numerators(w.phi)
    nonzero = [j for j, p in enumerate(cleared) if not p.is_zero()]
    if not nonzero:
        raise DegenerateInputError("All components of the datum are zero")
    numerators = [w.phi[j].num for j in nonzero]
    common = []
    for root in _divisor_candidates(numerators, denominators, tol):
        orders = []
        for j in nonzero:
            order = w.phi[j].num.order_at(root, tol)
            for den in denominators:
                if den != w.phi[j].den and den.degree() >= 1:
                    order += den.order_at(root, tol)
            orders.append(order)
        multiplicity = min(orders)
        if multiplicity:
            common.append((root, multiplicity))
    divisor = ComplexPoly.from_roots([root for root, k in common
                                      for _ in range(k)])
    psi = []
    for p in cleared:
        if p.is_zero():
            psi.append(p)
            continue
        quotient, remainder = p.divmod(divisor)
        if not remainder.is_zero() and remainder.norm() > tol.cluster * p.norm():
            logger.warning("Inexact division by the common factor, "
                           "remainder %.3g" % (remainder.norm(),))
        psi.append(quotient)
    degree = max(cleared[j].degree() for j in nonzero) - divisor.degree()
    return GaussMap(tuple(psi), degree)


def total_curvature_algebraic(g):
    """Total curvature ``-2 pi d`` of a Gauss map."""
    return -2.0 * math.pi * g.degree


def degree_from_orders(w, tol=None):
    """Gauss map degree from the end orders and the branch orders.

    Uses ``d = -2 - sum mu_j - sum beta``; it must agree with gauss_map.
    """
    tol = resolve_tolerances(tol)
    orders = [metric_order_at(w, p, tol) for p in w.punctures]
    branches = [order for _, order in branch_points(w, tol)]
    return -2 - sum(orders) - sum(branches)


def _boundary_flux(w, center, radius, samples):
    """Flux of ``grad log lambda`` out of a circle, periodic trapezoid rule."""
    previous = None
    count = samples
    while True:
        theta = 2.0 * math.pi * np.arange(count) / count
        offsets = radius * np.exp(1j * theta)
        points = center + offsets
        values = w.evaluate(points).T
        slopes = w.evaluate_derivative(points).T
        energy = np.sum(np.abs(values) ** 2, axis=1)
        radial = (np.sum(np.conj(values) * slopes, axis=1) * offsets).real
        flux = 2.0 * math.pi * float(np.mean(radial / energy))
        if previous is not None and abs(flux - previous) <= 1e-12 * max(1.0, abs(flux)):
            return flux
        if count >= 2 ** 14:
            return flux
        previous = flux
        count *= 2


def total_curvature_numeric(w, tol=None, samples=CFG_CURVATURE_SAMPLES,
                            iterations=CFG_CURVATURE_ITERATIONS):
    """Total curvature by the Green identity on the excised sphere.

    ``int K dA = -int Delta log lambda``, turned into circle fluxes around
    the punctures and branch points and on a large outer circle.  The
    inner radius shrinks and the outer one grows until two successive
    estimates agree to ``tol.curvature``.

    :raises ConvergenceError: carrying the last two estimates.
    """
    tol = resolve_tolerances(tol)
    centers = list(w.finite_punctures)
    for point, _ in branch_points(w, tol):
        if not is_infinity(point):
            centers.append(point)
    separation = minimal_separation(centers)
    inner = 0.1 * min(separation, 1.0)
    outer = 10.0 * (1.0 + max([abs(c) for c in centers] or [0.0]))
    estimates = []
    for iteration in range(iterations):
        flux = _boundary_flux(w, 0j, outer, samples)
        for center in centers:
            flux -= _boundary_flux(w, center, inner, samples)
        estimate = 0.0 - flux
        logger.debug("Total curvature iteration %d: eps=%.3g R=%.3g -> %.12g"
                     % (iteration, inner, outer, estimate))
        estimates.append(estimate)
        if len(estimates) > 1:
            change = abs(estimates[-1] - estimates[-2])
            if change <= tol.curvature * max(1.0, abs(estimate)):
                return estimate
        inner /= 4.0
        outer *= 4.0
    raise ConvergenceError("Total curvature did not converge in %d "
                           "iterations: %r" % (iterations, estimates[-2:]),
                           estimates[-2:])


def chern_osserman(w, tol=None):
    """Chern-Osserman fields of the curvature report.

    Equality is the integer comparison ``-2d == 2(chi - m)``; it is
    cross-checked against every end having order -2.
    """
    tol = resolve_tolerances(tol)
    g = gauss_map(w, tol)
    m = len(w.punctures)
    chi = 2 - m
    tc_multiple = -2 * g.degree
    co_multiple = 2 * (chi - m)
    equality = tc_multiple == co_multiple
    orders = [metric_order_at(w, p, tol) for p in w.punctures]
    cross_check = equality == all(order == -2 for order in orders)
    if not cross_check:
        logger.warning("Chern-Osserman equality %s disagrees with the end "
                       "orders %r of %r" % (equality, orders, w.label))
    return CurvatureReport(d=g.degree, tc_multiple=tc_multiple, genus=0,
                           m=m, chi=chi, co_multiple=co_multiple,
                           co_equality=equality, co_cross_check=cross_check)


def _coefficient_matrix(psi):
    width = max(max(p.degree() for p in psi), 0) + 1
    matrix = np.zeros((len(psi), width), dtype=complex)
    for j, p in enumerate(psi):
        matrix[j, :len(p.coeffs)] = p.coeffs
    return matrix


def _numerical_rank(matrix, tol):
    values = svd(matrix, compute_uv=False)
    if not len(values) or values[0] == 0:
        return 0
    return int(np.sum(values > tol.rank * values[0]))


def fullness_and_degeneracy(w, tol=None):
    """Fullness of the immersion and the Gauss image degeneracy ``l``.

    Full means no real vector annihilates the components, checked as the
    real rank of the stacked real and imaginary coefficient matrix.

    :returns: (full, l)
    """
    tol = resolve_tolerances(tol)
    matrix = _coefficient_matrix(gauss_map(w, tol).psi)
    real_rank = _numerical_rank(np.hstack([matrix.real, matrix.imag]), tol)
    complex_rank = _numerical_rank(matrix, tol)
    return real_rank == w.n, w.n - complex_rank


def gackstatter_and_ejiri(w, tol=None):
    """Right hand sides of the Gackstatter and Ejiri inequalities.

    Both are stated for full immersions; other data still get values and
    ``applicable`` is False.
    """
    tol = resolve_tolerances(tol)
    g = gauss_map(w, tol)
    full, l = fullness_and_degeneracy(w, tol)
    m = len(w.punctures)
    chi = 2 - m
    gackstatter = 2 * chi + m - 1 - w.n
    ejiri = chi + m - 2 * w.n + 2 * l
    if not full:
        logger.warning("%r is not full, the Gackstatter and Ejiri bounds do "
                       "not apply" % (w.label,))
    return Inequalities(gackstatter, ejiri, -2 * g.degree == ejiri, full)


def curvature_report(w, numeric=True, tol=None):
    """Every curvature invariant of a datum in one report."""
    tol = resolve_tolerances(tol)
    report = chern_osserman(w, tol)
    full, l = fullness_and_degeneracy(w, tol)
    inequalities = gackstatter_and_ejiri(w, tol)
    tc_numeric = total_curvature_numeric(w, tol) if numeric else None
    return report._replace(tc_numeric=tc_numeric, full=full, l=l,
                           gackstatter_multiple=inequalities.gackstatter_multiple,
                           ejiri_multiple=inequalities.ejiri_multiple,
                           ejiri_equality=inequalities.ejiri_equality)
