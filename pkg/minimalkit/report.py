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

"""Validation and analysis reports of a Weierstrass datum."""

import json

from collections import namedtuple

from . import __version__
from .config import resolve_tolerances
from .complex_rational import is_infinity
from .curvature import curvature_report
from .ends import analyze_end, rotation_index_numeric, EndType
from .weierstrass import (validate_null,
                          check_residues_real,
                          metric_order_at,
                          branch_points,
                          residue_sum,
                          missing_poles,
                          InvalidDatumError)
from .utils import create_logger, format_pi_multiple

logger = create_logger("minimalkit.report")


class Validation(namedtuple('Validation', ['null', 'residues', 'orders',
                                           'branch_points', 'residue_sum',
                                           'missing_poles'])):

    """Outcome of the null, residue and completeness checks."""

    __slots__ = ()

    @property
    def complete(self):
        return all(mu <= -2 for _, mu in self.orders)

    @property
    def ok(self):
        return (self.null.ok and self.residues.ok and self.complete
                and not self.missing_poles)


Verdicts = namedtuple('Verdicts', ['co_equality', 'all_model_ends',
                                   'all_embedded', 'main_theorem'])

AnalysisReport = namedtuple('AnalysisReport', ['label', 'input_hash',
                                               'validation', 'curvature',
                                               'ends', 'numeric_rotation',
                                               'verdicts', 'version'])


def validate(w, tol=None):
    """Run every check a datum must pass before analysis."""
    tol = resolve_tolerances(tol)
    null = validate_null(w, tol)
    residues = check_residues_real(w, tol)
    orders = [(p, metric_order_at(w, p, tol)) for p in w.punctures]
    for p, mu in orders:
        if mu > -2:
            logger.warning("Order %d > -2 at %r: the end is not complete"
                           % (mu, p))
    missing = missing_poles(w, tol)
    if missing:
        logger.warning("Poles %r of %r are not listed as punctures"
                       % (missing, w.label))
    return Validation(null, residues, orders, branch_points(w, tol),
                      residue_sum(w, tol), missing)


def build_report(w, input_hash='', numeric=True, validation=None, tol=None):
    """Analyze a validated datum.

    :raises InvalidDatumError: when the datum fails validation.
    """
    tol = resolve_tolerances(tol)
    if validation is None:
        validation = validate(w, tol)
    if not validation.ok:
        raise InvalidDatumError("%r failed validation" % (w.label,))
    curvature = curvature_report(w, numeric=numeric, tol=tol)
    ends = [analyze_end(w, p, tol) for p in w.punctures]
    rotation = None
    if numeric:
        rotation = [rotation_index_numeric(w, p, tol=tol) for p in w.punctures]
    model_ends = all(e.classification in (EndType.CATENOID, EndType.PLANAR)
                     for e in ends)
    embedded = all(e.embedded for e in ends)
    agree = curvature.co_equality == model_ends == embedded
    if not agree:
        logger.error("Equality %s, model ends %s, embedded ends %s disagree "
                     "for %r" % (curvature.co_equality, model_ends, embedded,
                                 w.label))
    verdicts = Verdicts(curvature.co_equality, model_ends, embedded, agree)
    return AnalysisReport(w.label, input_hash, validation, curvature, ends,
                          rotation, verdicts, __version__)


def _point(point):
    if is_infinity(point):
        return "inf"
    return [point.real, point.imag]


def _complex_vector(vector):
    return [[float(x.real), float(x.imag)] for x in vector]


def _real_vector(vector):
    return [float(x) for x in vector]


def _pi(multiple):
    return None if multiple is None else format_pi_multiple(multiple)


def validation_to_dict(validation):
    return {
        'null_ok': validation.null.ok,
        'null_defect': validation.null.defect,
        'null_offending': [list(item) for item in validation.null.offending],
        'residues_ok': validation.residues.ok,
        'residue_worst_imag': validation.residues.worst_imag,
        'residue_sum': _complex_vector(validation.residue_sum),
        'orders': [{'puncture': _point(p), 'mu': mu}
                   for p, mu in validation.orders],
        'branch_points': [{'point': _point(p), 'order': order}
                          for p, order in validation.branch_points],
        'missing_poles': [_point(p) for p in validation.missing_poles],
        'complete': validation.complete,
        'ok': validation.ok,
    }


def end_to_dict(end, numeric_rotation=None):
    return {
        'puncture': _point(end.puncture),
        'mu': end.mu,
        'k': end.k,
        'a_minus2': _complex_vector(end.a_minus2),
        'a_minus1': _real_vector(end.a_minus1),
        'frame': [_real_vector(e) for e in end.frame],
        'a': end.a,
        'b': end.b,
        'classification': end.classification,
        'rotation_index': end.rotation_index,
        'rotation_index_numeric': numeric_rotation,
        'embedded': end.embedded,
    }


def curvature_to_dict(curvature):
    return {
        'd': curvature.d,
        'tc_algebraic': _pi(curvature.tc_multiple),
        'tc_numeric': curvature.tc_numeric,
        'genus': curvature.genus,
        'm': curvature.m,
        'chi': curvature.chi,
        'co_rhs': _pi(curvature.co_multiple),
        'co_equality': curvature.co_equality,
        'co_cross_check': curvature.co_cross_check,
        'gackstatter_rhs': _pi(curvature.gackstatter_multiple),
        'full': curvature.full,
        'l': curvature.l,
        'ejiri_rhs': _pi(curvature.ejiri_multiple),
        'ejiri_equality': curvature.ejiri_equality,
    }


def report_to_dict(report):
    rotation = report.numeric_rotation or [None] * len(report.ends)
    return {
        'label': report.label,
        'input_hash': report.input_hash,
        'version': report.version,
        'validation': validation_to_dict(report.validation),
        'curvature': curvature_to_dict(report.curvature),
        'ends': [end_to_dict(end, index)
                 for end, index in zip(report.ends, rotation)],
        'verdicts': dict(report.verdicts._asdict()),
    }


def report_to_json(report):
    """Deterministic JSON text of a report."""
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True,
                      ensure_ascii=False) + "\n"


def _yes(flag):
    return "TRUE" if flag else "FALSE"


def format_validation(validation):
    lines = ["null condition: %s (defect %.3g)"
             % ("ok" if validation.null.ok else "FAILED",
                validation.null.defect),
             "residues real: %s (worst imaginary part %.3g)"
             % ("ok" if validation.residues.ok else "FAILED",
                validation.residues.worst_imag)]
    for power, magnitude in validation.null.offending:
        lines.append("  coefficient of z^%d: %.3g" % (power, magnitude))
    for p, mu in validation.orders:
        lines.append("end %s: order %d%s" % (_point(p), mu,
                                             "" if mu <= -2 else
                                             " (not complete)"))
    for p, order in validation.branch_points:
        lines.append("branch point %s of order %d" % (_point(p), order))
    for p in validation.missing_poles:
        lines.append("pole %s: not listed as a puncture" % (_point(p),))
    return lines


def format_summary(report):
    """Human readable summary of a report."""
    curvature = report.curvature
    lines = ["%s (minimalkit %s)" % (report.label or "<unnamed>",
                                     report.version)]
    lines.extend(format_validation(report.validation))
    lines.append("Gauss map degree d = %d" % (curvature.d,))
    lines.append("total curvature = %s" % (_pi(curvature.tc_multiple),))
    if curvature.tc_numeric is not None:
        lines.append("total curvature (quadrature) = %.9f"
                     % (curvature.tc_numeric,))
    lines.append("ends m = %d, Euler number chi = %d"
                 % (curvature.m, curvature.chi))
    lines.append("Chern-Osserman bound = %s, equality %s"
                 % (_pi(curvature.co_multiple), _yes(curvature.co_equality)))
    lines.append("full = %s, l = %d" % (_yes(curvature.full), curvature.l))
    lines.append("Gackstatter bound = %s%s"
                 % (_pi(curvature.gackstatter_multiple),
                    "" if curvature.full else " (not full)"))
    lines.append("Ejiri bound = %s, equality %s"
                 % (_pi(curvature.ejiri_multiple),
                    _yes(curvature.ejiri_equality)))
    rotation = report.numeric_rotation or [None] * len(report.ends)
    for end, index in zip(report.ends, rotation):
        line = ("end %s: mu = %d, %s, rotation index %d, %s"
                % (_point(end.puncture), end.mu, end.classification,
                   end.rotation_index,
                   "embedded" if end.embedded else "not embedded"))
        if index is not None:
            line += " (numeric %d)" % (index,)
        lines.append(line)
    lines.append("Main Theorem cross-check: %s"
                 % ("pass" if report.verdicts.main_theorem else "FAIL"))
    return "\n".join(lines) + "\n"
