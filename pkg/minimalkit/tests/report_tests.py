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


"""Unit tests for validation and analysis reports."""

import json
import unittest

from minimalkit import __version__
from minimalkit.catalog import (catenoid,
                                plane,
                                generalized_jorge_meeks,
                                holomorphic_counterexample)
from minimalkit.complex_rational import RationalMap, is_infinity
from minimalkit.ends import EndType
from minimalkit.report import (validate,
                               build_report,
                               report_to_dict,
                               report_to_json,
                               format_validation,
                               format_summary)
from minimalkit.weierstrass import WeierstrassData, InvalidDatumError


def nonnull_datum():
    return WeierstrassData([RationalMap([1.0]), RationalMap([]),
                            RationalMap([])], label='nonnull')


class ValidationTests(unittest.TestCase):

    """Test the checks run before any analysis."""

    def test_catenoid_is_valid(self):
        """Test that the catenoid passes every check."""
        validation = validate(catenoid().data)
        self.assertTrue(validation.ok)
        self.assertTrue(validation.complete)
        self.assertEqual([mu for _, mu in validation.orders], [-2, -2])
        self.assertEqual(validation.branch_points, [])

    def test_nonnull_is_rejected(self):
        """Test that a non null datum fails and names its defect."""
        validation = validate(nonnull_datum())
        self.assertFalse(validation.ok)
        lines = format_validation(validation)
        self.assertEqual(lines[0], "null condition: FAILED (defect 1)")
        self.assertIn("  coefficient of z^0: 1", lines)

    def test_incomplete_end(self):
        """Test that an end of order -1 is not complete."""
        w = WeierstrassData([RationalMap([1.0], [0.0, 1.0]),
                             RationalMap([1j], [0.0, 1.0]),
                             RationalMap([])],
                            punctures=[0.0])
        validation = validate(w)
        self.assertFalse(validation.complete)
        self.assertFalse(validation.ok)

    def test_unlisted_pole_is_rejected(self):
        """Test that a pole missing from the punctures fails validation."""
        w = WeierstrassData(catenoid().data.phi, punctures=[0j],
                            basepoint=0.5)
        validation = validate(w)
        self.assertFalse(validation.ok)
        self.assertEqual(len(validation.missing_poles), 1)
        self.assertTrue(is_infinity(validation.missing_poles[0]))
        self.assertIn("pole inf: not listed as a puncture",
                      format_validation(validation))
        self.assertRaises(InvalidDatumError, build_report, w)

    def test_invalid_datum_is_not_analyzed(self):
        """Test that build_report refuses invalid data."""
        self.assertRaises(InvalidDatumError, build_report, nonnull_datum())


class AnalysisReportTests(unittest.TestCase):

    """Test the analysis report and its serializations."""

    def test_jorge_meeks_report(self):
        """Test d = 4, TC = -8 pi and three embedded ends for m = 2."""
        report = build_report(generalized_jorge_meeks(2).data, numeric=False)
        self.assertEqual(report.curvature.d, 4)
        self.assertEqual(report.curvature.tc_multiple, -8)
        self.assertTrue(report.verdicts.co_equality)
        self.assertTrue(report.verdicts.main_theorem)
        self.assertEqual(len(report.ends), 3)
        self.assertTrue(all(end.embedded for end in report.ends))
        self.assertIsNone(report.numeric_rotation)
        self.assertEqual(report.version, __version__)

    def test_counterexample_report(self):
        """Test the verdicts of the holomorphic counterexample."""
        report = build_report(holomorphic_counterexample().data)
        self.assertFalse(report.verdicts.co_equality)
        self.assertTrue(report.verdicts.main_theorem)
        zero = report.ends[0]
        self.assertEqual(zero.classification, EndType.HIGHER_ORDER)
        self.assertEqual(zero.k, 3)
        self.assertEqual(report.numeric_rotation, [2, 1])

    def test_json_document(self):
        """Test the structured document of the plane."""
        report = build_report(plane().data, input_hash='abc')
        document = json.loads(report_to_json(report))
        self.assertEqual(document['input_hash'], 'abc')
        self.assertEqual(document['curvature']['tc_algebraic'], '0')
        self.assertEqual(document['curvature']['d'], 0)
        self.assertEqual(len(document['ends']), 1)
        self.assertEqual(document['ends'][0]['puncture'], 'inf')
        self.assertEqual(document['ends'][0]['classification'], 'Planar')
        self.assertEqual(document['ends'][0]['rotation_index_numeric'], 1)
        self.assertTrue(document['verdicts']['main_theorem'])

    def test_pi_multiples_are_symbolic(self):
        """Test that algebraic right hand sides are printed as k·π."""
        document = report_to_dict(build_report(catenoid().data,
                                               numeric=False))
        self.assertEqual(document['curvature']['tc_algebraic'], u'-4·π')
        self.assertEqual(document['curvature']['co_rhs'], u'-4·π')
        self.assertIsNone(document['curvature']['tc_numeric'])

    def test_json_is_deterministic(self):
        """Test that two reports of the same datum serialize identically."""
        first = report_to_json(build_report(catenoid().data))
        second = report_to_json(build_report(catenoid().data))
        self.assertEqual(first, second)

    def test_summary(self):
        """Test the human readable summary."""
        summary = format_summary(build_report(catenoid().data, numeric=False))
        self.assertIn("Gauss map degree d = 2", summary)
        self.assertIn(u"total curvature = -4·π", summary)
        self.assertIn("Chern-Osserman bound = -4·π, equality TRUE", summary)
        self.assertTrue(summary.endswith("Main Theorem cross-check: pass\n"))


if __name__ == '__main__':
    unittest.main()
