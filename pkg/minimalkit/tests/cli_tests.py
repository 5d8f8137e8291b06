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


"""Unit tests for the command line."""

import io
import json
import os
import shutil
import tempfile
import unittest

from contextlib import redirect_stdout, redirect_stderr
from unittest import mock
from os.path import (join,
                     dirname)

from minimalkit.etree_utils import parse_weierstrass
from minimalkit.minimalkit_cli import (main,
                                       EXIT_OK,
                                       EXIT_REJECTED,
                                       EXIT_USAGE)
from minimalkit.tests import (__file__ as folder,
                              catenoid_document,
                              nonnull_document,
                              unlisted_pole_document,
                              malformed_document)


def run(*argv):
    """Run the command line and capture (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(list(argv))
    return status, out.getvalue(), err.getvalue()


class CommandLineTests(unittest.TestCase):

    """Test the exit codes and outputs of every subcommand."""

    def setUp(self):
        self.directory = tempfile.mkdtemp(prefix='minimalkit_')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, name):
        return join(self.directory, name)

    def test_verify_catenoid(self):
        """Test that the catenoid document verifies."""
        status, _, err = run('verify', join(dirname(folder),
                                            catenoid_document))
        self.assertEqual(status, EXIT_OK)
        self.assertIn('ok', err)

    def test_verify_nonnull(self):
        """Test that a non null datum is rejected with its defect."""
        status, _, err = run('verify', join(dirname(folder),
                                            nonnull_document))
        self.assertEqual(status, EXIT_REJECTED)
        self.assertIn('null condition: FAILED (defect 1)', err)

    def test_verify_malformed(self):
        """Test that a malformed document is a usage error with its line."""
        status, _, err = run('verify', join(dirname(folder),
                                            malformed_document))
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn('line 6', err)

    def test_verify_missing_file(self):
        """Test that a missing input is a usage error."""
        status, _, _ = run('verify', self.path('missing.wd'))
        self.assertEqual(status, EXIT_USAGE)

    def test_verify_unlisted_pole(self):
        """Test that a document leaving out a pole is rejected."""
        status, _, err = run('verify', join(dirname(folder),
                                            unlisted_pole_document))
        self.assertEqual(status, EXIT_REJECTED)
        self.assertIn('pole inf: not listed as a puncture', err)

    def test_catalog_listing(self):
        """Test that catalog without a name lists the entries."""
        status, out, _ = run('catalog')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.split(), ['catenoid', 'plane', 'enneper',
                                       'generalized-jorge-meeks',
                                       'holomorphic-counterexample'])

    def test_catalog_unknown(self):
        """Test that an unknown entry is a usage error naming the others."""
        status, _, err = run('catalog', 'nosuch')
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn('generalized-jorge-meeks', err)

    def test_catalog_bad_parameter(self):
        """Test that an out of range order is a usage error."""
        status, _, _ = run('catalog', 'generalized-jorge-meeks',
                           '--param', '9')
        self.assertEqual(status, EXIT_USAGE)

    def test_catalog_jorge_meeks(self):
        """Test writing the m = 3 surface: n = 7 with 4 ends."""
        output = self.path('gjm3.wd')
        status, _, _ = run('catalog', 'generalized-jorge-meeks',
                           '--param', '3', '-o', output)
        self.assertEqual(status, EXIT_OK)
        w = parse_weierstrass(output)
        self.assertEqual(w.n, 7)
        self.assertEqual(len(w.punctures), 4)

    def test_catalog_output_is_complete(self):
        """Test that -o leaves only the finished document behind."""
        output = self.path('catenoid.wd')
        status, _, _ = run('catalog', 'catenoid', '-o', output)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(os.listdir(self.directory), ['catenoid.wd'])
        self.assertEqual(parse_weierstrass(output).label, 'catenoid')

    def test_catalog_to_stdout(self):
        """Test that the document goes to stdout without -o."""
        status, out, _ = run('catalog', 'plane')
        self.assertEqual(status, EXIT_OK)
        self.assertIn('<weierstrass n="3" label="plane">', out)

    def test_analyze_plane(self):
        """Test the summary and the JSON document of the plane."""
        source, report = self.path('plane.wd'), self.path('plane.json')
        run('catalog', 'plane', '-o', source)
        status, out, _ = run('analyze', source, '--json', report)
        self.assertEqual(status, EXIT_OK)
        self.assertIn('total curvature = 0', out)
        self.assertIn('Planar', out)
        with open(report) as fd:
            document = json.load(fd)
        self.assertEqual(document['curvature']['d'], 0)
        self.assertEqual(len(document['input_hash']), 64)

    def test_analyze_counterexample(self):
        """Test that the counterexample is strict with a k = 3 end."""
        source = self.path('counterexample.wd')
        run('catalog', 'holomorphic-counterexample', '-o', source)
        status, out, _ = run('analyze', source, '--no-numeric')
        self.assertEqual(status, EXIT_OK)
        self.assertIn('total curvature = -6·π', out)
        self.assertIn('equality FALSE', out)
        self.assertIn('mu = -3, HigherOrder', out)

    def test_analyze_failed_write(self):
        """Test that a failed JSON write leaves no partial file."""
        source = self.path('plane.wd')
        run('catalog', 'plane', '-o', source)
        with mock.patch('minimalkit.minimalkit_cli.report_to_json',
                        return_value=12345):
            self.assertRaises(TypeError, run, 'analyze', source,
                              '--no-numeric', '--json',
                              self.path('plane.json'))
        self.assertEqual(os.listdir(self.directory), ['plane.wd'])

    def test_numeric_errors_are_not_usage_errors(self):
        """Test that a ValueError raised by the analysis propagates."""
        with mock.patch('minimalkit.minimalkit_cli.build_report',
                        side_effect=ValueError('array is empty')):
            self.assertRaises(ValueError, run, 'analyze',
                              join(dirname(folder), catenoid_document))

    def test_analyze_is_deterministic(self):
        """Test that analyze prints the same bytes twice."""
        source = self.path('catenoid.wd')
        run('catalog', 'catenoid', '-o', source)
        first = run('analyze', source)
        second = run('analyze', source)
        self.assertEqual(first[0], EXIT_OK)
        self.assertEqual(first[1], second[1])

    def test_analyze_refuses_invalid(self):
        """Test that analyze stops on a datum failing validation."""
        status, out, _ = run('analyze', join(dirname(folder),
                                             nonnull_document))
        self.assertEqual(status, EXIT_REJECTED)
        self.assertEqual(out, '')

    def test_mesh(self):
        """Test that mesh writes an OBJ file."""
        output = self.path('catenoid.obj')
        status, _, err = run('mesh', join(dirname(folder), catenoid_document),
                             '-o', output, '--res', '12', '--rmin', '0.05')
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(os.path.exists(output))
        self.assertIn('wrote %s' % (output,), err)

    def test_mesh_bad_projection(self):
        """Test that an unreadable --project is a usage error."""
        status, _, _ = run('mesh', join(dirname(folder), catenoid_document),
                           '-o', self.path('x.obj'), '--project', '1,2')
        self.assertEqual(status, EXIT_USAGE)

    def test_mesh_axis_out_of_range(self):
        """Test that a projection axis beyond n is a usage error."""
        status, _, err = run('mesh', join(dirname(folder),
                                          catenoid_document),
                             '-o', self.path('x.obj'), '--project', '1,2,9')
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn('between 1 and 3', err)
        self.assertEqual(os.listdir(self.directory), [])

    def test_mesh_bad_radii(self):
        """Test that r_min above r_max is a usage error."""
        status, _, _ = run('mesh', join(dirname(folder), catenoid_document),
                           '-o', self.path('x.obj'), '--rmin', '0.9',
                           '--rmax', '0.1')
        self.assertEqual(status, EXIT_USAGE)

    def test_bad_tolerance(self):
        """Test that a nonpositive --tol is a usage error."""
        status, _, _ = run('--tol', '0', 'catalog')
        self.assertEqual(status, EXIT_USAGE)

    def test_missing_subcommand(self):
        """Test that argparse exits with status 2 without a subcommand."""
        with self.assertRaises(SystemExit) as context:
            run()
        self.assertEqual(context.exception.code, 2)


if __name__ == '__main__':
    unittest.main()
