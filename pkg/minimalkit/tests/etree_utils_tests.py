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


"""Unit tests for reading and writing Weierstrass documents."""

import os
import unittest

from os.path import (join,
                     dirname)

import numpy as np

from lxml import etree

from minimalkit.catalog import catenoid, generalized_jorge_meeks
from minimalkit.complex_rational import is_infinity
from minimalkit.etree_utils import (parse_weierstrass,
                                    parse_weierstrass_string,
                                    weierstrass_to_element,
                                    weierstrass_to_string,
                                    write_weierstrass,
                                    WeierstrassXMLError)
from minimalkit.utils import get_temporary_file
from minimalkit.tests import (__file__ as folder,
                              catenoid_document,
                              malformed_document)


class ParseTests(unittest.TestCase):

    """Test that documents are parsed into data."""

    def test_catenoid_document(self):
        """Test the sample catenoid document."""
        w = parse_weierstrass(join(dirname(folder), catenoid_document))
        self.assertEqual(w.label, 'catenoid')
        self.assertEqual(w.n, 3)
        self.assertEqual(w.punctures[0], 0j)
        self.assertTrue(is_infinity(w.punctures[1]))
        self.assertEqual(w.basepoint, 0.5)
        self.assertEqual(w.phi, catenoid().data.phi)

    def test_file_object(self):
        """Test parsing from an open file."""
        with open(join(dirname(folder), catenoid_document), 'rb') as fd:
            self.assertEqual(parse_weierstrass(fd).n, 3)

    def test_malformed_document(self):
        """Test that syntax errors carry a line number."""
        with self.assertRaises(WeierstrassXMLError) as context:
            parse_weierstrass(join(dirname(folder), malformed_document))
        self.assertEqual(context.exception.line, 6)
        self.assertIn('line 6', str(context.exception))

    def test_wrong_root(self):
        """Test that the root element is checked."""
        self.assertRaises(WeierstrassXMLError, parse_weierstrass_string,
                          '<surface/>')

    def test_component_count(self):
        """Test that the declared n must match the components."""
        document = ('<weierstrass n="4">'
                    '<component><num><c re="1" im="0"/></num>'
                    '<den><c re="1" im="0"/></den></component>'
                    '<component><num><c re="0" im="-1"/></num>'
                    '<den><c re="1" im="0"/></den></component>'
                    '<component><num/><den><c re="1" im="0"/></den>'
                    '</component></weierstrass>')
        self.assertRaises(WeierstrassXMLError, parse_weierstrass_string,
                          document)

    def test_zero_denominator(self):
        """Test that an empty denominator is rejected with its line."""
        document = ('<weierstrass>\n'
                    '<component><num><c re="1" im="0"/></num>'
                    '<den/></component>\n'
                    '</weierstrass>')
        with self.assertRaises(WeierstrassXMLError) as context:
            parse_weierstrass_string(document)
        self.assertEqual(context.exception.line, 2)

    def test_unreduced_component(self):
        """Test that a component with a common root is refused."""
        with open(join(dirname(folder), catenoid_document)) as fd:
            text = fd.read()
        text = text.replace(
            '<num><c re="1.0" im="0.0"/><c re="0.0" im="0.0"/>'
            '<c re="-1.0" im="0.0"/></num>',
            '<num><c re="0.0" im="0.0"/><c re="1.0" im="0.0"/>'
            '<c re="0.0" im="0.0"/><c re="-1.0" im="0.0"/></num>', 1)
        text = text.replace(
            '<den><c re="0.0" im="0.0"/><c re="0.0" im="0.0"/>'
            '<c re="2.0" im="0.0"/></den>',
            '<den><c re="0.0" im="0.0"/><c re="0.0" im="0.0"/>'
            '<c re="0.0" im="0.0"/><c re="2.0" im="0.0"/></den>', 1)
        with self.assertRaises(WeierstrassXMLError) as context:
            parse_weierstrass_string(text)
        self.assertEqual(context.exception.line, 4)
        self.assertIn('reduced form', str(context.exception))

    def test_coefficients_are_kept(self):
        """Test that a reduced component is read without rescaling."""
        with open(join(dirname(folder), catenoid_document)) as fd:
            text = fd.read()
        text = text.replace('re="-1.0"', 're="-2.0"', 1)
        text = text.replace('<c re="1.0" im="0.0"/><c re="0.0"',
                            '<c re="2.0" im="0.0"/><c re="0.0"', 1)
        text = text.replace('<c re="2.0" im="0.0"/></den>',
                            '<c re="4.0" im="0.0"/></den>', 1)
        first = parse_weierstrass_string(text).phi[0]
        self.assertTrue(np.array_equal(first.num.coeffs, [2.0, 0.0, -2.0]))
        self.assertTrue(np.array_equal(first.den.coeffs, [0.0, 0.0, 4.0]))

    def test_bad_numbers(self):
        """Test missing and unreadable coefficient attributes."""
        for coefficient in ('<c re="1"/>', '<c re="one" im="0"/>'):
            document = ('<weierstrass><component><num>%s</num>'
                        '<den><c re="1" im="0"/></den></component>'
                        '</weierstrass>' % (coefficient,))
            self.assertRaises(WeierstrassXMLError, parse_weierstrass_string,
                              document)


class WriteTests(unittest.TestCase):

    """Test that data are written back faithfully."""

    def test_coefficients_survive(self):
        """Test that irrational coefficients come back bit for bit."""
        w = generalized_jorge_meeks(3).data
        again = parse_weierstrass_string(weierstrass_to_string(w))
        self.assertEqual(again.phi, w.phi)
        self.assertEqual(again.punctures, w.punctures)
        self.assertEqual(again.basepoint, w.basepoint)
        self.assertEqual(again.label, w.label)

    def test_element_layout(self):
        """Test the element structure of a written document."""
        root = weierstrass_to_element(catenoid().data)
        self.assertEqual(root.get('n'), '3')
        self.assertEqual(len(root.findall('component')), 3)
        self.assertEqual(root.find('punctures')[1].get('at'), 'inf')
        self.assertEqual(root.find('basepoint').get('re'), '0.5')

    def test_declaration(self):
        """Test that the serialized bytes carry an XML declaration."""
        text = weierstrass_to_string(catenoid().data)
        self.assertTrue(text.startswith(b"<?xml version='1.0' encoding='UTF-8'?>"))
        self.assertEqual(etree.fromstring(text).tag, 'weierstrass')

    def test_write_file(self):
        """Test writing a document to disk."""
        path = get_temporary_file(suffix='.wd')
        try:
            write_weierstrass(catenoid().data, path)
            self.assertEqual(parse_weierstrass(path).phi, catenoid().data.phi)
        finally:
            os.remove(path)


if __name__ == '__main__':
    unittest.main()
