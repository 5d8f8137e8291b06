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

"""Read and write Weierstrass data documents with lxml.

A document looks like::

    <weierstrass n="3" label="catenoid">
      <component>
        <num><c re="1.0" im="0.0"/><c re="0.0" im="0.0"/>...</num>
        <den><c re="0.0" im="0.0"/>...</den>
      </component>
      ...
      <punctures><point re="0.0" im="0.0"/><point at="inf"/></punctures>
      <basepoint re="0.5" im="0.0"/>
    </weierstrass>

Coefficients are listed in ascending powers.
"""

from lxml import etree

from .config import resolve_tolerances
from .complex_rational import INFINITY, is_infinity, RationalMap
from .weierstrass import WeierstrassData
from .utils import create_logger

logger = create_logger("minimalkit.etree_utils")


class WeierstrassXMLError(Exception):

    """Raised when a Weierstrass document cannot be read."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "line %s, column %s: %s" % (line, column or 0, message)
        super(WeierstrassXMLError, self).__init__(message)
        self.line = line
        self.column = column


def _fail(element, message):
    raise WeierstrassXMLError(message, line=element.sourceline, column=0)


def _read_float(element, name):
    try:
        return float(element.attrib[name])
    except KeyError:
        _fail(element, "<%s> misses the %r attribute" % (element.tag, name))
    except ValueError:
        _fail(element, "<%s %s=%r> is not a number"
              % (element.tag, name, element.attrib[name]))


def _read_complex(element):
    return complex(_read_float(element, 're'), _read_float(element, 'im'))


def _read_coefficients(component, tag):
    holder = component.find(tag)
    if holder is None:
        _fail(component, "<component> misses <%s>" % (tag,))
    coefficients = []
    for child in holder:
        if child.tag != 'c':
            _fail(child, "Unexpected <%s> in <%s>" % (child.tag, tag))
        coefficients.append(_read_complex(child))
    return coefficients


def _read_point(element):
    if element.get('at') == 'inf':
        return INFINITY
    return _read_complex(element)


def element_to_weierstrass(root, tol=None):
    """Build a WeierstrassData from a parsed ``<weierstrass>`` element.

    Components must be written in reduced form so the coefficients read
    are the coefficients kept.
    """
    tol = resolve_tolerances(tol)
    if root.tag != 'weierstrass':
        _fail(root, "Root element must be <weierstrass>, got <%s>"
              % (root.tag,))
    components = root.findall('component')
    phi = []
    for component in components:
        numerator = _read_coefficients(component, 'num')
        denominator = _read_coefficients(component, 'den')
        if not any(denominator):
            _fail(component, "Denominator is the zero polynomial")
        rational = RationalMap(numerator, denominator)
        if rational.reduced(tol) is not rational:
            _fail(component, "Numerator and denominator share a root, write "
                  "the component in reduced form")
        phi.append(rational)
    declared = root.get('n')
    if declared is not None:
        try:
            declared = int(declared)
        except ValueError:
            _fail(root, "n=%r is not an integer" % (declared,))
        if declared != len(phi):
            _fail(root, "n=%d but %d components were given"
                  % (declared, len(phi)))
    punctures = None
    holder = root.find('punctures')
    if holder is not None:
        punctures = [_read_point(point) for point in holder.findall('point')]
    basepoint = None
    element = root.find('basepoint')
    if element is not None:
        basepoint = _read_complex(element)
    return WeierstrassData(phi, punctures=punctures, basepoint=basepoint,
                           label=root.get('label', ''), tol=tol,
                           reduce=False)


def parse_weierstrass(source, tol=None):
    """Parse a Weierstrass document from a path or a file object.

    :raises WeierstrassXMLError: with line and column on malformed input.
    """
    parser = etree.XMLParser(remove_comments=True, remove_blank_text=True)
    try:
        tree = etree.parse(source, parser)
    except etree.XMLSyntaxError as err:
        line, column = err.position
        raise WeierstrassXMLError(err.msg, line=line, column=column)
    return element_to_weierstrass(tree.getroot(), tol=tol)


def parse_weierstrass_string(text, tol=None):
    """Parse a Weierstrass document given as bytes or text."""
    if not isinstance(text, bytes):
        text = text.encode('utf-8')
    parser = etree.XMLParser(remove_comments=True, remove_blank_text=True)
    try:
        root = etree.fromstring(text, parser)
    except etree.XMLSyntaxError as err:
        line, column = err.position
        raise WeierstrassXMLError(err.msg, line=line, column=column)
    return element_to_weierstrass(root, tol=tol)


def _complex_element(parent, tag, value):
    value = complex(value)
    return etree.SubElement(parent, tag, attrib={'re': repr(value.real),
                                                 'im': repr(value.imag)})


def weierstrass_to_element(w):
    """Serialize a datum; floats keep every bit through ``repr``."""
    root = etree.Element('weierstrass', attrib={'n': str(w.n),
                                                'label': w.label or ''})
    for component in w.phi:
        element = etree.SubElement(root, 'component')
        for tag, poly in (('num', component.num), ('den', component.den)):
            holder = etree.SubElement(element, tag)
            for coefficient in poly.coeffs:
                _complex_element(holder, 'c', coefficient)
    punctures = etree.SubElement(root, 'punctures')
    for point in w.punctures:
        if is_infinity(point):
            etree.SubElement(punctures, 'point', attrib={'at': 'inf'})
        else:
            _complex_element(punctures, 'point', point)
    _complex_element(root, 'basepoint', w.basepoint)
    return root


def weierstrass_to_string(w):
    return etree.tostring(weierstrass_to_element(w), pretty_print=True,
                          xml_declaration=True, encoding='UTF-8')


def write_weierstrass(w, path):
    """Write a datum document to ``path``."""
    with open(path, 'wb') as fd:
        fd.write(weierstrass_to_string(w))
    logger.info("Wrote %r to %s" % (w.label, path))
