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

"""Built-in Weierstrass data with their expected invariants."""

import math

from collections import namedtuple, OrderedDict

import numpy as np

from .config import CFG_CATALOG_MAX_ORDER
from .complex_rational import ComplexPoly, RationalMap, INFINITY
from .ends import EndType
from .weierstrass import WeierstrassData


class CatalogParameterError(ValueError):

    """Raised when a catalog constructor gets an unsupported parameter."""


class UnknownEntryError(KeyError):

    """Raised when no catalog entry has the requested name."""


Expected = namedtuple('Expected', ['n', 'd', 'tc_multiple', 'm', 'chi',
                                   'co_equality', 'punctures',
                                   'classifications', 'rotation_indices',
                                   'full', 'l', 'ejiri_equality'])

CatalogEntry = namedtuple('CatalogEntry', ['name', 'data', 'expected'])


def _monomial(power, coefficient):
    return ComplexPoly.monomial(power, coefficient)


def catenoid():
    """phi = ((1 - z^2)/(2 z^2), i(1 + z^2)/(2 z^2), 1/z)."""
    twice_square = _monomial(2, 2.0)
    phi = [RationalMap([1.0, 0.0, -1.0], twice_square),
           RationalMap([1j, 0.0, 1j], twice_square),
           RationalMap([1.0], _monomial(1, 1.0))]
    expected = Expected(n=3, d=2, tc_multiple=-4, m=2, chi=0,
                        co_equality=True, punctures=[0j, INFINITY],
                        classifications=[EndType.CATENOID, EndType.CATENOID],
                        rotation_indices=[1, 1], full=True, l=0,
                        ejiri_equality=True)
    return CatalogEntry('catenoid', WeierstrassData(phi, label='catenoid'),
                        expected)


def plane():
    """phi = (1/2, -i/2, 0), the plane through the origin."""
    phi = [RationalMap([0.5]), RationalMap([-0.5j]), RationalMap([])]
    expected = Expected(n=3, d=0, tc_multiple=0, m=1, chi=1,
                        co_equality=True, punctures=[INFINITY],
                        classifications=[EndType.PLANAR],
                        rotation_indices=[1], full=False, l=2,
                        ejiri_equality=True)
    return CatalogEntry('plane', WeierstrassData(phi, label='plane'),
                        expected)


def enneper():
    """phi = ((1 - z^2)/2, i(1 + z^2)/2, z)."""
    phi = [RationalMap([0.5, 0.0, -0.5]),
           RationalMap([0.5j, 0.0, 0.5j]),
           RationalMap([0.0, 1.0])]
    expected = Expected(n=3, d=2, tc_multiple=-4, m=1, chi=1,
                        co_equality=False, punctures=[INFINITY],
                        classifications=[EndType.HIGHER_ORDER],
                        rotation_indices=[3], full=True, l=0,
                        ejiri_equality=True)
    return CatalogEntry('enneper', WeierstrassData(phi, label='enneper'),
                        expected)


def generalized_jorge_meeks(m):
    """Genus zero surface in R^(2m+1) with m+1 catenoid ends.

    Components ``g_j/2``, ``h_j/2`` for ``0 <= j < m`` with
    ``g_j = z^j (1 - z^(2m-2j)) / D`` and ``h_j = i z^j (1 + z^(2m-2j)) / D``,
    then ``sqrt(m) z^m / D`` where ``D = (z^(m+1) - 1)^2``.

    :raises CatalogParameterError: unless ``1 <= m <= 6``.
    """
    try:
        valid = int(m) == m and 1 <= m <= CFG_CATALOG_MAX_ORDER
    except (TypeError, ValueError):
        valid = False
    if not valid:
        raise CatalogParameterError("generalized-jorge-meeks needs an integer "
                                    "1 <= m <= %d, got %r"
                                    % (CFG_CATALOG_MAX_ORDER, m))
    m = int(m)
    root = _monomial(m + 1, 1.0) - 1.0
    denominator = root * root
    phi = []
    for j in range(m):
        low, high = _monomial(j, 0.5), _monomial(2 * m - j, 0.5)
        phi.append(RationalMap(low - high, denominator))
        phi.append(RationalMap((low + high) * 1j, denominator))
    phi.append(RationalMap(_monomial(m, math.sqrt(m)), denominator))
    punctures = [complex(np.exp(2j * math.pi * k / (m + 1)))
                 for k in range(m + 1)]
    expected = Expected(n=2 * m + 1, d=2 * m, tc_multiple=-4 * m, m=m + 1,
                        chi=1 - m, co_equality=True, punctures=punctures,
                        classifications=[EndType.CATENOID] * (m + 1),
                        rotation_indices=[1] * (m + 1), full=True, l=0,
                        ejiri_equality=True)
    label = 'generalized-jorge-meeks-%d' % (m,)
    return CatalogEntry(label, WeierstrassData(phi, label=label), expected)


def holomorphic_counterexample():
    """The holomorphic curve (z, 1/z^2) in R^4, total curvature -6 pi."""
    cube = _monomial(3, 1.0)
    phi = [RationalMap([0.5]), RationalMap([-0.5j]),
           RationalMap([-1.0], cube), RationalMap([1j], cube)]
    expected = Expected(n=4, d=3, tc_multiple=-6, m=2, chi=0,
                        co_equality=False, punctures=[0j, INFINITY],
                        classifications=[EndType.HIGHER_ORDER, EndType.PLANAR],
                        rotation_indices=[2, 1], full=True, l=2,
                        ejiri_equality=False)
    return CatalogEntry('holomorphic-counterexample',
                        WeierstrassData(phi, label='holomorphic-counterexample'),
                        expected)


CATALOG = OrderedDict([
    ('catenoid', catenoid),
    ('plane', plane),
    ('enneper', enneper),
    ('generalized-jorge-meeks', generalized_jorge_meeks),
    ('holomorphic-counterexample', holomorphic_counterexample),
])

PARAMETRIZED = ('generalized-jorge-meeks',)


def list_entries():
    """Names of the catalog entries, in catalog order."""
    return list(CATALOG)


def get_entry(name, param=None):
    """Build the catalog entry ``name``.

    :param param: the order ``m`` for parametrized entries, default 2.
    :raises UnknownEntryError: for unknown names.
    """
    try:
        constructor = CATALOG[name]
    except KeyError:
        raise UnknownEntryError("Unknown catalog entry %r, choose from: %s"
                                % (name, ', '.join(list_entries())))
    if name in PARAMETRIZED:
        return constructor(2 if param is None else param)
    if param is not None:
        raise CatalogParameterError("%s takes no parameter" % (name,))
    return constructor()
