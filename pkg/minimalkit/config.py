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

"""Basic config for Minimal Kit."""

import os
import logging

from collections import namedtuple


def _get_config_environment_variable():
    return os.environ.get('MINIMALKIT_CONFIG_PATH', '')


def _get_current_virtualenv():
    return os.environ.get("VIRTUAL_ENV", "")


CFG_POSSIBLE_CONFIG_PATHS = [_get_config_environment_variable(),
                             (_get_current_virtualenv()
                              + '/var/minimalkit/user_config.cfg'),
                             '/etc/minimalkit/user_config.cfg',
                             os.path.join(os.path.dirname(__file__),
                                          os.pardir, 'user_config.cfg')]
CFG_CONFIG_PATH = ''

for loc in CFG_POSSIBLE_CONFIG_PATHS:
    if loc and os.path.exists(loc):
        CFG_CONFIG_PATH = loc
        break

CFG_LOGGING_LEVEL = logging.WARNING

# Tolerances.  All of them scale together with the CLI --tol factor.
CFG_ZERO_TOLERANCE = 1e-10
CFG_NULL_TOLERANCE = 1e-10
CFG_RESIDUE_TOLERANCE = 1e-10
CFG_QUADRATURE_TOLERANCE = 1e-10
CFG_RANK_TOLERANCE = 1e-8
CFG_PLANAR_TOLERANCE = 1e-8
CFG_BILINEAR_TOLERANCE = 1e-9
CFG_CURVATURE_TOLERANCE = 1e-3

# Two sphere points are the same when closer than this times (1 + |p|).
CFG_POINT_TOLERANCE = 1e-8

# Roots split by about eps**(1/k) for a k-fold root; candidate clusters are
# searched in this radius and then accepted by a derivative test.
CFG_CLUSTER_RADIUS = 1e-3

# Path integration
CFG_QUADRATURE_LIMIT = 500
CFG_PATH_CLEARANCE = 1e-3
CFG_DETOUR_RADIUS = 0.1

# Numeric total curvature
CFG_CURVATURE_ITERATIONS = 10
CFG_CURVATURE_SAMPLES = 256

# End geometry
CFG_LAURENT_DEPTH = 60
CFG_WINDING_SAMPLES = 720
CFG_WINDING_MAX_REFINEMENTS = 6
CFG_ROTATION_RADII = (1e2, 1e3, 1e4)
CFG_ASYMPTOTIC_RADII = (1e-1, 1e-2, 1e-3, 1e-4)
CFG_ASYMPTOTIC_SAMPLES = 32
CFG_BOUNDED_GROWTH = 10.0
CFG_BOUNDED_FLOOR = 1e-3

# Mesh
CFG_MESH_RING_RATIO = 1.3
CFG_MESH_R_MIN = 2e-2
CFG_MESH_R_MAX = 0.5
CFG_MESH_RESOLUTION = 32

CFG_CATALOG_MAX_ORDER = 6

Tolerances = namedtuple('Tolerances', ['zero', 'null', 'residue', 'quad',
                                       'rank', 'planar', 'bilinear',
                                       'curvature', 'cluster', 'point'])

DEFAULT_TOLERANCES = Tolerances(zero=CFG_ZERO_TOLERANCE,
                                null=CFG_NULL_TOLERANCE,
                                residue=CFG_RESIDUE_TOLERANCE,
                                quad=CFG_QUADRATURE_TOLERANCE,
                                rank=CFG_RANK_TOLERANCE,
                                planar=CFG_PLANAR_TOLERANCE,
                                bilinear=CFG_BILINEAR_TOLERANCE,
                                curvature=CFG_CURVATURE_TOLERANCE,
                                cluster=CFG_CLUSTER_RADIUS,
                                point=CFG_POINT_TOLERANCE)


def get_tolerances(scale=1.0, filename=None):
    """Return the tolerances, read from the config file and scaled.

    The optional ``[TOLERANCES]`` section of the config file overrides the
    defaults field by field; every value is then multiplied by ``scale``.

    :param scale: common factor applied to all tolerances.
    :type scale: float
    :param filename: INI file to read; defaults to ``CFG_CONFIG_PATH``.
    :type filename: string

    :returns: Tolerances
    """
    from .config_utils import load_config

    values = DEFAULT_TOLERANCES._asdict()
    filename = filename or CFG_CONFIG_PATH
    if filename and os.path.exists(filename):
        config = load_config(filename, {'TOLERANCES': []})
        section = getattr(config, 'TOLERANCES', None)
        if section is not None:
            for key in section.get_attributes():
                if key.lower() in values:
                    values[key.lower()] = float(getattr(section, key))
    if scale <= 0:
        raise ValueError("Tolerance scale must be positive, got %r" % (scale,))
    return Tolerances(**dict((key, value * scale)
                             for key, value in values.items()))


_CONFIGURED_TOLERANCES = []


def resolve_tolerances(tol):
    """Return ``tol`` or the configured defaults when it is None."""
    if tol is not None:
        return tol
    if not _CONFIGURED_TOLERANCES:
        _CONFIGURED_TOLERANCES.append(get_tolerances())
    return _CONFIGURED_TOLERANCES[0]
