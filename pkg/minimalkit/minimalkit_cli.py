#!/usr/bin/env python
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

"""Command line front-end: verify, analyze, catalog and mesh."""

import logging
import os
import sys

from argparse import ArgumentParser

import argcomplete

from minimalkit import __version__
from minimalkit.catalog import (get_entry,
                                list_entries,
                                UnknownEntryError,
                                CatalogParameterError)
from minimalkit.complex_rational import DegenerateInputError
from minimalkit.config import (get_tolerances,
                               CFG_MESH_R_MIN,
                               CFG_MESH_R_MAX,
                               CFG_MESH_RESOLUTION)
from minimalkit.config_utils import Bunch
from minimalkit.ends import ConsistencyError, NumericInstabilityError
from minimalkit.curvature import ConvergenceError
from minimalkit.etree_utils import (parse_weierstrass,
                                    weierstrass_to_string,
                                    WeierstrassXMLError)
from minimalkit.mesh import sample_domain, build_mesh, export_obj
from minimalkit.report import (validate,
                               build_report,
                               format_validation,
                               format_summary,
                               report_to_json)
from minimalkit.utils import (file_digest,
                              get_temporary_file,
                              set_logging_level)
from minimalkit.weierstrass import InvalidDatumError, NearSingularityError

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2

REJECTIONS = (InvalidDatumError, DegenerateInputError, ConsistencyError,
              NumericInstabilityError, ConvergenceError, NearSingularityError)


class UsageError(Exception):

    """Raised when the command line arguments cannot be used."""


def _error(message):
    print(message, file=sys.stderr)


def _read_datum(settings):
    return parse_weierstrass(settings.input, tol=settings.tolerances)


def _parse_axes(text, n):
    try:
        axes = tuple(int(x) - 1 for x in text.split(','))
    except ValueError:
        axes = ()
    if len(axes) != 3 or not all(0 <= axis < n for axis in axes):
        raise UsageError("--project expects three 1-based axes between 1 "
                         "and %d like 1,2,3, got %r" % (n, text))
    return axes


def _write_output(path, data):
    """Write ``data`` next to ``path`` and move it in place when complete."""
    mode = 'wb' if isinstance(data, bytes) else 'w'
    directory = os.path.dirname(os.path.abspath(path))
    temporary = get_temporary_file(suffix='.part', directory=directory)
    try:
        with open(temporary, mode) as fd:
            fd.write(data)
        os.replace(temporary, path)
    except Exception:
        os.remove(temporary)
        raise


def call_verify(settings):
    w = _read_datum(settings)
    validation = validate(w, settings.tolerances)
    for line in format_validation(validation):
        _error(line)
    if not validation.ok:
        _error("%s: rejected" % (settings.input,))
        return EXIT_REJECTED
    _error("%s: ok" % (settings.input,))
    return EXIT_OK


def call_analyze(settings):
    w = _read_datum(settings)
    validation = validate(w, settings.tolerances)
    if not validation.ok:
        for line in format_validation(validation):
            _error(line)
        _error("%s: validation failed, not analyzing" % (settings.input,))
        return EXIT_REJECTED
    report = build_report(w, input_hash=file_digest(settings.input),
                          numeric=settings.numeric, validation=validation,
                          tol=settings.tolerances)
    sys.stdout.write(format_summary(report))
    if settings.json:
        _write_output(settings.json, report_to_json(report))
    return EXIT_OK


def call_catalog(settings):
    if settings.name is None:
        for name in list_entries():
            print(name)
        return EXIT_OK
    entry = get_entry(settings.name, settings.param)
    if settings.output:
        _write_output(settings.output, weierstrass_to_string(entry.data))
    else:
        sys.stdout.write(weierstrass_to_string(entry.data).decode('utf-8'))
    return EXIT_OK


def call_mesh(settings):
    w = _read_datum(settings)
    projection = None
    if settings.project:
        projection = _parse_axes(settings.project, w.n)
    try:
        tri = sample_domain(w, settings.rmin, settings.rmax, settings.res)
    except ValueError as err:
        raise UsageError(str(err))
    mesh = build_mesh(w, tri, settings.tolerances)
    for path in export_obj(mesh, settings.output, projection):
        _error("wrote %s" % (path,))
    return EXIT_OK


def call_command(settings):
    commands = {'verify': call_verify,
                'analyze': call_analyze,
                'catalog': call_catalog,
                'mesh': call_mesh}

    try:
        return commands[settings.selected_subparser](settings)
    except WeierstrassXMLError as err:
        _error("%s: %s" % (settings.input, err))
        return EXIT_USAGE
    except UnknownEntryError as err:
        _error(err.args[0])
        return EXIT_USAGE
    except (CatalogParameterError, UsageError) as err:
        _error(str(err))
        return EXIT_USAGE
    except REJECTIONS as err:
        _error("rejected: %s" % (err,))
        return EXIT_REJECTED
    except IOError as err:
        _error(str(err))
        return EXIT_USAGE


def get_parser():
    argparser = ArgumentParser(prog='minimalkit_cli',
                               description="Check and analyze Weierstrass "
                                           "data of complete minimal surfaces.")
    argparser.add_argument('--version', action='version',
                           version='%(prog)s ' + __version__)
    argparser.add_argument('--tol', type=float, default=1.0,
                           help="factor applied to every tolerance")
    argparser.add_argument('--verbose', '-v', action='count', default=0)

    subparsers = argparser.add_subparsers(dest='selected_subparser')
    subparsers.required = True

    verify_parser = subparsers.add_parser('verify')
    analyze_parser = subparsers.add_parser('analyze')
    catalog_parser = subparsers.add_parser('catalog')
    mesh_parser = subparsers.add_parser('mesh')

    verify_parser.add_argument('input')

    analyze_parser.add_argument('input')
    analyze_parser.add_argument('--json')
    analyze_parser.add_argument('--numeric', dest='numeric',
                                action='store_true', default=True)
    analyze_parser.add_argument('--no-numeric', dest='numeric',
                                action='store_false')

    catalog_parser.add_argument('name', nargs='?')
    catalog_parser.add_argument('--param', type=int)
    catalog_parser.add_argument('-o', '--output')

    mesh_parser.add_argument('input')
    mesh_parser.add_argument('-o', '--output', required=True)
    mesh_parser.add_argument('--rmin', type=float, default=CFG_MESH_R_MIN)
    mesh_parser.add_argument('--rmax', type=float, default=CFG_MESH_R_MAX)
    mesh_parser.add_argument('--res', type=int, default=CFG_MESH_RESOLUTION)
    mesh_parser.add_argument('--project')

    return argparser


def main(argv=None):
    argparser = get_parser()
    argcomplete.autocomplete(argparser)

    '''
    Transforms the argparse arguments from Namespace to dict and then to Bunch
    Therefore it is not necessary to access the arguments using the dict syntax
    The settings can be called like regular vars on the settings object
    '''

    settings = Bunch(vars(argparser.parse_args(argv)))

    if settings.verbose:
        set_logging_level(logging.DEBUG if settings.verbose > 1
                          else logging.INFO)
    try:
        settings.tolerances = get_tolerances(settings.tol)
    except ValueError as err:
        _error(str(err))
        return EXIT_USAGE

    return call_command(settings)


if __name__ == '__main__':
    sys.exit(main())
