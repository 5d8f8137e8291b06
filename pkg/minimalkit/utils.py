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

"""Utility functions for Minimal Kit."""

import os
import hashlib
import logging

from fractions import Fraction
from tempfile import mkstemp

from .config import CFG_LOGGING_LEVEL


def create_logger(name,
                  filename=None,
                  logging_level=CFG_LOGGING_LEVEL):
    """Create a logger object.

    Handlers are attached only once per logger name, so module level
    loggers can be created at import time without duplicating output.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    formatter = logging.Formatter(('%(asctime)s - %(name)s - '
                                   '%(levelname)-8s - %(message)s'))

    if filename:
        fh = logging.FileHandler(filename=filename)
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    ch = logging.StreamHandler()
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    logger.setLevel(logging_level)
    logger.propagate = False

    return logger


def set_logging_level(logging_level):
    """Set the level of every minimalkit logger already created."""
    for name in list(logging.Logger.manager.loggerDict):
        if name.startswith('minimalkit'):
            logging.getLogger(name).setLevel(logging_level)


def file_digest(path, chunk_size=1024 * 8):
    """Return the SHA-256 hex digest of a file."""
    digest = hashlib.sha256()
    with open(path, 'rb') as fd:
        for chunk in iter(lambda: fd.read(chunk_size), b''):
            digest.update(chunk)
    return digest.hexdigest()


def format_pi_multiple(multiple):
    """Format an exact multiple of pi, eg -4 --> '-4·π', 1/2 --> '1/2·π'."""
    multiple = Fraction(multiple)
    if multiple == 0:
        return "0"
    if multiple == 1:
        return "π"
    if multiple == -1:
        return "-π"
    return u"%s·π" % (multiple,)


def get_temporary_file(prefix="minimalkit_",
                       suffix="",
                       directory=None):
    """Generate a safe and closed filepath."""
    try:
        file_fd, filepath = mkstemp(prefix=prefix,
                                    suffix=suffix,
                                    dir=directory)
        os.close(file_fd)
    except IOError as e:
        try:
            os.remove(filepath)
        except Exception:
            pass
        raise e
    return filepath
