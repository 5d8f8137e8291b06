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

import hashlib
import logging
import os
import unittest

from os.path import (join,
                     dirname)

from minimalkit.utils import (create_logger,
                              set_logging_level,
                              file_digest,
                              format_pi_multiple,
                              get_temporary_file)
from minimalkit.tests import (__file__ as folder,
                              catenoid_document)


class UtilsTests(unittest.TestCase):

    """Tests for all utility functions."""

    def test_create_logger_once(self):
        """Test that a logger created twice keeps a single handler."""
        first = create_logger("minimalkit.tests.once")
        second = create_logger("minimalkit.tests.once")
        self.assertIs(first, second)
        self.assertEqual(len(second.handlers), 1)
        self.assertFalse(second.propagate)

    def test_set_logging_level(self):
        """Test that every minimalkit logger follows the new level."""
        logger = create_logger("minimalkit.tests.level")
        other = logging.getLogger("elsewhere.tests.level")
        other.setLevel(logging.ERROR)
        try:
            set_logging_level(logging.DEBUG)
            self.assertEqual(logger.level, logging.DEBUG)
            self.assertEqual(other.level, logging.ERROR)
        finally:
            set_logging_level(logging.WARNING)

    def test_file_digest(self):
        """Test the SHA-256 digest of a sample document."""
        path = join(dirname(folder), catenoid_document)
        with open(path, 'rb') as fd:
            expected = hashlib.sha256(fd.read()).hexdigest()
        self.assertEqual(file_digest(path), expected)
        self.assertEqual(file_digest(path, chunk_size=7), expected)

    def test_format_pi_multiple(self):
        """Test formatting exact multiples of pi."""
        self.assertEqual(format_pi_multiple(0), "0")
        self.assertEqual(format_pi_multiple(1), u"π")
        self.assertEqual(format_pi_multiple(-1), u"-π")
        self.assertEqual(format_pi_multiple(-4), u"-4·π")
        self.assertEqual(format_pi_multiple(6), u"6·π")
        self.assertEqual(format_pi_multiple(0.5), u"1/2·π")

    def test_get_temporary_file(self):
        """Test that temporary files exist, closed and prefixed."""
        path = get_temporary_file(suffix='.wd')
        try:
            self.assertTrue(os.path.exists(path))
            self.assertTrue(os.path.basename(path).startswith('minimalkit_'))
            self.assertTrue(path.endswith('.wd'))
        finally:
            os.remove(path)


if __name__ == '__main__':
    unittest.main()
