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


"""Common data for tests."""

catenoid_document = 'data/catenoid.wd'
nonnull_document = 'data/nonnull.wd'
unlisted_pole_document = 'data/catenoid_no_infinity.wd'
malformed_document = 'data/malformed.wd'
sample_config = 'data/sample_config.cfg'

# Orders m of the generalized Jorge-Meeks family checked by the suites.
jorge_meeks_orders = (1, 2, 3, 4)
