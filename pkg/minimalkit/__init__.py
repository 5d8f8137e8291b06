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

"""Kit of tools to check Weierstrass data of complete minimal surfaces."""

__version__ = "0.1.0"
