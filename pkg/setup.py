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

"""Kit of tools to check and analyze Weierstrass data of minimal surfaces."""


from setuptools import setup, find_packages

setup(
    name="MinimalKit",
    version="0.1.0",
    packages=find_packages(),
    package_data={'minimalkit.tests': ['data/*.wd', 'data/*.cfg']},
    python_requires=">=3.6",
    install_requires=[
        "argcomplete>=0.8.0",
        "lxml>=3.1.2",
        "numpy>=1.17",
        "scipy>=1.4",
    ],
    author="Minimal Kit developers",
    description=__doc__,
    license="GPLv2",
    test_suite="minimalkit.tests",
    entry_points={
        'console_scripts': [
            'minimalkit_cli = minimalkit.minimalkit_cli:main'
        ]
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v2 (GPLv2)',
        'Programming Language :: Python :: 3',
    ]
)
