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

"""INI config loading into attribute bunches."""

from configparser import ConfigParser


class Bunch(object):

    """Attribute access over a (nested) dictionary."""

    def __init__(self, kwds):
        tmp = {}
        for key, value in kwds.items():
            tmp[key] = Bunch(value) if isinstance(value, dict) else value

        self.__dict__.update(tmp)

    def get_attributes(self):
        return sorted(self.__dict__.keys())


def _read_section(config, section, working_dict):
    working_dict[section] = [item[0].upper() for item in config.items(section)]


def _get_sections_to_read_completely(config, working_dict):
    if working_dict == {}:
        return config.sections()
    return [key for key, value in working_dict.items()
            if value == [] and config.has_section(key)]


def _prepare_working_dict(config, section_option_dict):
    working_dict = dict(section_option_dict)

    for section in _get_sections_to_read_completely(config, working_dict):
        _read_section(config, section, working_dict)

    return dict((section, options) for section, options
                in working_dict.items() if config.has_section(section))


def load_config(filename=None, section_option_dict=None):
    """Return a Bunch object from the stated config file.

    NOTE: the values are not evaluated, they come back as strings.

    :param filename: the config file to read, in INI syntax::

        [TOLERANCES]
        zero = 1e-10
        rank = 1e-8

    :param section_option_dict: maps section names to the list of wanted
        options. If empty, everything is loaded. If a list is empty, the
        whole section is loaded. Missing sections are skipped.

    Example::

        config = load_config('user_config.cfg', {'TOLERANCES': []})
        config.TOLERANCES.ZERO
    """
    config = ConfigParser()
    config.read(filename)

    working_dict = _prepare_working_dict(config, section_option_dict or {})

    tmp_dict = {}

    for section, options in working_dict.items():
        tmp_dict[section] = {}
        for option in options:
            tmp_dict[section][option] = config.get(section, option)

    return Bunch(tmp_dict)
