# -*- coding: utf-8 -*-
#
# This file is part of MODCURVE.BIELL.
#
# MODCURVE.BIELL is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
#
# Copyright 2026 by its authors.
# Some rights reserved, see README and LICENSE.

import doctest
import os
import unittest
from configparser import ConfigParser
from os.path import join

from modcurve.biell import PRODUCT_NAME
from pkg_resources import resource_listdir

# Flag names pytest accepts in doctest_optionflags
PYTEST_FLAGS = (
    "DONT_ACCEPT_TRUE_FOR_1", "DONT_ACCEPT_BLANKLINE", "NORMALIZE_WHITESPACE",
    "ELLIPSIS", "IGNORE_EXCEPTION_DETAIL", "COMPARISON_FLAGS",
    "ALLOW_UNICODE", "ALLOW_BYTES", "NUMBER",
)

SETUP_CFG = join(os.path.dirname(__file__), "..", "..", "..", "..",
                 "setup.cfg")

# Option flags for doctests
flags = doctest.ELLIPSIS | doctest.NORMALIZE_WHITESPACE | doctest.REPORT_NDIFF


def doctest_suite():
    suite = unittest.TestSuite()
    for doctestfile in get_doctest_files():
        suite.addTests([
            doctest.DocFileSuite(
                doctestfile,
                package="modcurve.biell.tests",
                optionflags=flags
            )
        ])
    return suite


def get_doctest_files():
    """Returns a list with the doctest files
    """
    files = resource_listdir(PRODUCT_NAME, "tests/doctests")
    files = filter(lambda file_name: file_name.endswith(".rst"), files)
    return map(lambda file_name: join("doctests", file_name), sorted(files))


def load_tests(loader, tests, pattern):
    tests.addTests(doctest_suite())
    return tests


class DoctestCollectionTestCase(unittest.TestCase):

    def test_every_doctest_file_is_collected(self):
        files = list(get_doctest_files())
        self.assertIn(join("doctests", "Atlas.rst"), files)
        self.assertEqual(doctest_suite().countTestCases(), len(files))

    def test_no_module_level_test_functions(self):
        # pytest would collect them as tests
        names = [name for name, value in globals().items()
                 if name.startswith("test") and callable(value)]
        self.assertEqual(names, [])

    def test_pytest_option_flags(self):
        if not os.path.exists(SETUP_CFG):
            self.skipTest("setup.cfg is not available")
        config = ConfigParser()
        config.read(SETUP_CFG)
        names = config.get("tool:pytest", "doctest_optionflags").split()
        self.assertTrue(names)
        for name in names:
            self.assertIn(name, PYTEST_FLAGS)
