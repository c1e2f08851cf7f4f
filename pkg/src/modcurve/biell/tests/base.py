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

import os
import unittest

from modcurve.biell.config import FULL_TESTS_ENV
from modcurve.biell.datafiles import load_fixtables
from modcurve.biell.datafiles import load_genus_tables


def full_run():
    """Returns whether the expensive sweeps are enabled
    """
    return os.environ.get(FULL_TESTS_ENV, "") not in ("", "0")


def golden_genus_tables():
    return load_genus_tables()


def golden_fixtables():
    return load_fixtables()


class BaseTestCase(unittest.TestCase):
    """Use for the property sweeps. Sweeps pick their bound with sweep()
    """

    def sweep(self, default, full):
        return full if full_run() else default

    def assertQuotientGenus(self, fixed, g, h):
        """Asserts the fixed point count of an involution matches the genera
        of the curve and of its quotient
        """
        self.assertGreaterEqual(h, 0)
        self.assertGreaterEqual(fixed, 0)
        self.assertEqual(fixed, 2 * g + 2 - 4 * h)

    def assertSameGenus(self, W, U, genus):
        self.assertEqual(genus(W), genus(U), "{} {} and {} {}".format(
            W.N, W.label(), U.N, U.label()))
